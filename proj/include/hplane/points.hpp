#pragma once

#include <hplane/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hplane {

enum class Plane { Dual, Double, Real };

inline std::string_view plane_name(Plane p) {
    switch (p) {
        case Plane::Dual: return "dual";
        case Plane::Double: return "double";
        case Plane::Real: return "real";
    }
    return "?";
}

/// A point of the real plane; also serves as the real or imaginary part of a
/// point in either four-dimensional plane.
struct RealPoint {
    Rational x;
    Rational z;

    friend bool operator==(const RealPoint& a, const RealPoint& b) { return a.x == b.x && a.z == b.z; }
    friend bool operator!=(const RealPoint& a, const RealPoint& b) { return !(a == b); }

    std::size_t hash() const { return detail::hash_combine(x.hash(), z.hash()); }
};

/// [x, y, z, w] = (x + y·eps, z + w·eps) in the dual plane.
struct DualPoint {
    Rational x, y, z, w;

    friend bool operator==(const DualPoint& a, const DualPoint& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z && a.w == b.w;
    }
    friend bool operator!=(const DualPoint& a, const DualPoint& b) { return !(a == b); }

    std::size_t hash() const {
        return detail::hash_combine(detail::hash_combine(x.hash(), y.hash()),
                                    detail::hash_combine(z.hash(), w.hash()));
    }
};

/// <x, y, z, w> in the double plane, in light-cone coordinates throughout.
struct DoublePoint {
    Rational x, y, z, w;

    friend bool operator==(const DoublePoint& a, const DoublePoint& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z && a.w == b.w;
    }
    friend bool operator!=(const DoublePoint& a, const DoublePoint& b) { return !(a == b); }

    std::size_t hash() const {
        return detail::hash_combine(detail::hash_combine(x.hash(), y.hash()),
                                    detail::hash_combine(z.hash(), w.hash()));
    }
};

inline RealPoint real_part(const DualPoint& p) { return {p.x, p.z}; }
inline RealPoint imaginary_part(const DualPoint& p) { return {p.y, p.w}; }
inline RealPoint real_part(const DoublePoint& p) { return {p.x, p.z}; }
inline RealPoint imaginary_part(const DoublePoint& p) { return {p.y, p.w}; }

template <class P>
struct plane_of;
template <>
struct plane_of<DualPoint> : std::integral_constant<Plane, Plane::Dual> {};
template <>
struct plane_of<DoublePoint> : std::integral_constant<Plane, Plane::Double> {};
template <>
struct plane_of<RealPoint> : std::integral_constant<Plane, Plane::Real> {};

/// Value of rho over the dual plane: [d1, d2].
struct DualDistance {
    Rational d1;
    Rational d2;

    friend bool operator==(const DualDistance& a, const DualDistance& b) {
        return a.d1 == b.d1 && a.d2 == b.d2;
    }
    friend bool operator!=(const DualDistance& a, const DualDistance& b) { return !(a == b); }
    friend bool operator<(const DualDistance& a, const DualDistance& b) {
        if (a.d1 != b.d1) return a.d1 < b.d1;
        return a.d2 < b.d2;
    }

    std::size_t hash() const { return detail::hash_combine(d1.hash(), d2.hash()); }
};

/// Value of rho over the double plane: <d1, d2>, light-cone components.
struct DoubleDistance {
    Rational d1;
    Rational d2;

    friend bool operator==(const DoubleDistance& a, const DoubleDistance& b) {
        return a.d1 == b.d1 && a.d2 == b.d2;
    }
    friend bool operator!=(const DoubleDistance& a, const DoubleDistance& b) { return !(a == b); }
    friend bool operator<(const DoubleDistance& a, const DoubleDistance& b) {
        if (a.d1 != b.d1) return a.d1 < b.d1;
        return a.d2 < b.d2;
    }

    std::size_t hash() const { return detail::hash_combine(d1.hash(), d2.hash()); }
};

template <class P>
struct distance_of;
template <>
struct distance_of<DualPoint> {
    using type = DualDistance;
};
template <>
struct distance_of<DoublePoint> {
    using type = DoubleDistance;
};
template <>
struct distance_of<RealPoint> {
    using type = Rational;  // squared Euclidean distance, kept squared to stay rational
};
template <class P>
using distance_t = typename distance_of<P>::type;

/// rho over the dual plane: [(dx)^2 + (dz)^2, 2(dx·dy + dz·dw)].
inline DualDistance rho(const DualPoint& p, const DualPoint& q) {
    const Rational dx = p.x - q.x;
    const Rational dy = p.y - q.y;
    const Rational dz = p.z - q.z;
    const Rational dw = p.w - q.w;
    return {dx * dx + dz * dz, Rational(2) * (dx * dy + dz * dw)};
}

/// rho over the double plane: <(dx)^2 + (dz)^2, (dy)^2 + (dw)^2>.
inline DoubleDistance rho(const DoublePoint& p, const DoublePoint& q) {
    const Rational dx = p.x - q.x;
    const Rational dy = p.y - q.y;
    const Rational dz = p.z - q.z;
    const Rational dw = p.w - q.w;
    return {dx * dx + dz * dz, dy * dy + dw * dw};
}

/// Squared Euclidean distance on the real plane.
inline Rational rho(const RealPoint& p, const RealPoint& q) {
    const Rational dx = p.x - q.x;
    const Rational dz = p.z - q.z;
    return dx * dx + dz * dz;
}

inline DualDistance rho_dual(const DualPoint& p, const DualPoint& q) { return rho(p, q); }
inline DoubleDistance rho_double(const DoublePoint& p, const DoublePoint& q) { return rho(p, q); }

enum class DistanceType { A, B, C, Zero };

inline std::string_view distance_type_name(DistanceType t) {
    switch (t) {
        case DistanceType::A: return "A";
        case DistanceType::B: return "B";
        case DistanceType::C: return "C";
        case DistanceType::Zero: return "Zero";
    }
    return "?";
}

/// Classifies an attainable double-plane distance; rejects negative components.
inline DistanceType distance_type(const DoubleDistance& d) {
    const int s1 = d.d1.sign();
    const int s2 = d.d2.sign();
    if (s1 < 0 || s2 < 0) throw std::invalid_argument("distance_type: negative component");
    if (s1 > 0 && s2 > 0) return DistanceType::A;
    if (s1 == 0 && s2 > 0) return DistanceType::B;
    if (s1 > 0) return DistanceType::C;
    return DistanceType::Zero;
}

/**
 * A deduplicated set of points carrying one plane tag (the tag is the point
 * type). Input containing duplicates is accepted but collapsed; the number of
 * collapsed points is kept for reporting. Immutable after construction.
 */
template <class P>
class PointSet {
public:
    using point_type = P;
    static constexpr Plane plane = plane_of<P>::value;

    PointSet() = default;

    explicit PointSet(std::vector<P> points) : points_(std::move(points)) {
        dedupe();
    }

    const std::vector<P>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }

    /// Number of duplicate input points collapsed at construction.
    std::size_t collapsed_duplicates() const noexcept { return collapsed_; }

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }
    const P& operator[](std::size_t i) const noexcept { return points_[i]; }

    friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }
    friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

private:
    struct IndexHash {
        const std::vector<P>* pts;
        std::size_t operator()(std::uint32_t i) const { return (*pts)[i].hash(); }
    };
    struct IndexEq {
        const std::vector<P>* pts;
        bool operator()(std::uint32_t a, std::uint32_t b) const { return (*pts)[a] == (*pts)[b]; }
    };

    // Stable in-place dedup: keeps first occurrences in input order.
    void dedupe() {
        std::unordered_set<std::uint32_t, IndexHash, IndexEq> seen(
            16, IndexHash{&points_}, IndexEq{&points_});
        seen.reserve(points_.size());
        std::size_t kept = 0;
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (kept != i) points_[kept] = std::move(points_[i]);
            const auto [it, inserted] = seen.insert(static_cast<std::uint32_t>(kept));
            if (inserted) ++kept;
        }
        collapsed_ = points_.size() - kept;
        points_.resize(kept);
        points_.shrink_to_fit();
    }

    std::vector<P> points_;
    std::size_t collapsed_ = 0;
};

using DualPointSet = PointSet<DualPoint>;
using DoublePointSet = PointSet<DoublePoint>;
using RealPointSet = PointSet<RealPoint>;

}  // namespace hplane

template <>
struct std::hash<hplane::RealPoint> {
    std::size_t operator()(const hplane::RealPoint& p) const { return p.hash(); }
};
template <>
struct std::hash<hplane::DualPoint> {
    std::size_t operator()(const hplane::DualPoint& p) const { return p.hash(); }
};
template <>
struct std::hash<hplane::DoublePoint> {
    std::size_t operator()(const hplane::DoublePoint& p) const { return p.hash(); }
};
template <>
struct std::hash<hplane::DualDistance> {
    std::size_t operator()(const hplane::DualDistance& d) const { return d.hash(); }
};
template <>
struct std::hash<hplane::DoubleDistance> {
    std::size_t operator()(const hplane::DoubleDistance& d) const { return d.hash(); }
};
