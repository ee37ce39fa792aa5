#pragma once

#include <hplane/points.hpp>
#include <hplane/rational.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hplane {

/**
 * A line a·x + b·z = c with integer coefficients in canonical form:
 * (a, b) != (0, 0), gcd(|a|, |b|, |c|) = 1, and the first nonzero of (a, b)
 * positive. Equal lines therefore compare equal as values, which is what the
 * pair-based rich-line search relies on.
 */
struct Line {
    Integer a;
    Integer b;
    Integer c;

    friend bool operator==(const Line& p, const Line& q) {
        return p.a == q.a && p.b == q.b && p.c == q.c;
    }
    friend bool operator!=(const Line& p, const Line& q) { return !(p == q); }
    friend bool operator<(const Line& p, const Line& q) {
        if (p.a != q.a) return p.a < q.a;
        if (p.b != q.b) return p.b < q.b;
        return p.c < q.c;
    }

    std::size_t hash() const {
        boost::hash<Integer> h;
        return detail::hash_combine(detail::hash_combine(h(a), h(b)), h(c));
    }

    std::string str() const { return a.str() + "," + b.str() + "," + c.str(); }
};

/// Builds the canonical line from rational coefficients A·x + B·z = C, (A,B) != 0.
inline Line canonical_line(const Rational& A, const Rational& B, const Rational& C) {
    if (A.is_zero() && B.is_zero()) throw std::invalid_argument("canonical_line: zero normal");
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    const Integer scale = lcm(lcm(A.denominator(), B.denominator()), C.denominator());
    Integer a = (A * Rational(scale)).numerator();
    Integer b = (B * Rational(scale)).numerator();
    Integer c = (C * Rational(scale)).numerator();
    Integer g = gcd(gcd(abs(a), abs(b)), abs(c));
    a /= g;
    b /= g;
    c /= g;
    const bool flip = a != 0 ? a < 0 : b < 0;
    if (flip) {
        a = -a;
        b = -b;
        c = -c;
    }
    return {std::move(a), std::move(b), std::move(c)};
}

/// Line through `p` whose normal vector is (nx, nz).
inline Line line_with_normal(const RealPoint& p, const Rational& nx, const Rational& nz) {
    return canonical_line(nx, nz, nx * p.x + nz * p.z);
}

/// Line through two distinct points of the real plane.
inline Line line_through(const RealPoint& p, const RealPoint& q) {
    if (p == q) throw std::invalid_argument("line_through: points coincide");
    // Normal is the real displacement rotated a quarter turn.
    return line_with_normal(p, q.z - p.z, p.x - q.x);
}

inline bool contains(const Line& l, const RealPoint& p) {
    return Rational(l.a) * p.x + Rational(l.b) * p.z == Rational(l.c);
}

/**
 * The line associated with an ordered pair of dual-plane points with distinct
 * real parts: it passes through the imaginary part of `p` and its direction
 * is orthogonal to the real displacement. Whenever rho(p, q) has zero
 * imaginary component this line also passes through the imaginary part of
 * `q`, so its copies in the two imaginary planes carry both points.
 */
inline Line line_of_pair(const DualPoint& p, const DualPoint& q) {
    const Rational nx = p.x - q.x;
    const Rational nz = p.z - q.z;
    if (nx.is_zero() && nz.is_zero()) {
        throw std::domain_error("line_of_pair: equal real parts leave the line undefined");
    }
    return line_with_normal(imaginary_part(p), nx, nz);
}

namespace detail {

inline std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// Inverts c = k(k-1)/2; only called on counts that are triangular by
/// construction (all pairs of k collinear points map to one canonical line).
inline std::uint64_t triangular_inverse(std::uint64_t c) {
    const std::uint64_t k = (1 + isqrt_u64(1 + 8 * c)) / 2;
    if (k * (k - 1) / 2 != c) throw std::logic_error("triangular_inverse: count is not triangular");
    return k;
}

}  // namespace detail

}  // namespace hplane

template <>
struct std::hash<hplane::Line> {
    std::size_t operator()(const hplane::Line& l) const { return l.hash(); }
};

namespace hplane {

/**
 * For every line through at least two of the given points, the exact number
 * of the points it passes through. Points must be pairwise distinct. Each
 * collinear k-subset contributes all C(k,2) of its pair lines to one
 * canonical key, so supports come back via triangular inversion with no
 * second pass over the points.
 */
inline std::unordered_map<Line, std::uint64_t> pair_line_supports(const std::vector<RealPoint>& pts) {
    std::unordered_map<Line, std::uint64_t> pair_counts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            ++pair_counts[line_through(pts[i], pts[j])];
        }
    }
    for (auto& [line, count] : pair_counts) {
        count = detail::triangular_inverse(count);
    }
    return pair_counts;
}

}  // namespace hplane
