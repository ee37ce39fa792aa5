#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hplane {

using Integer = boost::multiprecision::cpp_int;

namespace detail {

using BigRat = boost::multiprecision::cpp_rational;
using int128 = __int128;
using uint128 = unsigned __int128;

inline uint128 unsigned_abs(int128 v) {
    return v < 0 ? uint128(0) - static_cast<uint128>(v) : static_cast<uint128>(v);
}

inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline int ctz128(uint128 x) {
    const auto lo = static_cast<std::uint64_t>(x);
    return lo ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

// 128-bit division is a library call, so fall back to binary gcd up there.
inline uint128 gcd128(uint128 a, uint128 b) {
    constexpr uint128 k64 = std::numeric_limits<std::uint64_t>::max();
    if (a <= k64 && b <= k64) {
        return gcd64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    if (a == 0) return b;
    if (b == 0) return a;
    const int shift = ctz128(a | b);
    a >>= ctz128(a);
    do {
        b >>= ctz128(b);
        if (a > b) {
            const uint128 t = a;
            a = b;
            b = t;
        }
        b -= a;
    } while (b != 0);
    return a << shift;
}

inline Integer integer_from_int128(int128 v) {
    const uint128 m = unsigned_abs(v);
    Integer out = static_cast<std::uint64_t>(m >> 64);
    out <<= 64;
    out |= static_cast<std::uint64_t>(m);
    if (v < 0) out.backend().negate();
    return out;
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace detail

/**
 * Exact rational scalar: arbitrary-precision integer numerator over a
 * positive denominator, always stored in lowest terms. Equality, ordering and
 * hashing are value-exact, which is what every counting operation in this
 * library relies on.
 *
 * Values whose reduced numerator and denominator fit in 64 bits are kept
 * inline and all arithmetic on them runs through 128-bit intermediates;
 * anything larger spills to a heap-allocated boost rational. The small case
 * is the common one in pair-counting loops, so it stays allocation-free.
 */
class Rational {
public:
    Rational() noexcept : num_(0), den_(1) {}

    Rational(std::int64_t n) {  // NOLINT: implicit by design
        assign_i128(n, 1);
    }

    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        assign_i128(n, d);
    }

    explicit Rational(const Integer& n) { assign_big(detail::BigRat(n)); }

    Rational(const Integer& n, const Integer& d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        // boost's rational rejects negative denominators, so fold the sign in.
        if (d < 0) {
            assign_big(detail::BigRat(Integer(-n), Integer(-d)));
        } else {
            assign_big(detail::BigRat(n, d));
        }
    }

    Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
        if (other.big_) big_ = std::make_unique<detail::BigRat>(*other.big_);
    }

    Rational(Rational&&) noexcept = default;

    Rational& operator=(const Rational& other) {
        if (this != &other) {
            num_ = other.num_;
            den_ = other.den_;
            big_ = other.big_ ? std::make_unique<detail::BigRat>(*other.big_) : nullptr;
        }
        return *this;
    }

    Rational& operator=(Rational&&) noexcept = default;

    /// Parses "p" or "p/q" with an optional leading '-' on p and q > 0.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
        const Integer p = parse_integer(text.substr(0, slash), true);
        const Integer q = parse_integer(text.substr(slash + 1), false);
        if (q == 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "': zero denominator");
        return Rational(p, q);
    }

    Integer numerator() const {
        return big_ ? boost::multiprecision::numerator(*big_) : Integer(num_);
    }

    Integer denominator() const {
        return big_ ? boost::multiprecision::denominator(*big_) : Integer(den_);
    }

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_integer() const { return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1; }

    int sign() const noexcept {
        if (big_) return big_->sign();
        return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            const detail::int128 n = detail::int128(a.num_) * b.den_ + detail::int128(b.num_) * a.den_;
            const detail::int128 d = detail::int128(a.den_) * b.den_;
            return Rational(n, d, from_i128_tag{});
        }
        return from_big(a.as_big() + b.as_big());
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            const detail::int128 n = detail::int128(a.num_) * b.den_ - detail::int128(b.num_) * a.den_;
            const detail::int128 d = detail::int128(a.den_) * b.den_;
            return Rational(n, d, from_i128_tag{});
        }
        return from_big(a.as_big() - b.as_big());
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            const detail::int128 n = detail::int128(a.num_) * b.num_;
            const detail::int128 d = detail::int128(a.den_) * b.den_;
            return Rational(n, d, from_i128_tag{});
        }
        return from_big(a.as_big() * b.as_big());
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        if (!a.big_ && !b.big_) {
            const detail::int128 n = detail::int128(a.num_) * b.den_;
            const detail::int128 d = detail::int128(a.den_) * b.num_;
            return Rational(n, d, from_i128_tag{});
        }
        return from_big(a.as_big() / b.as_big());
    }

    Rational operator-() const {
        if (!big_) {
            Rational r;
            r.num_ = -num_;  // fast values never hold INT64_MIN
            r.den_ = den_;
            return r;
        }
        return from_big(-*big_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // representations are canonical, so mixed means unequal
    }

    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend bool operator<(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            return detail::int128(a.num_) * b.den_ < detail::int128(b.num_) * a.den_;
        }
        return a.as_big() < b.as_big();
    }

    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (big_) {
            const Integer n = boost::multiprecision::numerator(*big_);
            const Integer d = boost::multiprecision::denominator(*big_);
            return d == 1 ? n.str() : n.str() + "/" + d.str();
        }
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const {
        if (big_) return big_->convert_to<double>();
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::size_t hash() const {
        // Small and spilled values occupy disjoint value ranges, so the two
        // schemes can never collide over equal values.
        if (!big_) {
            return detail::hash_combine(std::hash<std::int64_t>{}(num_),
                                        std::hash<std::int64_t>{}(den_));
        }
        boost::hash<Integer> h;
        return detail::hash_combine(h(boost::multiprecision::numerator(*big_)),
                                    h(boost::multiprecision::denominator(*big_)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct from_i128_tag {};

    Rational(detail::int128 n, detail::int128 d, from_i128_tag) { assign_i128(n, d); }

    void assign_i128(detail::int128 n, detail::int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        const bool neg = n < 0;
        detail::uint128 un = detail::unsigned_abs(n);
        detail::uint128 ud = static_cast<detail::uint128>(d);
        if (ud != 1) {
            const detail::uint128 g = detail::gcd128(un, ud);
            un /= g;
            ud /= g;
        }
        constexpr detail::uint128 kMax = std::numeric_limits<std::int64_t>::max();
        if (un <= kMax && ud <= kMax) {
            num_ = neg ? -static_cast<std::int64_t>(un) : static_cast<std::int64_t>(un);
            den_ = static_cast<std::int64_t>(ud);
            return;
        }
        Integer bn = detail::integer_from_int128(detail::int128(un));
        if (neg) bn = -bn;
        big_ = std::make_unique<detail::BigRat>(bn, detail::integer_from_int128(detail::int128(ud)));
        num_ = 0;
        den_ = 1;
    }

    void assign_big(detail::BigRat v) {
        const Integer& n = boost::multiprecision::numerator(v);
        const Integer& d = boost::multiprecision::denominator(v);
        constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
        if (n <= kMax && n >= -kMax && d <= kMax) {
            num_ = n.convert_to<std::int64_t>();
            den_ = d.convert_to<std::int64_t>();
            big_.reset();
            return;
        }
        big_ = std::make_unique<detail::BigRat>(std::move(v));
        num_ = 0;
        den_ = 1;
    }

    detail::BigRat as_big() const {
        return big_ ? *big_ : detail::BigRat(num_, den_);
    }

    static Rational from_big(detail::BigRat v) {
        Rational r;
        r.assign_big(std::move(v));
        return r;
    }

    static Integer parse_integer(std::string_view t, bool allow_sign) {
        std::size_t i = 0;
        bool neg = false;
        if (allow_sign && !t.empty() && t[0] == '-') {
            neg = true;
            i = 1;
        }
        if (i >= t.size()) throw std::invalid_argument("malformed rational '" + std::string(t) + "'");
        for (std::size_t j = i; j < t.size(); ++j) {
            if (t[j] < '0' || t[j] > '9') {
                throw std::invalid_argument("malformed rational '" + std::string(t) + "'");
            }
        }
        Integer v(std::string(t.substr(i)));
        return neg ? Integer(-v) : v;
    }

    // Fast representation: value = num_/den_, den_ >= 1, gcd(|num_|, den_) = 1,
    // and |num_| <= INT64_MAX. Spilled representation (big_ engaged): the value
    // does not fit the fast form; num_/den_ are unused. One value, one form.
    std::int64_t num_;
    std::int64_t den_;
    std::unique_ptr<detail::BigRat> big_;
};

}  // namespace hplane

template <>
struct std::hash<hplane::Rational> {
    std::size_t operator()(const hplane::Rational& r) const { return r.hash(); }
};
