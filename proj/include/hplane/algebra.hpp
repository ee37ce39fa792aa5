#pragma once

#include <hplane/rational.hpp>

#include <utility>

namespace hplane {

/// Dual number x + y·eps with eps^2 = 0, written [x, y].
struct Dual {
    Rational re;  // real part x
    Rational im;  // imaginary part y

    friend bool operator==(const Dual& a, const Dual& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }
};

/**
 * Double number in light-cone coordinates <u, v>. In standard form X + Y·j
 * with j^2 = 1 the coordinates are u = X + Y, v = X - Y; multiplication and
 * the plane distance are componentwise in this form, which is why the library
 * stores doubles this way and converts only at input/output boundaries.
 */
struct Double {
    Rational u;
    Rational v;

    friend bool operator==(const Double& a, const Double& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const Double& a, const Double& b) { return !(a == b); }
};

inline Dual dual_add(const Dual& a, const Dual& b) { return {a.re + b.re, a.im + b.im}; }

/// [x,y]·[x',y'] = [xx', xy' + x'y]; the eps^2 term vanishes.
inline Dual dual_mul(const Dual& a, const Dual& b) {
    return {a.re * b.re, a.re * b.im + b.re * a.im};
}

inline Double double_add(const Double& a, const Double& b) { return {a.u + b.u, a.v + b.v}; }

/// Componentwise: light-cone coordinates diagonalize double multiplication.
inline Double double_mul(const Double& a, const Double& b) { return {a.u * b.u, a.v * b.v}; }

inline Double std_to_lightcone(const Rational& X, const Rational& Y) { return {X + Y, X - Y}; }

inline std::pair<Rational, Rational> lightcone_to_std(const Double& d) {
    const Rational two(2);
    return {(d.u + d.v) / two, (d.u - d.v) / two};
}

}  // namespace hplane
