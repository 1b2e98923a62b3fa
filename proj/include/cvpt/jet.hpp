#pragma once

#include <cmath>

namespace cvpt {

/// Second-order jet in two variables (y, w): value, gradient and Hessian,
/// propagated exactly through arithmetic and real powers.
struct Jet2 {
    long double v = 0;
    long double dy = 0;
    long double dw = 0;
    long double dyy = 0;
    long double dyw = 0;
    long double dww = 0;

    Jet2() = default;
    Jet2(long double c) : v(c) {} // NOLINT(google-explicit-constructor)

    static Jet2 var_y(long double y) {
        Jet2 j(y);
        j.dy = 1;
        return j;
    }
    static Jet2 var_w(long double w) {
        Jet2 j(w);
        j.dw = 1;
        return j;
    }

    Jet2 operator-() const { return {-v, -dy, -dw, -dyy, -dyw, -dww}; }
    Jet2& operator+=(const Jet2& b) {
        v += b.v;
        dy += b.dy;
        dw += b.dw;
        dyy += b.dyy;
        dyw += b.dyw;
        dww += b.dww;
        return *this;
    }
    Jet2& operator-=(const Jet2& b) { return *this += -b; }
    Jet2& operator*=(const Jet2& b) {
        *this = {v * b.v,
                 dy * b.v + v * b.dy,
                 dw * b.v + v * b.dw,
                 dyy * b.v + 2 * dy * b.dy + v * b.dyy,
                 dyw * b.v + dy * b.dw + dw * b.dy + v * b.dyw,
                 dww * b.v + 2 * dw * b.dw + v * b.dww};
        return *this;
    }
    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }

private:
    Jet2(long double v_, long double dy_, long double dw_, long double dyy_, long double dyw_, long double dww_)
        : v(v_), dy(dy_), dw(dw_), dyy(dyy_), dyw(dyw_), dww(dww_) {}

    friend Jet2 chain(const Jet2& a, long double f0, long double f1, long double f2);
};

/// f(a) for a scalar function with f(a.v) = f0, f' = f1, f'' = f2.
inline Jet2 chain(const Jet2& a, long double f0, long double f1, long double f2) {
    return {f0,
            f1 * a.dy,
            f1 * a.dw,
            f1 * a.dyy + f2 * a.dy * a.dy,
            f1 * a.dyw + f2 * a.dy * a.dw,
            f1 * a.dww + f2 * a.dw * a.dw};
}

inline Jet2 real_pow(const Jet2& a, long double p) {
    const long double f0 = std::pow(a.v, p);
    return chain(a, f0, p * f0 / a.v, p * (p - 1) * f0 / (a.v * a.v));
}

inline long double real_pow(long double a, long double p) { return std::pow(a, p); }

} // namespace cvpt
