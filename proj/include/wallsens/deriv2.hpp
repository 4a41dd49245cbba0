#pragma once

#include <cmath>

namespace wallsens {

// Value of a quantity together with its first and second partial derivatives
// with respect to an ordered pair of scalar parameters (p, q). Arithmetic on
// Deriv2 propagates the derivatives exactly (product/quotient rule up to
// second order), so marching a finite-difference update in Deriv2 arithmetic
// yields the update differentiated term by term.
//
// The cross term dp*dq sums are grouped in parentheses so that swapping the
// roles of p and q produces bit-identical dpq results.
struct Deriv2 {
    double v = 0.0;    // value
    double dp = 0.0;   // d/dp
    double dq = 0.0;   // d/dq
    double dpp = 0.0;  // d2/dp2
    double dqq = 0.0;  // d2/dq2
    double dpq = 0.0;  // d2/dp dq

    static Deriv2 constant(double c) { return Deriv2{c, 0, 0, 0, 0, 0}; }

    Deriv2& operator+=(const Deriv2& o) {
        v += o.v; dp += o.dp; dq += o.dq;
        dpp += o.dpp; dqq += o.dqq; dpq += o.dpq;
        return *this;
    }
    Deriv2& operator-=(const Deriv2& o) {
        v -= o.v; dp -= o.dp; dq -= o.dq;
        dpp -= o.dpp; dqq -= o.dqq; dpq -= o.dpq;
        return *this;
    }
};

inline Deriv2 operator+(Deriv2 a, const Deriv2& b) { a += b; return a; }
inline Deriv2 operator-(Deriv2 a, const Deriv2& b) { a -= b; return a; }

inline Deriv2 operator-(const Deriv2& a) {
    return Deriv2{-a.v, -a.dp, -a.dq, -a.dpp, -a.dqq, -a.dpq};
}

inline Deriv2 operator*(const Deriv2& a, const Deriv2& b) {
    Deriv2 r;
    r.v = a.v * b.v;
    r.dp = a.dp * b.v + a.v * b.dp;
    r.dq = a.dq * b.v + a.v * b.dq;
    r.dpp = a.dpp * b.v + 2.0 * a.dp * b.dp + a.v * b.dpp;
    r.dqq = a.dqq * b.v + 2.0 * a.dq * b.dq + a.v * b.dqq;
    r.dpq = a.dpq * b.v + (a.dp * b.dq + a.dq * b.dp) + a.v * b.dpq;
    return r;
}

// Quotient rule from h*g = f: h' = (f' - h g')/g, etc.
inline Deriv2 operator/(const Deriv2& f, const Deriv2& g) {
    Deriv2 h;
    h.v = f.v / g.v;
    h.dp = (f.dp - h.v * g.dp) / g.v;
    h.dq = (f.dq - h.v * g.dq) / g.v;
    h.dpp = (f.dpp - 2.0 * h.dp * g.dp - h.v * g.dpp) / g.v;
    h.dqq = (f.dqq - 2.0 * h.dq * g.dq - h.v * g.dqq) / g.v;
    h.dpq = (f.dpq - (h.dp * g.dq + h.dq * g.dp) - h.v * g.dpq) / g.v;
    return h;
}

inline Deriv2 operator*(double s, const Deriv2& a) {
    return Deriv2{s * a.v, s * a.dp, s * a.dq, s * a.dpp, s * a.dqq, s * a.dpq};
}
inline Deriv2 operator*(const Deriv2& a, double s) { return s * a; }
inline Deriv2 operator/(const Deriv2& a, double s) { return (1.0 / s) * a; }
inline Deriv2 operator/(double s, const Deriv2& a) { return Deriv2::constant(s) / a; }
inline Deriv2 operator+(const Deriv2& a, double s) {
    Deriv2 r = a; r.v += s; return r;
}
inline Deriv2 operator+(double s, const Deriv2& a) { return a + s; }
inline Deriv2 operator-(const Deriv2& a, double s) { return a + (-s); }
inline Deriv2 operator-(double s, const Deriv2& a) { return (-a) + s; }

inline bool all_finite(const Deriv2& a) {
    return std::isfinite(a.v) && std::isfinite(a.dp) && std::isfinite(a.dq) &&
           std::isfinite(a.dpp) && std::isfinite(a.dqq) && std::isfinite(a.dpq);
}

}  // namespace wallsens
