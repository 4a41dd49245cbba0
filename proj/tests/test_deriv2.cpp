#include "doctest.h"

#include <cmath>
#include <functional>

#include "wallsens/deriv2.hpp"

using wallsens::Deriv2;

namespace {

// f(p, q) = (2 + p)(3 + q^2) / (1 + p q), evaluated in Deriv2 arithmetic
Deriv2 rational(const Deriv2& p, const Deriv2& q) {
    return ((p + 2.0) * (q * q + 3.0)) / (p * q + 1.0);
}

double rational_value(double p, double q) {
    return (2.0 + p) * (3.0 + q * q) / (1.0 + p * q);
}

}  // namespace

TEST_CASE("deriv2 arithmetic matches finite differences of the closed form") {
    const double pv = 0.3, qv = 0.4;
    Deriv2 p = Deriv2::constant(pv);
    p.dp = 1.0;
    Deriv2 q = Deriv2::constant(qv);
    q.dq = 1.0;
    Deriv2 h = rational(p, q);

    CHECK(h.v == doctest::Approx(rational_value(pv, qv)).epsilon(1e-14));

    const double e = 1e-5;
    auto f = rational_value;
    double fd_p = (f(pv + e, qv) - f(pv - e, qv)) / (2 * e);
    double fd_q = (f(pv, qv + e) - f(pv, qv - e)) / (2 * e);
    double fd_pp = (f(pv + e, qv) - 2 * f(pv, qv) + f(pv - e, qv)) / (e * e);
    double fd_qq = (f(pv, qv + e) - 2 * f(pv, qv) + f(pv, qv - e)) / (e * e);
    double fd_pq = (f(pv + e, qv + e) - f(pv + e, qv - e) - f(pv - e, qv + e) +
                    f(pv - e, qv - e)) /
                   (4 * e * e);

    CHECK(h.dp == doctest::Approx(fd_p).epsilon(1e-8));
    CHECK(h.dq == doctest::Approx(fd_q).epsilon(1e-8));
    CHECK(h.dpp == doctest::Approx(fd_pp).epsilon(1e-5));
    CHECK(h.dqq == doctest::Approx(fd_qq).epsilon(1e-5));
    CHECK(h.dpq == doctest::Approx(fd_pq).epsilon(1e-5));
}

TEST_CASE("deriv2 quotient is the inverse of the product") {
    Deriv2 a{1.7, 0.3, -0.2, 0.11, 0.07, -0.05};
    Deriv2 b{0.9, -0.4, 0.6, 0.02, -0.03, 0.08};
    Deriv2 c = (a * b) / b;
    CHECK(c.v == doctest::Approx(a.v).epsilon(1e-14));
    CHECK(c.dp == doctest::Approx(a.dp).epsilon(1e-13));
    CHECK(c.dq == doctest::Approx(a.dq).epsilon(1e-13));
    CHECK(c.dpp == doctest::Approx(a.dpp).epsilon(1e-12));
    CHECK(c.dqq == doctest::Approx(a.dqq).epsilon(1e-12));
    CHECK(c.dpq == doctest::Approx(a.dpq).epsilon(1e-12));
}

TEST_CASE("deriv2 cross derivative is symmetric under swapping the roles of p and q") {
    // same expression with (p, q) seeds exchanged must produce an identical
    // mixed derivative, bit for bit
    Deriv2 p = Deriv2::constant(0.3);
    p.dp = 1.0;
    Deriv2 q = Deriv2::constant(0.4);
    q.dq = 1.0;
    Deriv2 a = rational(p, q);

    Deriv2 ps = Deriv2::constant(0.3);
    ps.dq = 1.0;
    Deriv2 qs = Deriv2::constant(0.4);
    qs.dp = 1.0;
    Deriv2 b = rational(ps, qs);

    CHECK(a.dpq == b.dpq);
    CHECK(a.dp == b.dq);
    CHECK(a.dpp == b.dqq);
}

TEST_CASE("deriv2 finiteness predicate") {
    Deriv2 ok{1, 2, 3, 4, 5, 6};
    CHECK(wallsens::all_finite(ok));
    ok.dpq = std::nan("");
    CHECK_FALSE(wallsens::all_finite(ok));
}
