#include "doctest.h"

#include <cmath>
#include <numbers>

#include "wallsens/oracle.hpp"
#include "wallsens/solver.hpp"
#include "wallsens/wall.hpp"

using namespace wallsens;
using std::numbers::pi;

namespace {

// Manufactured solution u = e^{-t} sin(pi x) on a uniform slab with k* = c* =
// Fo = 1: the matching source is S = (pi^2 - 1) u and the Robin signals are
// chosen so the boundary balances hold exactly.
DimensionlessProblem manufactured_problem(double bi_l, double bi_r) {
    BoundarySignals bc;
    bc.u_left_air =
        Signal::function([bi_l](double t) { return -pi * std::exp(-t) / bi_l; });
    bc.u_right_air =
        Signal::function([bi_r](double t) { return -pi * std::exp(-t) / bi_r; });
    bc.g_left_rad = Signal::constant(0.0);

    SourceTerm src;
    src.time = Signal::function([](double t) { return std::exp(-t); });
    src.shape = [](double x) { return (pi * pi - 1.0) * std::sin(pi * x); };

    ReferenceValues refs{1.0, 1.0, 1.0, 1.0, 1.0};
    return DimensionlessProblem({}, {1.0}, {1.0}, 1.0, bi_l, bi_r, 1.0, bc,
                                InitialProfile::from_function(
                                    [](double x) { return std::sin(pi * x); }),
                                refs, src);
}

double manufactured_value(double x, double t) { return std::exp(-t) * std::sin(pi * x); }

}  // namespace

TEST_CASE("reference solver reproduces an equilibrium exactly") {
    BoundarySignals bc;
    bc.u_left_air = Signal::constant(0.31);
    bc.u_right_air = Signal::constant(0.31);
    bc.g_left_rad = Signal::constant(0.0);
    ReferenceValues refs{1.0, 1.0, 1.0, 1.0, 1.0};
    DimensionlessProblem p({0.4}, {0.8, 1.6}, {1.1, 0.5}, 0.2, 0.3, 0.6, 1.0, bc,
                           InitialProfile::constant(0.31), refs);
    Grid g(0.05, 0.01, 2.0);
    ReferenceField ref = reference_solve(p, g);
    for (double v : ref.values) CHECK(std::abs(v - 0.31) < 1e-11);
}

TEST_CASE("reference solver passes the manufactured-solution check") {
    DimensionlessProblem p = manufactured_problem(2.0, 3.0);
    Grid g(0.05, 0.01, 1.0);
    OracleConfig cfg;
    cfg.refine_x = 64;
    cfg.refine_t = 32;
    cfg.check_self_convergence = false;
    ReferenceField ref = reference_solve(p, g, cfg);
    double worst = 0.0;
    for (int lv = 0; lv <= g.n_steps; ++lv)
        for (int j = 0; j < g.n_nodes; ++j)
            worst = std::max(worst, std::abs(ref.at(lv, j) - manufactured_value(g.x(j), g.t(lv))));
    CHECK(worst <= 1e-6);
}

TEST_CASE("production scheme converges on the manufactured solution") {
    DimensionlessProblem p = manufactured_problem(2.0, 3.0);
    auto worst_at = [&](double dx, double dt) {
        Grid g(dx, dt, 1.0);
        MarchResult res = solve(p, g);
        double worst = 0.0;
        for (int j = 0; j < g.n_nodes; ++j)
            worst = std::max(worst, std::abs(res.track(SlotId::Value).final_level[j] -
                                             manufactured_value(g.x(j), 1.0)));
        return worst;
    };
    double coarse = worst_at(0.04, 4e-4);
    double fine = worst_at(0.02, 1e-4);
    CHECK(fine < 2.5e-3);
    CHECK(coarse > 2.0 * fine);  // roughly second-order decrease
}

TEST_CASE("oracle self-convergence guard trips on an absurd tolerance") {
    DimensionlessProblem p = validation_case();
    Grid g(0.05, 0.01, 1.0);
    OracleConfig cfg;
    cfg.tolerance = 1e-15;
    CHECK_THROWS_AS(reference_solve(p, g, cfg), OracleFailure);
    CHECK_THROWS_AS(reference_solve(p, g, OracleConfig{2, 4, 1e-4, true}),
                    std::invalid_argument);
}

TEST_CASE("eps2 profile: zero for identical fields, |d| for a constant offset") {
    FieldStore a;
    a.n_nodes = 4;
    a.times = {0.0, 0.5, 1.0};
    a.values = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    auto zero = eps2_profile(a, a);
    for (double v : zero) CHECK(v == 0.0);

    FieldStore b = a;
    for (auto& v : b.values) v += 0.25;
    auto prof = eps2_profile(a, b);
    for (double v : prof) CHECK(v == doctest::Approx(0.25).epsilon(1e-14));

    FieldStore mismatched = a;
    mismatched.n_nodes = 3;
    CHECK_THROWS_AS(eps2_profile(a, mismatched), std::invalid_argument);
}

TEST_CASE("reference sensitivity of an equilibrium problem is zero") {
    BoundarySignals bc;
    bc.u_left_air = Signal::constant(0.5);
    bc.u_right_air = Signal::constant(0.5);
    bc.g_left_rad = Signal::constant(0.0);
    ReferenceValues refs{1.0, 1.0, 1.0, 1.0, 1.0};
    DimensionlessProblem p({0.5}, {0.4, 1.2}, {0.6, 0.8}, 0.1, 0.2, 0.4, 1.0, bc,
                           InitialProfile::constant(0.5), refs);
    Grid g(0.05, 0.01, 1.0);
    OracleConfig cfg;
    cfg.check_self_convergence = false;
    ReferenceField x = reference_sensitivity(p, g, ParamId::conductivity(1), std::nullopt, 1, cfg);
    for (double v : x.values) CHECK(std::abs(v) < 1e-7);
}

TEST_CASE("reference sensitivity agrees with the propagated coefficients on a coarse case") {
    DimensionlessProblem p = validation_case();
    Grid g(2e-2, 2e-3, 2.0);
    OracleConfig cfg;
    cfg.check_self_convergence = false;
    ReferenceField ref = reference_sensitivity(p, g, ParamId::conductivity(1), std::nullopt, 1, cfg);

    SensRequest req;
    req.p = ParamId::conductivity(1);
    req.order = 1;
    MarchOptions mo;
    mo.store_every = 1;
    FieldStore mine = propagate(p, g, req, mo).track(SlotId::DP).field;
    auto prof = eps2_profile(mine, ref);
    for (double v : prof) CHECK(v < 1e-1);
}
