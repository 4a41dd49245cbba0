// Acceptance suite: runs the full benchmark battery against its pinned
// targets and prints one PASS/FAIL line per criterion.

#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "wallsens/baselines.hpp"
#include "wallsens/cases.hpp"
#include "wallsens/sampling.hpp"
#include "wallsens/solver.hpp"
#include "wallsens/validation.hpp"

using namespace wallsens;

namespace {

ValidationBattery& battery() {
    static ValidationBattery instance;
    return instance;
}

void report(int index, const CheckResult& r) {
    std::printf("[acceptance %02d] %s  %s\n      %s\n", index, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
}

}  // namespace

TEST_CASE("criterion 1: validation-case solver accuracy") {
    CheckResult r = battery().solver_accuracy();
    report(1, r);
    CHECK(r.pass);
}

TEST_CASE("criterion 2: sensitivity fidelity against the reference oracle") {
    CheckResult r = battery().sensitivity_fidelity();
    report(2, r);
    CHECK(r.pass);
}

TEST_CASE("criterion 3: discrete-vs-continuous orderings") {
    CheckResult r = battery().discrete_vs_continuous();
    report(3, r);
    CHECK(r.pass);
}

TEST_CASE("criterion 4: Taylor trust region and cubic remainder") {
    CheckResult r = battery().taylor_trust_region();
    report(4, r);
    CHECK(r.pass);
}

TEST_CASE("criterion 5: derivative-based metrics") {
    CheckResult r = battery().derivative_metrics();
    report(5, r);
    CHECK(r.pass);
}

TEST_CASE("criterion 7: baseline reproduction (SRC, Sobol, RBD-FAST)") {
    CheckResult r = battery().baseline_reproduction();
    report(7, r);
    CHECK(r.pass);
}

TEST_CASE("criterion 6: variance bound D_tot <= nu/pi^2") {
    CheckResult r = battery().variance_bound();
    report(6, r);
    CHECK(r.pass);
}

TEST_CASE("criterion 8: evaluation-count accounting") {
    CheckResult r = battery().cost_accounting();
    report(8, r);
    CHECK(r.pass);
}

TEST_CASE("criterion 9: annual wall ranking") {
    CheckResult r = battery().annual_wall_ranking();
    report(9, r);
    CHECK(r.pass);
}

TEST_CASE("criterion 10: envelope ordering and absorbed fraction") {
    CheckResult r = battery().envelope_ordering();
    report(10, r);
    CHECK(r.pass);
}

TEST_CASE("criterion 11: property suite") {
    bool pass = true;
    char detail[512];

    // mixed-partial symmetry of the propagated coefficients
    {
        DimensionlessProblem p = validation_case();
        Grid g(2e-2, 2e-3, 2.0);
        MarchOptions mo;
        mo.store_every = 10;
        SensRequest a, b;
        a.p = ParamId::conductivity(2);
        a.q = ParamId::capacity(2);
        a.order = 2;
        b.p = a.q;
        b.q = a.p;
        b.order = 2;
        FieldStore xpq = propagate(p, g, a, mo).track(SlotId::DPQ).field;
        FieldStore xqp = propagate(p, g, b, mo).track(SlotId::DPQ).field;
        double worst = 0.0;
        for (std::size_t i = 0; i < xpq.values.size(); ++i)
            worst = std::max(worst, std::abs(xpq.values[i] - xqp.values[i]));
        pass = pass && worst <= 1e-12;
        std::snprintf(detail, sizeof detail, "mixed symmetry %.1e", worst);
    }

    // equilibrium zero sensitivity
    double eq_worst = 0.0;
    {
        BoundarySignals bc;
        bc.u_left_air = Signal::constant(0.5);
        bc.u_right_air = Signal::constant(0.5);
        bc.g_left_rad = Signal::constant(0.0);
        ReferenceValues refs{1, 1, 1, 1, 1};
        DimensionlessProblem p({0.5}, {0.3, 1.1}, {0.6, 0.8}, 0.05, 0.2, 0.4, 1.0, bc,
                               InitialProfile::constant(0.5), refs);
        Grid g(0.05, 0.005, 2.0);
        SensRequest req;
        req.p = ParamId::capacity(1);
        req.order = 1;
        MarchOptions mo;
        mo.store_every = 10;
        for (double v : propagate(p, g, req, mo).track(SlotId::DP).field.values)
            eq_worst = std::max(eq_worst, std::abs(v));
        pass = pass && eq_worst <= 1e-13;
    }

    // determinism of seeded estimators
    bool deterministic = true;
    {
        auto model = [](const std::vector<double>& x) { return x[0] * x[0] + 0.3 * x[1]; };
        SobolOptions so;
        so.n_samples = 256;
        so.seed = 99;
        VarianceReport r1 = sobol_indices(model, {{0.0, 1.0}, {0.0, 1.0}}, so);
        VarianceReport r2 = sobol_indices(model, {{0.0, 1.0}, {0.0, 1.0}}, so);
        deterministic = r1.s1 == r2.s1 && r1.s_total == r2.s_total && r1.d_total == r2.d_total;
        RbdOptions ro;
        ro.n_samples = 200;
        ro.seed = 99;
        deterministic = deterministic &&
                        rbd_fast(model, {{0.0, 1.0}, {0.0, 1.0}}, ro).s1 ==
                            rbd_fast(model, {{0.0, 1.0}, {0.0, 1.0}}, ro).s1;
        pass = pass && deterministic;
    }

    // loads additivity over a partition
    double additivity = 0.0;
    {
        DimensionlessProblem p = validation_case();
        Grid g(2e-2, 2e-3, 6.0);
        MarchResult res = solve(p, g);
        double whole = res.loads(0.0, 6.0);
        double parts = 0.0;
        for (int m = 0; m < 6; ++m) parts += res.loads(m, m + 1.0);
        additivity = std::abs(whole - parts) / std::max(1e-30, std::abs(whole));
        pass = pass && additivity <= 1e-10;
    }

    // Ishigami Sobol oracle
    double ishigami_worst = 0.0;
    {
        using std::numbers::pi;
        const double a = 7.0, b = 0.1;
        const double p4 = pi * pi * pi * pi, p8 = p4 * p4;
        const double v1 = 0.5 * std::pow(1.0 + b * p4 / 5.0, 2);
        const double v2 = a * a / 8.0;
        const double v13 = 8.0 * b * b * p8 / 225.0;
        const double v = v1 + v2 + v13;
        auto model = [a, b](const std::vector<double>& x) {
            return std::sin(x[0]) + a * std::sin(x[1]) * std::sin(x[1]) +
                   b * std::pow(x[2], 4) * std::sin(x[0]);
        };
        SobolOptions so;
        so.n_samples = 8192;
        so.seed = 5;
        VarianceReport rep = sobol_indices(model, {{-pi, pi}, {-pi, pi}, {-pi, pi}}, so);
        double expect_s1[3] = {v1 / v, v2 / v, 0.0};
        double expect_st[3] = {(v1 + v13) / v, v2 / v, v13 / v};
        for (int i = 0; i < 3; ++i) {
            ishigami_worst = std::max(ishigami_worst, std::abs(rep.s1[i] - expect_s1[i]));
            ishigami_worst = std::max(ishigami_worst, std::abs(rep.s_total[i] - expect_st[i]));
        }
        pass = pass && ishigami_worst <= 0.03;
    }

    CheckResult r{"property suite (symmetry, equilibrium, determinism, additivity, Ishigami)",
                  pass,
                  std::string(detail) + ", equilibrium " + std::to_string(eq_worst) +
                      ", deterministic " + (deterministic ? "yes" : "no") + ", additivity " +
                      std::to_string(additivity) + ", ishigami max err " +
                      std::to_string(ishigami_worst)};
    report(11, r);
    CHECK(r.pass);
}
