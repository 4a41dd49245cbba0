#include "doctest.h"

#include <cmath>

#include "wallsens/metrics.hpp"

using namespace wallsens;

TEST_CASE("local metric normalizes squared integrals") {
    auto eta = local_metric({6.0, 2.0});
    CHECK(eta[0] == doctest::Approx(0.75));
    CHECK(eta[1] == doctest::Approx(0.25));
    CHECK(local_metric({3.7})[0] == doctest::Approx(1.0));
    CHECK_THROWS_AS(local_metric({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(local_metric({-1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("global metric integrates squared sensitivities over the parameter domains") {
    auto sq = [](int index, double v) { return index == 0 ? v * v : 1.0; };
    GlobalMetricResult g = global_metric(sq, {{0.0, 1.0}, {0.0, 1.0}}, {201, 201});
    CHECK(g.nu[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-4));
    CHECK(g.nu[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.gamma[0] + g.gamma[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.nu_over_pi2[1] == doctest::Approx(1.0 / (M_PI * M_PI)).epsilon(1e-12));
    CHECK(g.nu_over_12[1] == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(g.evaluations == 402);
}

TEST_CASE("identical parameters split gamma evenly") {
    auto sq = [](int, double v) { return std::sin(v) * std::sin(v) + 0.1; };
    GlobalMetricResult g = global_metric(sq, {{0.0, 2.0}, {0.0, 2.0}}, {20, 20});
    CHECK(g.gamma[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(g.gamma[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("gamma and the ranking are invariant under a common scale factor") {
    auto sq = [](int index, double v) { return (index + 1.0) * v * v; };
    auto scaled = [&sq](int index, double v) { return 7.0 * sq(index, v); };
    GlobalMetricResult a = global_metric(sq, {{0.0, 1.0}, {0.0, 1.0}}, {30, 30});
    GlobalMetricResult b = global_metric(scaled, {{0.0, 1.0}, {0.0, 1.0}}, {30, 30});
    CHECK(a.gamma[0] == doctest::Approx(b.gamma[0]).epsilon(1e-12));
    CHECK(a.gamma[1] == doctest::Approx(b.gamma[1]).epsilon(1e-12));
}

TEST_CASE("global metric input validation") {
    auto sq = [](int, double) { return 1.0; };
    CHECK_THROWS_AS(global_metric(sq, {{0.0, 1.0}}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(global_metric(sq, {{1.0, 0.0}}, {5}), std::invalid_argument);
    CHECK_THROWS_AS(global_metric(sq, {}, {}), std::invalid_argument);
}

TEST_CASE("crossed measure: exact on constants, zero for separable models") {
    // d2f/dp dq = 1 over the unit square integrates to exactly 1
    double v = crossed_measure([](double, double) { return 1.0; }, {0.0, 1.0}, {0.0, 1.0}, 9, 9);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    // additively separable model: mixed derivative is identically zero
    double z = crossed_measure([](double, double) { return 0.0; }, {0.0, 2.0}, {0.0, 3.0}, 5, 7);
    CHECK(z == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(
        crossed_measure([](double, double) { return 1.0; }, {0.0, 1.0}, {0.0, 1.0}, 1, 5),
        std::invalid_argument);
}

TEST_CASE("ranking splits significant and negligible parameters deterministically") {
    std::vector<ParamId> params = {ParamId::conductivity(1), ParamId::capacity(1),
                                   ParamId::conductivity(2), ParamId::capacity(2)};
    auto ranked = rank_parameters(params, {0.52, 0.01, 0.46, 0.01});
    CHECK(ranked[0].id == ParamId::conductivity(1));
    CHECK(ranked[1].id == ParamId::conductivity(2));
    CHECK(ranked[0].significant);
    CHECK(ranked[1].significant);
    CHECK_FALSE(ranked[2].significant);
    CHECK_FALSE(ranked[3].significant);
    // ties break toward the lower layer, conductivity first
    CHECK(ranked[2].id == ParamId::capacity(1));
    CHECK(ranked[3].id == ParamId::capacity(2));

    auto single = rank_parameters({ParamId::conductivity(1)}, {0.123});
    CHECK(single[0].significant);
}

TEST_CASE("metric report serialization carries every estimator") {
    MetricReport rep;
    rep.params = {ParamId::conductivity(2), ParamId::capacity(2)};
    rep.eta = {0.86, 0.14};
    rep.nu = {0.024, 0.0098};
    rep.gamma = {0.77, 0.23};
    rep.nu_over_pi2 = {2.5e-3, 1.0e-3};
    rep.nu_over_12 = {2.1e-3, 8.5e-4};
    rep.has_crossed = true;
    rep.crossed_pair = "k2,c2";
    rep.crossed_value = 0.012;
    rep.evaluations_local = 1;
    rep.evaluations_global = 40;
    rep.evaluations_crossed = 400;
    rep.ranking = rank_parameters(rep.params, rep.gamma);

    std::string j = metric_report_json(rep);
    CHECK(j.find("\"eta\": 0.86") != std::string::npos);
    CHECK(j.find("nu_over_pi2") != std::string::npos);
    CHECK(j.find("\"global\": 40") != std::string::npos);

    std::string csv = metric_report_csv(rep);
    CHECK(csv.find("param,metric,value") == 0);
    CHECK(csv.find("k2,gamma,0.77") != std::string::npos);
    CHECK(csv.find("k2,c2,nu_crossed,0.012") != std::string::npos);
}
