#include "doctest.h"

#include <cmath>
#include <set>

#include "wallsens/cases.hpp"
#include "wallsens/wall.hpp"

using namespace wallsens;

TEST_CASE("nondimensionalization of the three-layer wall") {
    WallSpec wall = historical_wall();
    ReferenceValues refs = historical_refs();
    DimensionalBoundary bc;
    bc.T_left_air = Signal::constant(283.15);
    bc.T_right_air = Signal::constant(293.15);
    bc.q_left_rad = Signal::constant(0.0);

    DimensionlessProblem p =
        nondimensionalize(wall, refs, bc, InitialProfile::constant(1.0), 3600.0);

    // Bi_L = h_L L / k_ref, Fo = t_ref k_ref / (L^2 c_ref)
    CHECK(p.biot_left() == doctest::Approx(15.0 * 0.5 / 1.75).epsilon(1e-12));
    CHECK(p.biot_right() == doctest::Approx(8.0 * 0.5 / 1.75).epsilon(1e-12));
    CHECK(p.fourier() == doctest::Approx(0.01575).epsilon(1e-12));
    CHECK(p.k_values()[0] == doctest::Approx(1.0));
    CHECK(p.c_values()[0] == doctest::Approx(1.0));
    CHECK(p.breakpoints().size() == 2);
    CHECK(p.breakpoints()[0] == doctest::Approx(0.4));
    CHECK(p.breakpoints()[1] == doctest::Approx(0.96));
}

TEST_CASE("uniform conductivity scales to k* = 1 in every layer") {
    WallSpec wall;
    wall.layers = {Layer{2.0, 1e6, 0.1, "a"}, Layer{2.0, 2e6, 0.2, "b"}};
    wall.h_left = wall.h_right = 10.0;
    ReferenceValues refs{2.0, 1e6, 300.0, 3600.0, 0.3};
    DimensionalBoundary bc;
    bc.T_left_air = Signal::constant(300.0);
    bc.T_right_air = Signal::constant(300.0);
    bc.q_left_rad = Signal::constant(0.0);
    DimensionlessProblem p =
        nondimensionalize(wall, refs, bc, InitialProfile::constant(1.0), 100.0);
    for (double k : p.k_values()) CHECK(k == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("round trip through the dimensionless form recovers the wall") {
    WallSpec wall = historical_wall();
    ReferenceValues refs = historical_refs();
    DimensionalBoundary bc;
    bc.T_left_air = Signal::constant(280.0);
    bc.T_right_air = Signal::constant(295.0);
    bc.q_left_rad = Signal::constant(100.0);
    DimensionlessProblem p =
        nondimensionalize(wall, refs, bc, InitialProfile::constant(1.0), 3600.0);
    WallSpec back = redimensionalize(p, wall.h_left, wall.h_right);
    REQUIRE(back.layers.size() == wall.layers.size());
    for (std::size_t i = 0; i < wall.layers.size(); ++i) {
        CHECK(back.layers[i].conductivity ==
              doctest::Approx(wall.layers[i].conductivity).epsilon(1e-12));
        CHECK(back.layers[i].volumetric_capacity ==
              doctest::Approx(wall.layers[i].volumetric_capacity).epsilon(1e-12));
        CHECK(back.layers[i].thickness ==
              doctest::Approx(wall.layers[i].thickness).epsilon(1e-12));
    }
}

TEST_CASE("dimensionless group under joint conductivity rescaling") {
    // k_i -> s k_i with k_ref -> s k_ref leaves the dimensionless profile
    // k*, the Biot ratio and the products Fo*Bi unchanged (the individual
    // Bi and Fo absorb 1/s and s respectively).
    WallSpec wall = historical_wall();
    ReferenceValues refs = historical_refs();
    DimensionalBoundary bc;
    bc.T_left_air = Signal::constant(283.15);
    bc.T_right_air = Signal::constant(293.15);
    bc.q_left_rad = Signal::constant(0.0);
    DimensionlessProblem a =
        nondimensionalize(wall, refs, bc, InitialProfile::constant(1.0), 3600.0);

    const double s = 3.7;
    for (auto& layer : wall.layers) layer.conductivity *= s;
    refs.k_ref *= s;
    DimensionlessProblem b =
        nondimensionalize(wall, refs, bc, InitialProfile::constant(1.0), 3600.0);

    CHECK(a.biot_left() / a.biot_right() ==
          doctest::Approx(b.biot_left() / b.biot_right()).epsilon(1e-13));
    CHECK(a.fourier() * a.biot_left() ==
          doctest::Approx(b.fourier() * b.biot_left()).epsilon(1e-13));
    CHECK(a.fourier() * a.biot_right() ==
          doctest::Approx(b.fourier() * b.biot_right()).epsilon(1e-13));
    for (int i = 0; i < a.n_layers(); ++i)
        CHECK(a.k_values()[i] == doctest::Approx(b.k_values()[i]).epsilon(1e-13));
}

TEST_CASE("piecewise lookup follows the validation-case breakpoint convention") {
    DimensionlessProblem p = validation_case();
    auto [k_left, c_left] = p.properties_at(0.3);
    CHECK(k_left == doctest::Approx(0.1));
    CHECK(c_left == doctest::Approx(0.2));
    // at the breakpoint the layer that starts there wins (x* >= 0.6)
    auto [k_bp, c_bp] = p.properties_at(0.6);
    CHECK(k_bp == doctest::Approx(0.3));
    CHECK(c_bp == doctest::Approx(0.5));
    CHECK(p.properties_at(1.0).first == doctest::Approx(0.3));
    CHECK_THROWS_AS(p.properties_at(1.5), std::invalid_argument);
    CHECK_THROWS_AS(p.properties_at(-0.2), std::invalid_argument);
}

TEST_CASE("piecewise lookup is constant within layers and its image is the layer set") {
    DimensionlessProblem p = validation_case();
    std::set<double> seen;
    for (int i = 0; i <= 1000; ++i) seen.insert(p.k_at(i / 1000.0));
    CHECK(seen == std::set<double>{0.1, 0.3});
}

TEST_CASE("validation case matches its published definition") {
    DimensionlessProblem p = validation_case();
    CHECK(p.fourier() == doctest::Approx(0.02));
    CHECK(p.biot_left() == doctest::Approx(0.1));
    CHECK(p.biot_right() == doctest::Approx(0.2));
    CHECK(p.absorptivity() == doctest::Approx(1.0));
    CHECK(p.boundary().u_left_air(0.0) == doctest::Approx(0.0));
    CHECK(p.boundary().g_left_rad(0.0) == doctest::Approx(0.0));
    CHECK(p.boundary().u_right_air(0.0) == doctest::Approx(0.0));
    CHECK(p.boundary().u_left_air(1.5) == doctest::Approx(0.8));
    CHECK(p.initial()(0.37) == doctest::Approx(0.0));
}

TEST_CASE("rejected inputs") {
    WallSpec bad = historical_wall();
    bad.layers[1].conductivity = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    ReferenceValues refs = historical_refs();
    refs.T_ref = 0.0;
    CHECK_THROWS_AS(refs.validate(), std::invalid_argument);

    // boundary series shorter than the horizon
    WallSpec wall = historical_wall();
    DimensionalBoundary bc;
    bc.T_left_air = Signal::sampled({0.0, 1800.0}, {283.0, 284.0});
    bc.T_right_air = Signal::constant(293.0);
    bc.q_left_rad = Signal::constant(0.0);
    CHECK_THROWS_AS(nondimensionalize(wall, historical_refs(), bc,
                                      InitialProfile::constant(1.0), 7200.0),
                    std::invalid_argument);
}

TEST_CASE("parameter plumbing") {
    DimensionlessProblem p = validation_case();
    CHECK(p.param_value(ParamId::conductivity(2)) == doctest::Approx(0.3));
    DimensionlessProblem q = p.with_param(ParamId::capacity(1), 0.25);
    CHECK(q.param_value(ParamId::capacity(1)) == doctest::Approx(0.25));
    CHECK(p.param_value(ParamId::capacity(1)) == doctest::Approx(0.2));
    CHECK_THROWS_AS(p.param_value(ParamId::conductivity(3)), std::invalid_argument);
    CHECK_THROWS_AS(p.param_value(ParamId::glass_transmissivity()), std::invalid_argument);

    CHECK(parse_param("k2") == ParamId::conductivity(2));
    CHECK(parse_param("c11") == ParamId::capacity(11));
    CHECK(parse_param("tau") == ParamId::glass_transmissivity());
    CHECK_THROWS_AS(parse_param("zoo"), std::invalid_argument);
}
