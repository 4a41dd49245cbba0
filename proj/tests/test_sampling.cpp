#include "doctest.h"

#include <cmath>
#include <set>
#include <stdexcept>

#include "wallsens/sampling.hpp"

using namespace wallsens;

TEST_CASE("sobol sequence starts at the half point after skipping index zero") {
    SobolSequence seq(3);
    auto p1 = seq.next();
    for (double v : p1) CHECK(v == doctest::Approx(0.5).epsilon(1e-15));
    auto p2 = seq.next();
    CHECK(p2[0] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(p2[1] == doctest::Approx(0.25).epsilon(1e-15));
    auto p3 = seq.next();
    CHECK(p3[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p3[1] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(SobolSequence(0), std::invalid_argument);
    CHECK_THROWS_AS(SobolSequence(64), std::invalid_argument);
}

TEST_CASE("sobol sequence is balanced: dyadic blocks have uniform means") {
    SobolSequence seq(5);
    const int n = 4096;
    std::vector<double> mean(5, 0.0);
    for (int i = 0; i < n; ++i) {
        auto p = seq.next();
        for (int d = 0; d < 5; ++d) mean[d] += p[d] / n;
    }
    for (double m : mean) CHECK(std::abs(m - 0.5) < 0.01);
}

TEST_CASE("latin hypercube keeps exactly one sample per stratum per axis") {
    SampleDesign design;
    design.kind = SampleDesign::Kind::LatinHypercube;
    design.n_samples = 128;
    design.domains = {{0.0, 1.0}, {-2.0, 2.0}};
    design.seed = 42;
    auto rows = generate_design(design);
    REQUIRE(rows.size() == 128);
    for (int d = 0; d < 2; ++d) {
        std::set<int> strata;
        for (const auto& r : rows) {
            double unit = (r[d] - design.domains[d].first) /
                          (design.domains[d].second - design.domains[d].first);
            CHECK(unit > 0.0);
            CHECK(unit < 1.0);
            strata.insert(static_cast<int>(unit * 128));
        }
        CHECK(strata.size() == 128);
    }
}

TEST_CASE("latin hypercube marginal means approach one half") {
    SampleDesign design;
    design.kind = SampleDesign::Kind::LatinHypercube;
    design.n_samples = 1000;
    design.domains = {{0.0, 1.0}, {0.0, 1.0}};
    design.seed = 7;
    auto rows = generate_design(design);
    double m0 = 0.0, m1 = 0.0;
    for (const auto& r : rows) {
        m0 += r[0] / rows.size();
        m1 += r[1] / rows.size();
    }
    CHECK(std::abs(m0 - 0.5) < 0.02);
    CHECK(std::abs(m1 - 0.5) < 0.02);
}

TEST_CASE("single-sample latin hypercube lands inside the open unit square") {
    SampleDesign design;
    design.kind = SampleDesign::Kind::LatinHypercube;
    design.n_samples = 1;
    design.domains = {{0.0, 1.0}, {0.0, 1.0}};
    design.seed = 3;
    auto rows = generate_design(design);
    REQUIRE(rows.size() == 1);
    for (double v : rows[0]) {
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("designs are deterministic in the seed") {
    SampleDesign design;
    design.kind = SampleDesign::Kind::SobolSequence;
    design.n_samples = 37;
    design.domains = {{0.1, 0.9}, {2.0, 5.0}};
    design.seed = 1234;
    auto a = generate_design(design);
    auto b = generate_design(design);
    CHECK(a == b);
    design.seed = 1235;
    auto c = generate_design(design);
    CHECK(a != c);
    for (const auto& row : c)
        for (int d = 0; d < 2; ++d) {
            CHECK(row[d] >= design.domains[d].first);
            CHECK(row[d] <= design.domains[d].second);
        }
}

TEST_CASE("degenerate domains are rejected") {
    SampleDesign design;
    design.n_samples = 8;
    design.domains = {{1.0, 1.0}};
    CHECK_THROWS_AS(generate_design(design), std::invalid_argument);
    design.domains = {};
    CHECK_THROWS_AS(generate_design(design), std::invalid_argument);
}
