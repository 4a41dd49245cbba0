#include "doctest.h"

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "wallsens/fd_schemes.hpp"

using namespace wallsens;

namespace {

EvalCache cache_of(std::function<double(const std::vector<double>&)> f) {
    return EvalCache([f](const std::vector<double>& p) { return std::vector<double>{f(p)}; });
}

}  // namespace

TEST_CASE("central difference is exact on affine models") {
    auto cache = cache_of([](const std::vector<double>& p) { return 4.5 * p[0] - 2.0; });
    auto d = fd_sensitivity(cache, {0.7}, 0, FdScheme{FdKind::Central, 1e-2});
    CHECK(d[0] == doctest::Approx(4.5).epsilon(1e-12));
    CHECK(cache.evaluations() == 2);
}

TEST_CASE("mixed cross stencil is exact on the product model") {
    auto cache = cache_of([](const std::vector<double>& p) { return p[0] * p[1]; });
    auto d = fd_sensitivity(cache, {0.3, 0.8}, 0, FdScheme{FdKind::MixedCentral, 1e-2}, 1);
    CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(cache.evaluations() == 4);
}

TEST_CASE("second-order stencils are exact on quadratics") {
    auto cache = cache_of([](const std::vector<double>& p) { return 3.0 * p[0] * p[0]; });
    auto d2c = fd_sensitivity(cache, {0.5}, 0, FdScheme{FdKind::SecondCentral, 1e-2});
    CHECK(d2c[0] == doctest::Approx(6.0).epsilon(1e-8));
    auto d2f = fd_sensitivity(cache, {0.5}, 0, FdScheme{FdKind::SecondForward, 1e-2});
    CHECK(d2f[0] == doctest::Approx(6.0).epsilon(1e-8));
    auto d3p = fd_sensitivity(cache, {0.5}, 0, FdScheme{FdKind::ThreePointBackward, 1e-2});
    CHECK(d3p[0] == doctest::Approx(3.0).epsilon(1e-9));  // first derivative at 0.5
}

TEST_CASE("observed convergence orders match the schemes") {
    auto model = [](const std::vector<double>& p) { return std::exp(p[0]); };
    const double x0 = 0.7;
    const double exact = std::exp(x0);

    auto order_of = [&](FdKind kind) {
        std::vector<double> hs = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (double h : hs) {
            auto cache = cache_of(model);
            auto d = fd_sensitivity(cache, {x0}, 0, FdScheme{kind, h});
            double lx = std::log(h), ly = std::log(std::abs(d[0] - exact));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        double n = 5.0;
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };

    CHECK(std::abs(order_of(FdKind::Forward) - 1.0) < 0.3);
    CHECK(std::abs(order_of(FdKind::Backward) - 1.0) < 0.3);
    CHECK(std::abs(order_of(FdKind::Central) - 2.0) < 0.3);
    CHECK(std::abs(order_of(FdKind::ThreePointBackward) - 2.0) < 0.3);
}

TEST_CASE("evaluation counts honor shared stencil points") {
    CHECK(evaluation_count(FdKind::Forward, 2) == 3);   // base shared
    CHECK(evaluation_count(FdKind::Backward, 2) == 3);
    CHECK(evaluation_count(FdKind::Central, 2) == 4);   // no sharing
    CHECK(evaluation_count(FdKind::Forward, 5) == 6);
    CHECK(evaluation_count(FdKind::Central, 5) == 10);

    // independent enumeration of the full-Hessian union for two parameters
    std::set<std::pair<long, long>> pts;
    for (int s : {-1, 0, 1}) pts.insert({s, 0});          // d2/dp2 stencil
    for (int s : {-1, 0, 1}) pts.insert({0, s});          // d2/dq2 stencil
    for (int sp : {-1, 1})
        for (int sq : {-1, 1}) pts.insert({sp, sq});      // mixed stencil
    CHECK(hessian_evaluation_count(2) == static_cast<long>(pts.size()));
}

TEST_CASE("cache shares the base point across forward stencils") {
    auto cache = cache_of([](const std::vector<double>& p) { return p[0] + 2.0 * p[1]; });
    fd_sensitivity(cache, {0.2, 0.4}, 0, FdScheme{FdKind::Forward, 1e-2});
    fd_sensitivity(cache, {0.2, 0.4}, 1, FdScheme{FdKind::Forward, 1e-2});
    CHECK(cache.evaluations() == 3);
}

TEST_CASE("stencil points outside the admissible domain are rejected") {
    auto cache = cache_of([](const std::vector<double>& p) { return p[0]; });
    std::vector<std::pair<double, double>> bounds = {{0.0, 1.0}};
    CHECK_THROWS_WITH_AS(
        fd_sensitivity(cache, {0.995}, 0, FdScheme{FdKind::Forward, 1e-2}, std::nullopt, bounds),
        doctest::Contains("outside admissible domain"), std::invalid_argument);
    CHECK_NOTHROW(
        fd_sensitivity(cache, {0.5}, 0, FdScheme{FdKind::Forward, 1e-2}, std::nullopt, bounds));
    CHECK_THROWS_AS(fd_sensitivity(cache, {0.5}, 0, FdScheme{FdKind::Central, -1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fd_sensitivity(cache, {0.5}, 3, FdScheme{FdKind::Central, 1e-2}),
                    std::invalid_argument);
}
