#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wallsens/solver.hpp"
#include "wallsens/wall.hpp"
#include "wallsens/weather.hpp"
#include "wallsens/window.hpp"

namespace wallsens {

// Three-layer historical wall (dressed stone / rubble stone / lime coater,
// exterior to interior) with its standard reference values.
WallSpec historical_wall();
ReferenceValues historical_refs();
GlassSpec single_glazing();

// Year-long study case: the historical wall driven by bundled synthetic
// weather (the in-situ campaign data is not distributed; rankings from this
// case are order-of-magnitude).
struct AnnualWallCase {
    DimensionlessProblem problem;
    WeatherSeries weather;
    double horizon_seconds = 0.0;
    Grid grid;  // dx* = 1e-2, dt* = 1e-2
};

AnnualWallCase annual_wall_case(std::uint64_t weather_seed = 2203);

// Wall + single-glazed window sharing the weather series.
struct EnvelopeCase {
    AnnualWallCase wall;
    GlassSpec glass;
    DimensionlessProblem glass_prob;
    Grid glass_grid;  // 13 nodes across the pane
};

EnvelopeCase envelope_case(std::uint64_t weather_seed = 2203);

// dE*/dp over [t0, t1] via one joint march (loads output sensitivity).
double loads_derivative(const DimensionlessProblem& problem, const Grid& grid, const ParamId& p,
                        double t0, double t1);
// d2E*/dp dq likewise.
double loads_mixed_derivative(const DimensionlessProblem& problem, const Grid& grid,
                              const ParamId& p, const ParamId& q, double t0, double t1);

// Thermal loads E* over [t0, t1] from a plain solve.
double loads_value(const DimensionlessProblem& problem, const Grid& grid, double t0, double t1);

// Calendar month boundaries [start, end) in seconds, clipped to the horizon.
std::vector<std::pair<double, double>> month_intervals_seconds(double horizon_seconds);

}  // namespace wallsens
