#include "wallsens/cases.hpp"

namespace wallsens {

WallSpec historical_wall() {
    WallSpec wall;
    wall.layers = {
        Layer{1.75, 1.6e6, 0.20, "dressed stone"},
        Layer{2.30, 2.8e6, 0.28, "rubble stone"},
        Layer{0.80, 2.2e6, 0.02, "lime coater"},
    };
    wall.h_left = 15.0;
    wall.h_right = 8.0;
    wall.absorptivity = 0.6;
    return wall;
}

ReferenceValues historical_refs() {
    ReferenceValues refs;
    refs.k_ref = 1.75;   // dressed stone
    refs.c_ref = 1.6e6;
    refs.T_ref = 293.15;
    refs.t_ref = 3600.0;
    refs.length = 0.5;
    return refs;
}

GlassSpec single_glazing() { return GlassSpec{}; }

AnnualWallCase annual_wall_case(std::uint64_t weather_seed) {
    WeatherSeries weather = synthetic_year(weather_seed);
    const double horizon = weather.horizon();

    WallSpec wall = historical_wall();
    ReferenceValues refs = historical_refs();

    DimensionalBoundary bc;
    bc.T_left_air = weather.t_out_signal();
    bc.T_right_air = weather.t_in_signal();
    bc.q_left_rad = weather.q_signal();

    InitialProfile initial = InitialProfile::linear(weather.T_out.front() / refs.T_ref,
                                                    weather.T_in.front() / refs.T_ref);

    DimensionlessProblem problem = nondimensionalize(wall, refs, bc, initial, horizon);
    Grid grid(1e-2, 1e-2, horizon / refs.t_ref);
    return AnnualWallCase{std::move(problem), std::move(weather), horizon, grid};
}

EnvelopeCase envelope_case(std::uint64_t weather_seed) {
    AnnualWallCase wall = annual_wall_case(weather_seed);
    GlassSpec glass = single_glazing();
    const ReferenceValues refs = historical_refs();
    const auto& w = wall.weather;
    DimensionlessProblem glass_prob =
        glass_problem(glass, 15.0, 8.0, w.t_out_signal(), w.t_in_signal(), w.q_signal(),
                      refs.T_ref, refs.t_ref, wall.horizon_seconds);
    Grid glass_grid(1.0 / 12.0, 1e-3, wall.horizon_seconds / refs.t_ref);
    return EnvelopeCase{std::move(wall), glass, std::move(glass_prob), glass_grid};
}

double loads_derivative(const DimensionlessProblem& problem, const Grid& grid, const ParamId& p,
                        double t0, double t1) {
    SensRequest req;
    req.p = p;
    req.order = 1;
    return propagate(problem, grid, req).loads(t0, t1, SlotId::DP);
}

double loads_mixed_derivative(const DimensionlessProblem& problem, const Grid& grid,
                              const ParamId& p, const ParamId& q, double t0, double t1) {
    SensRequest req;
    req.p = p;
    req.q = q;
    req.order = 2;
    return propagate(problem, grid, req).loads(t0, t1, SlotId::DPQ);
}

double loads_value(const DimensionlessProblem& problem, const Grid& grid, double t0, double t1) {
    return solve(problem, grid).loads(t0, t1);
}

std::vector<std::pair<double, double>> month_intervals_seconds(double horizon_seconds) {
    static const int days[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    std::vector<std::pair<double, double>> out;
    double start = 0.0;
    for (int m = 0; m < 12; ++m) {
        double end = start + days[m] * 86400.0;
        if (end > horizon_seconds) end = horizon_seconds;
        if (end > start) out.emplace_back(start, end);
        if (end >= horizon_seconds) break;
        start = end;
    }
    return out;
}

}  // namespace wallsens
