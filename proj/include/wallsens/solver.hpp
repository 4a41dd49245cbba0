#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wallsens/grid.hpp"
#include "wallsens/param.hpp"
#include "wallsens/wall.hpp"

namespace wallsens {

// Thrown when the explicit march produces a non-finite value; names the first
// offending node and time level.
class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(int node, int level)
        : std::runtime_error("non-finite value at node " + std::to_string(node) +
                             ", time level " + std::to_string(level)),
          node_(node), level_(level) {}
    int node() const { return node_; }
    int level() const { return level_; }

  private:
    int node_, level_;
};

// Which derivative a track of a march result carries.
enum class SlotId { Value, DP, DQ, DPP, DQQ, DPQ };

std::string slot_name(SlotId s);

// Request for joint propagation of sensitivity coefficients along with the
// temperature march. order 1 carries X_p (and X_q when q is set); order 2
// additionally carries X_pp (and X_qq, X_pq when q is set).
struct SensRequest {
    std::optional<ParamId> p;
    std::optional<ParamId> q;
    int order = 1;
};

struct MarchOptions {
    std::vector<double> probes;  // probe positions x* (linear interpolation)
    int store_every = 0;         // > 0: keep every k-th time level of the fields
    // Restart support: when set, levels (start_level-1, start_level) are taken
    // from these states instead of the seeding procedure. Value track only.
    int start_level = 1;
    std::optional<std::pair<std::vector<double>, std::vector<double>>> restart_levels;
};

// Field samples on the (node, stored-level) lattice.
struct FieldStore {
    int n_nodes = 0;
    std::vector<double> times;   // stored t* levels
    std::vector<double> values;  // times.size() * n_nodes, level-major

    double at(int level, int node) const { return values[static_cast<std::size_t>(level) * n_nodes + node]; }
    int n_levels() const { return static_cast<int>(times.size()); }
};

// Output series of one track (the solution itself or one derivative field).
struct TrackOutputs {
    SlotId slot = SlotId::Value;
    std::vector<double> flux;                 // interior-surface flux, one per level
    std::vector<std::vector<double>> probes;  // [probe][level]
    FieldStore field;                         // populated when store_every > 0
    double squared_spacetime_integral = 0.0;  // trapezoid of value^2 over x* and t*
    std::vector<double> final_level;          // full profile at t_max
};

struct MarchResult {
    Grid grid;
    SensRequest request;
    std::vector<TrackOutputs> tracks;  // tracks[0] is the solution u

    const TrackOutputs& track(SlotId s) const;
    bool has_track(SlotId s) const;

    // Thermal loads E*(t0, t1) of a track: trapezoidal time integral of its
    // flux series, exact additivity over adjacent intervals by construction
    // (difference of a cumulative integral).
    double loads(double t0, double t1, SlotId s = SlotId::Value) const;

  private:
    friend MarchResult finish_result(MarchResult);
    std::vector<std::vector<double>> cumulative_;  // per track
};

// Dufort-Frankel march of the temperature field alone.
MarchResult solve(const DimensionlessProblem& problem, const Grid& grid,
                  const MarchOptions& options = {});

// Joint Dufort-Frankel march of the temperature field and the requested
// sensitivity coefficients (direct differentiation of the discrete scheme).
MarchResult propagate(const DimensionlessProblem& problem, const Grid& grid,
                      const SensRequest& request, const MarchOptions& options = {});

// Trapezoidal integral of a sampled series over [t0, t1] (values sampled at
// uniform dt from t=0); endpoints inside a step are handled by linear
// interpolation of the cumulative integral.
double integrate_series(const std::vector<double>& values, double dt, double t0, double t1);

}  // namespace wallsens
