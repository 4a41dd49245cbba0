#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wallsens/param.hpp"
#include "wallsens/solver.hpp"
#include "wallsens/wall.hpp"

namespace wallsens {

// Second-order Taylor expansion of the model outputs (temperature field,
// interior flux series, thermal loads) around the a-priori parameter values.
// All coefficients come from one joint march of the solution and its
// sensitivity coefficients.

struct TaylorTerms {
    FieldStore field;            // empty unless store_every > 0
    std::vector<double> flux;    // per time level
    std::vector<double> loads;   // per requested interval
};

struct TaylorBuildOptions {
    int store_every = 0;  // sampling stride of the temperature-field surrogate
    std::vector<std::pair<double, double>> load_intervals;
    // Per-parameter trust interval; evaluations outside are flagged as
    // extrapolated (still computed).
    std::vector<std::pair<double, double>> trust;
};

struct TaylorModel {
    std::vector<ParamId> params;  // one or two
    std::vector<double> anchors;
    int order = 2;
    Grid grid;
    int store_every = 0;
    std::vector<std::pair<double, double>> load_intervals;
    std::vector<std::pair<double, double>> trust;

    TaylorTerms base, d_p, d_q, d_pp, d_qq, d_pq;

    bool two_params() const { return params.size() == 2; }
};

TaylorModel build_taylor(const DimensionlessProblem& problem, const Grid& grid,
                         const std::vector<ParamId>& params, int order,
                         const TaylorBuildOptions& options = {});

struct TaylorEvalInfo {
    std::vector<double> displacement;
    bool extrapolated = false;
};

// Predicted flux series / loads / temperature field at the given parameter
// values. `info`, when non-null, receives the displacement and the
// extrapolation flag.
std::vector<double> taylor_flux(const TaylorModel& model, const std::vector<double>& values,
                                TaylorEvalInfo* info = nullptr);
double taylor_load(const TaylorModel& model, int interval, const std::vector<double>& values,
                   TaylorEvalInfo* info = nullptr);
FieldStore taylor_field(const TaylorModel& model, const std::vector<double>& values,
                        TaylorEvalInfo* info = nullptr);

// RMS surrogate errors against direct reference evaluations, normalized by
// the total summed sample count (nodes x stored levels for fields, levels for
// flux series).
double surrogate_error_field(const TaylorModel& model, const std::vector<double>& values,
                             const FieldStore& reference);
double surrogate_error_flux(const TaylorModel& model, const std::vector<double>& values,
                            const std::vector<double>& reference_flux);

// Versioned JSON round-trip of a surrogate (coefficient tensors included so
// parameter sweeps can rerun without re-solving).
std::string taylor_to_json(const TaylorModel& model);
TaylorModel taylor_from_json(const std::string& text);

}  // namespace wallsens
