#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "wallsens/grid.hpp"
#include "wallsens/param.hpp"
#include "wallsens/solver.hpp"
#include "wallsens/wall.hpp"

namespace wallsens {

class OracleFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Configuration of the high-accuracy reference solver: an implicit
// trapezoidal (Crank-Nicolson) method-of-lines march on a grid refined
// relative to the production grid, restricted back to production nodes by
// injection.
struct OracleConfig {
    int refine_x = 4;
    int refine_t = 4;
    // self-convergence guard: the (r, 2r) refinement pair must agree to this
    // tolerance in max eps2
    double tolerance = 5e-4;
    bool check_self_convergence = true;
};

// Reference field on the production lattice: all time levels, all nodes.
struct ReferenceField {
    Grid grid;
    std::vector<double> values;  // (n_steps+1) * n_nodes, level-major
    double at(int level, int node) const {
        return values[static_cast<std::size_t>(level) * grid.n_nodes + node];
    }
};

ReferenceField reference_solve(const DimensionlessProblem& problem, const Grid& grid,
                               const OracleConfig& config = {});

// Per-node RMS-over-time error profile between a fully stored march track and
// a reference field on the same production lattice.
std::vector<double> eps2_profile(const FieldStore& numeric, const ReferenceField& reference);
std::vector<double> eps2_profile(const FieldStore& numeric, const FieldStore& reference);

// Reference sensitivity field: Richardson-extrapolated central finite
// differences of the reference solver across the parameter axis
// (step dp, pair (dp, dp/2)). order 1: dX/dp; order 2 with q: mixed; order 2
// without q: pure second derivative.
ReferenceField reference_sensitivity(const DimensionlessProblem& problem, const Grid& grid,
                                     const ParamId& p, std::optional<ParamId> q, int order,
                                     const OracleConfig& config = {}, double dp = 1e-4);

}  // namespace wallsens
