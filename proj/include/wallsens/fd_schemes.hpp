#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace wallsens {

// Finite-difference approximations of sensitivity coefficients across the
// parameter axis. The model is an arbitrary closure over a parameter vector;
// the output may be a scalar wrapped in a 1-vector or a whole field.
enum class FdKind {
    Forward,
    Backward,
    Central,
    ThreePointBackward,
    SecondForward,   // second derivative, forward stencil
    SecondCentral,   // second derivative, central stencil
    MixedCentral     // d2/dp dq, 4-point cross stencil
};

struct FdScheme {
    FdKind kind = FdKind::Central;
    double step = 1e-3;  // parameter step, always explicit (no auto-tuning)
};

using ModelFn = std::function<std::vector<double>(const std::vector<double>&)>;

// Memoizing wrapper so stencils sharing evaluation points (e.g. the base
// point of forward differences across several parameters) are counted and
// computed once.
class EvalCache {
  public:
    explicit EvalCache(ModelFn model) : model_(std::move(model)) {}
    const std::vector<double>& operator()(const std::vector<double>& params);
    long evaluations() const { return evaluations_; }

  private:
    ModelFn model_;
    std::map<std::vector<double>, std::vector<double>> memo_;
    long evaluations_ = 0;
};

// Weighted stencil combination approximating the derivative of `model` with
// respect to parameter `target` (and `target2` for MixedCentral) at `base`.
// `bounds`, when given, are the admissible domain per parameter; a stencil
// point falling outside is rejected.
std::vector<double> fd_sensitivity(
    EvalCache& model, const std::vector<double>& base, int target, const FdScheme& scheme,
    std::optional<int> target2 = std::nullopt,
    const std::vector<std::pair<double, double>>& bounds = {});

// Number of distinct model evaluations needed for all first-order sensitivity
// coefficients of n_params parameters under the scheme (union of stencils;
// forward/backward share the base point).
long evaluation_count(FdKind kind, int n_params);

// Distinct evaluations for a full Hessian (all pure + mixed second-order
// coefficients) of n_params parameters with central stencils.
long hessian_evaluation_count(int n_params);

}  // namespace wallsens
