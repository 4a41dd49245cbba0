#include "wallsens/fd_schemes.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace wallsens {

namespace {

struct StencilPoint {
    std::vector<std::pair<int, double>> offsets;  // (param index, displacement)
    double weight;
};

// Stencil weights per Appendix-style formulas; `h` is the parameter step.
std::vector<StencilPoint> stencil(const FdScheme& s, int p, std::optional<int> p2) {
    const double h = s.step;
    switch (s.kind) {
        case FdKind::Forward:
            return {{{{p, h}}, 1.0 / h}, {{{p, 0.0}}, -1.0 / h}};
        case FdKind::Backward:
            return {{{{p, 0.0}}, 1.0 / h}, {{{p, -h}}, -1.0 / h}};
        case FdKind::Central:
            return {{{{p, h}}, 0.5 / h}, {{{p, -h}}, -0.5 / h}};
        case FdKind::ThreePointBackward:
            return {{{{p, 0.0}}, 1.5 / h}, {{{p, -h}}, -2.0 / h}, {{{p, -2.0 * h}}, 0.5 / h}};
        case FdKind::SecondForward:
            return {{{{p, 2.0 * h}}, 1.0 / (h * h)},
                    {{{p, h}}, -2.0 / (h * h)},
                    {{{p, 0.0}}, 1.0 / (h * h)}};
        case FdKind::SecondCentral:
            return {{{{p, h}}, 1.0 / (h * h)},
                    {{{p, 0.0}}, -2.0 / (h * h)},
                    {{{p, -h}}, 1.0 / (h * h)}};
        case FdKind::MixedCentral: {
            if (!p2) throw std::invalid_argument("mixed scheme needs a second parameter");
            const double w = 0.25 / (h * h);
            const int q = *p2;
            return {{{{p, h}, {q, h}}, w},
                    {{{p, h}, {q, -h}}, -w},
                    {{{p, -h}, {q, h}}, -w},
                    {{{p, -h}, {q, -h}}, w}};
        }
    }
    throw std::invalid_argument("unknown scheme");
}

}  // namespace

const std::vector<double>& EvalCache::operator()(const std::vector<double>& params) {
    auto it = memo_.find(params);
    if (it != memo_.end()) return it->second;
    ++evaluations_;
    return memo_.emplace(params, model_(params)).first->second;
}

std::vector<double> fd_sensitivity(EvalCache& model, const std::vector<double>& base, int target,
                                   const FdScheme& scheme, std::optional<int> target2,
                                   const std::vector<std::pair<double, double>>& bounds) {
    if (!(scheme.step > 0.0)) throw std::invalid_argument("parameter step must be > 0");
    if (target < 0 || target >= static_cast<int>(base.size()))
        throw std::invalid_argument("target parameter index out of range");
    if (target2 && (*target2 < 0 || *target2 >= static_cast<int>(base.size())))
        throw std::invalid_argument("second parameter index out of range");

    std::vector<double> result;
    for (const auto& pt : stencil(scheme, target, target2)) {
        std::vector<double> params = base;
        for (auto [idx, d] : pt.offsets) params[idx] += d;
        if (!bounds.empty()) {
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (params[i] < bounds[i].first || params[i] > bounds[i].second)
                    throw std::invalid_argument(
                        "stencil point outside admissible domain: parameter " +
                        std::to_string(i) + " at " + std::to_string(params[i]));
            }
        }
        const std::vector<double>& y = model(params);
        if (result.empty()) result.assign(y.size(), 0.0);
        if (y.size() != result.size())
            throw std::invalid_argument("model output changed shape across the stencil");
        for (std::size_t i = 0; i < y.size(); ++i) result[i] += pt.weight * y[i];
    }
    return result;
}

namespace {

long count_union(const std::vector<std::vector<StencilPoint>>& stencils, int n_params) {
    // quantize displacements to step multiples to dedupe shared points exactly
    std::set<std::vector<long>> points;
    for (const auto& st : stencils)
        for (const auto& pt : st) {
            std::vector<long> key(n_params, 0);
            for (auto [idx, d] : pt.offsets)
                key[idx] = std::lround(d * 1e12);
            points.insert(key);
        }
    return static_cast<long>(points.size());
}

}  // namespace

long evaluation_count(FdKind kind, int n_params) {
    if (n_params < 1) throw std::invalid_argument("need at least one parameter");
    FdScheme s{kind, 1.0};
    std::vector<std::vector<StencilPoint>> stencils;
    for (int p = 0; p < n_params; ++p) {
        if (kind == FdKind::MixedCentral) {
            for (int q = p + 1; q < n_params; ++q) stencils.push_back(stencil(s, p, q));
        } else {
            stencils.push_back(stencil(s, p, std::nullopt));
        }
    }
    return count_union(stencils, n_params);
}

long hessian_evaluation_count(int n_params) {
    if (n_params < 1) throw std::invalid_argument("need at least one parameter");
    FdScheme diag{FdKind::SecondCentral, 1.0};
    FdScheme mixed{FdKind::MixedCentral, 1.0};
    std::vector<std::vector<StencilPoint>> stencils;
    for (int p = 0; p < n_params; ++p) {
        stencils.push_back(stencil(diag, p, std::nullopt));
        for (int q = p + 1; q < n_params; ++q) stencils.push_back(stencil(mixed, p, q));
    }
    return count_union(stencils, n_params);
}

}  // namespace wallsens
