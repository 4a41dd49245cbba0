#include "wallsens/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace wallsens {

Signal Signal::constant(double v) {
    Signal s;
    s.fn_ = [v](double) { return v; };
    return s;
}

Signal Signal::function(std::function<double(double)> f) {
    Signal s;
    s.fn_ = std::move(f);
    return s;
}

Signal Signal::sampled(std::vector<double> t, std::vector<double> v) {
    if (t.size() != v.size() || t.size() < 2)
        throw std::invalid_argument("sampled signal needs >= 2 (t, value) pairs");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1]))
            throw std::invalid_argument("sampled signal times must be strictly increasing");
    for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument("sampled signal has non-finite value");
    Signal s;
    s.times_ = std::move(t);
    s.values_ = std::move(v);
    return s;
}

double Signal::operator()(double t) const {
    if (!is_sampled()) return fn_(t);
    const auto& ts = times_;
    if (t <= ts.front()) return values_.front();
    if (t >= ts.back()) return values_.back();
    auto it = std::upper_bound(ts.begin(), ts.end(), t);
    std::size_t i = static_cast<std::size_t>(it - ts.begin());
    double w = (t - ts[i - 1]) / (ts[i] - ts[i - 1]);
    return values_[i - 1] + w * (values_[i] - values_[i - 1]);
}

bool Signal::covers(double t_max) const {
    if (!is_sampled()) return true;
    const double tol = 1e-9 * std::max(1.0, std::abs(t_max));
    return times_.front() <= tol && times_.back() >= t_max - tol;
}

}  // namespace wallsens
