#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace wallsens {

// A scalar signal of (dimensionless) time. Either a closed-form expression
// or a sampled series with linear interpolation between samples.
class Signal {
  public:
    Signal() : fn_([](double) { return 0.0; }) {}

    static Signal constant(double v);
    static Signal function(std::function<double(double)> f);
    // Samples must have strictly increasing times. Evaluation outside the
    // sampled range is rejected by covers(); within the range it is linear.
    static Signal sampled(std::vector<double> t, std::vector<double> v);

    double operator()(double t) const;

    // True when the signal is defined on the whole of [0, t_max].
    bool covers(double t_max) const;

    bool is_sampled() const { return !times_.empty(); }
    const std::vector<double>& sample_times() const { return times_; }
    const std::vector<double>& sample_values() const { return values_; }

  private:
    std::function<double(double)> fn_;
    std::vector<double> times_, values_;
};

}  // namespace wallsens
