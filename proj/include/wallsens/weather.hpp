#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wallsens/signal.hpp"

namespace wallsens {

// Hourly weather series over one year, dimensional units (s, W/m^2, K).
struct WeatherSeries {
    std::vector<double> time;   // seconds from start
    std::vector<double> q_sw;   // incident shortwave flux
    std::vector<double> T_out;  // exterior air temperature
    std::vector<double> T_in;   // interior air temperature

    Signal q_signal() const { return Signal::sampled(time, q_sw); }
    Signal t_out_signal() const { return Signal::sampled(time, T_out); }
    Signal t_in_signal() const { return Signal::sampled(time, T_in); }
    double horizon() const { return time.back(); }
};

// Synthetic annual weather: seasonal + daily sinusoids with smoothed
// fixed-seed noise. Generator (hour h, day d = h/24, hour-of-day o):
//   T_out = 284.65 + 7.5 sin(2 pi (d-110)/365.25) + 4.0 sin(2 pi (o-9)/24) + 2.0 AR(h)
//   T_in  = 293.15 + 0.8 sin(2 pi (o-10)/24) + 0.3 AR(h)
//   q_sw  = max(0, (540 + 260 sin(2 pi (d-81)/365.25)) sin(pi (o-6)/12)) * clearness
// with AR the unit-variance AR(1) process AR(h) = 0.95 AR(h-1) + xi and
// clearness clamped to [0.15, 1].
WeatherSeries synthetic_year(std::uint64_t seed, int hours = 8760);

// CSV round-trip with fixed header "t,q_sw,T_out,T_in".
std::string weather_to_csv(const WeatherSeries& series);
WeatherSeries weather_from_csv(const std::string& text);

}  // namespace wallsens
