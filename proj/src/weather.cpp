#include "wallsens/weather.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "wallsens/csv_io.hpp"

namespace wallsens {

WeatherSeries synthetic_year(std::uint64_t seed, int hours) {
    using std::numbers::pi;
    if (hours < 48) throw std::invalid_argument("weather series needs at least two days");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    // unit-variance AR(1) streams for temperature drift and sky clearness
    const double phi = 0.95;
    const double inno = std::sqrt(1.0 - phi * phi);
    double ar_t = gauss(rng), ar_i = gauss(rng), ar_c = gauss(rng);

    WeatherSeries w;
    w.time.reserve(hours);
    w.q_sw.reserve(hours);
    w.T_out.reserve(hours);
    w.T_in.reserve(hours);
    for (int h = 0; h < hours; ++h) {
        double d = h / 24.0;
        double o = h % 24;
        ar_t = phi * ar_t + inno * gauss(rng);
        ar_i = phi * ar_i + inno * gauss(rng);
        ar_c = phi * ar_c + inno * gauss(rng);

        double t_out = 284.65 + 7.5 * std::sin(2.0 * pi * (d - 110.0) / 365.25) +
                       4.0 * std::sin(2.0 * pi * (o - 9.0) / 24.0) + 2.0 * ar_t;
        double t_in = 293.15 + 0.8 * std::sin(2.0 * pi * (o - 10.0) / 24.0) + 0.3 * ar_i;

        double elevation = std::sin(pi * (o - 6.0) / 12.0);
        double seasonal = 540.0 + 260.0 * std::sin(2.0 * pi * (d - 81.0) / 365.25);
        double clearness = std::clamp(0.7 + 0.3 * ar_c, 0.15, 1.0);
        double q = (o > 6.0 && o < 18.0) ? std::max(0.0, seasonal * elevation * clearness) : 0.0;

        w.time.push_back(3600.0 * h);
        w.T_out.push_back(t_out);
        w.T_in.push_back(t_in);
        w.q_sw.push_back(q);
    }
    return w;
}

std::string weather_to_csv(const WeatherSeries& w) {
    std::string out = "t,q_sw,T_out,T_in\n";
    char buf[160];
    for (std::size_t i = 0; i < w.time.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", w.time[i], w.q_sw[i],
                      w.T_out[i], w.T_in[i]);
        out += buf;
    }
    return out;
}

WeatherSeries weather_from_csv(const std::string& text) {
    CsvTable table = parse_csv(text, {"t", "q_sw", "T_out", "T_in"});
    WeatherSeries w;
    w.time = table.column(0);
    w.q_sw = table.column(1);
    w.T_out = table.column(2);
    w.T_in = table.column(3);
    if (w.time.size() < 2) throw std::invalid_argument("weather series needs >= 2 rows");
    for (std::size_t i = 1; i < w.time.size(); ++i)
        if (!(w.time[i] > w.time[i - 1]))
            throw std::invalid_argument("weather time column must increase (row " +
                                        std::to_string(i + 2) + ")");
    return w;
}

}  // namespace wallsens
