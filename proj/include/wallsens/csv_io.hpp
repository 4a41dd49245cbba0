#pragma once

#include <string>
#include <vector>

#include "wallsens/signal.hpp"

namespace wallsens {

// Minimal numeric CSV: a fixed header row followed by rows of doubles.
// Errors carry the 1-based line number of the offending row.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::vector<double> column(int idx) const;
};

// Parses and, when `expected_header` is non-empty, enforces the header.
CsvTable parse_csv(const std::string& text, const std::vector<std::string>& expected_header = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Boundary series file: header "t,value", strictly increasing time, gaps
// larger than 1.5x the median sampling step rejected.
struct SampledSeries {
    std::vector<double> time;
    std::vector<double> value;
    Signal signal() const { return Signal::sampled(time, value); }
};

SampledSeries series_from_csv(const std::string& text);
std::string series_to_csv(const SampledSeries& series);

// Formats a double with full round-trip precision.
std::string format_double(double v);

}  // namespace wallsens
