#include "wallsens/csv_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wallsens {

std::vector<double> CsvTable::column(int idx) const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.at(idx));
    return out;
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

CsvTable parse_csv(const std::string& text, const std::vector<std::string>& expected_header) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto cells = split(line);
        if (line_no == 1) {
            table.header = cells;
            if (!expected_header.empty() && cells != expected_header) {
                std::string want;
                for (const auto& h : expected_header) want += (want.empty() ? "" : ",") + h;
                throw std::invalid_argument("unexpected CSV header, want: " + want);
            }
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) {
            try {
                std::size_t used = 0;
                double v = std::stod(cell, &used);
                if (used != cell.size()) throw std::invalid_argument("trailing characters");
                row.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed CSV value '" + cell + "' at line " +
                                            std::to_string(line_no));
            }
        }
        if (row.size() != table.header.size())
            throw std::invalid_argument("wrong cell count at line " + std::to_string(line_no));
        table.rows.push_back(std::move(row));
    }
    if (table.header.empty()) throw std::invalid_argument("empty CSV input");
    return table;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

SampledSeries series_from_csv(const std::string& text) {
    CsvTable table = parse_csv(text, {"t", "value"});
    if (table.rows.size() < 2) throw std::invalid_argument("series needs >= 2 rows");
    SampledSeries s;
    s.time = table.column(0);
    s.value = table.column(1);
    std::vector<double> gaps;
    for (std::size_t i = 1; i < s.time.size(); ++i) {
        if (!(s.time[i] > s.time[i - 1]))
            throw std::invalid_argument("time column must increase (line " +
                                        std::to_string(i + 2) + ")");
        gaps.push_back(s.time[i] - s.time[i - 1]);
    }
    std::vector<double> sorted = gaps;
    std::sort(sorted.begin(), sorted.end());
    double median = sorted[sorted.size() / 2];
    for (std::size_t i = 0; i < gaps.size(); ++i)
        if (gaps[i] > 1.5 * median)
            throw std::invalid_argument("gap larger than the sampling step before line " +
                                        std::to_string(i + 3));
    return s;
}

std::string series_to_csv(const SampledSeries& series) {
    std::string out = "t,value\n";
    for (std::size_t i = 0; i < series.time.size(); ++i)
        out += format_double(series.time[i]) + "," + format_double(series.value[i]) + "\n";
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace wallsens
