#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wallsens/csv_io.hpp"
#include "wallsens/wall.hpp"

namespace wallsens {

// Declarative wall description loaded from a JSON config document
// (see docs/wall_config.schema.json). Boundary series live in separate
// "t,value" CSV files with dimensional units (seconds, kelvin, W/m^2).
struct WallConfig {
    WallSpec wall;
    ReferenceValues refs;  // length filled from the layer table
    enum class InitialKind { Constant, Linear } initial_kind = InitialKind::Linear;
    double initial_value = 0.0;  // dimensionless u0 for Constant
    std::string t_out_path, t_in_path, q_sw_path;  // q optional (empty)
};

WallConfig load_wall_config(const std::string& path);

// Reads and scales the referenced boundary series, returning the problem and
// the covered horizon in seconds (the shortest series decides).
struct LoadedProblem {
    DimensionlessProblem problem;
    double horizon_seconds;
};

LoadedProblem build_problem(const WallConfig& config);

// Dimensional boundary series read from a "t,value" CSV.
SampledSeries ingest_series(const std::string& path);

// 64-bit FNV-1a content hash used in run manifests.
std::uint64_t fnv1a64(const std::string& content);
std::string fmt_hash(std::uint64_t hash);

// Reproducibility manifest of one CLI run.
struct Manifest {
    std::string tool_version;
    std::string task;
    std::vector<std::string> arguments;
    std::map<std::string, std::string> inputs;  // path -> hash (hex)
    std::vector<std::string> outputs;
    std::uint64_t seed = 0;
};

std::string manifest_json(const Manifest& manifest);

}  // namespace wallsens
