#include "wallsens/config.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "json.hpp"

#include "wallsens/version.hpp"

namespace wallsens {

namespace {

using nlohmann::json;

std::string sibling_path(const std::string& config_path, const std::string& rel) {
    if (rel.empty()) return rel;
    std::filesystem::path p(rel);
    if (p.is_absolute()) return rel;
    return (std::filesystem::path(config_path).parent_path() / p).string();
}

}  // namespace

WallConfig load_wall_config(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("cannot parse wall config " + path + ": " + e.what());
    }
    if (j.value("format", "") != "wallsens-wall" || j.value("version", 0) != 1)
        throw std::invalid_argument(path + " is not a wallsens-wall v1 document");

    WallConfig cfg;
    for (const auto& lj : j.at("layers")) {
        Layer layer;
        layer.name = lj.value("name", "");
        layer.conductivity = lj.at("conductivity").get<double>();
        layer.volumetric_capacity = lj.at("volumetric_capacity").get<double>();
        layer.thickness = lj.at("thickness").get<double>();
        cfg.wall.layers.push_back(layer);
    }
    cfg.wall.h_left = j.at("h_left").get<double>();
    cfg.wall.h_right = j.at("h_right").get<double>();
    cfg.wall.absorptivity = j.value("absorptivity", 1.0);
    cfg.wall.validate();

    const auto& rj = j.at("references");
    cfg.refs.k_ref = rj.value("k_ref", cfg.wall.layers.front().conductivity);
    cfg.refs.c_ref = rj.value("c_ref", cfg.wall.layers.front().volumetric_capacity);
    cfg.refs.T_ref = rj.at("T_ref").get<double>();
    cfg.refs.t_ref = rj.at("t_ref").get<double>();
    cfg.refs.length = cfg.wall.total_thickness();
    cfg.refs.validate();

    if (j.contains("initial")) {
        const auto& ij = j.at("initial");
        std::string kind = ij.value("kind", "linear");
        if (kind == "constant") {
            cfg.initial_kind = WallConfig::InitialKind::Constant;
            cfg.initial_value = ij.at("value").get<double>();
        } else if (kind == "linear") {
            cfg.initial_kind = WallConfig::InitialKind::Linear;
        } else {
            throw std::invalid_argument("unknown initial profile kind: " + kind);
        }
    }

    const auto& bj = j.at("boundary");
    cfg.t_out_path = sibling_path(path, bj.at("T_out").get<std::string>());
    cfg.t_in_path = sibling_path(path, bj.at("T_in").get<std::string>());
    cfg.q_sw_path = sibling_path(path, bj.value("q_sw", ""));
    return cfg;
}

SampledSeries ingest_series(const std::string& path) {
    return series_from_csv(read_text_file(path));
}

LoadedProblem build_problem(const WallConfig& cfg) {
    SampledSeries t_out = ingest_series(cfg.t_out_path);
    SampledSeries t_in = ingest_series(cfg.t_in_path);
    double horizon = std::min(t_out.time.back(), t_in.time.back());

    DimensionalBoundary bc;
    bc.T_left_air = t_out.signal();
    bc.T_right_air = t_in.signal();
    if (!cfg.q_sw_path.empty()) {
        SampledSeries q = ingest_series(cfg.q_sw_path);
        horizon = std::min(horizon, q.time.back());
        bc.q_left_rad = q.signal();
    } else {
        bc.q_left_rad = Signal::constant(0.0);
    }

    InitialProfile initial =
        cfg.initial_kind == WallConfig::InitialKind::Constant
            ? InitialProfile::constant(cfg.initial_value)
            : InitialProfile::linear(t_out.value.front() / cfg.refs.T_ref,
                                     t_in.value.front() / cfg.refs.T_ref);

    return LoadedProblem{nondimensionalize(cfg.wall, cfg.refs, bc, initial, horizon), horizon};
}

std::uint64_t fnv1a64(const std::string& content) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char ch : content) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string fmt_hash(std::uint64_t hash) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string manifest_json(const Manifest& m) {
    json j;
    j["format"] = "wallsens-manifest";
    j["version"] = 1;
    j["tool_version"] = m.tool_version;
    j["task"] = m.task;
    j["arguments"] = m.arguments;
    j["seed"] = m.seed;
    json inputs = json::object();
    for (const auto& [path, hash] : m.inputs) inputs[path] = hash;
    j["inputs"] = inputs;
    j["outputs"] = m.outputs;
    return j.dump(2);
}

}  // namespace wallsens
