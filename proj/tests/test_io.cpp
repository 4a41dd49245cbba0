#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>

#include "wallsens/config.hpp"
#include "wallsens/csv_io.hpp"
#include "wallsens/solver.hpp"
#include "wallsens/weather.hpp"

using namespace wallsens;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("wallsens_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("csv parsing reports malformed rows with line numbers") {
    CHECK_THROWS_AS(parse_csv(""), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_csv("t,value\n0,1\n1,zzz\n"), doctest::Contains("line 3"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_csv("t,value\n0,1,9\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_csv("a,b\n1,2\n", {"t", "value"}), std::invalid_argument);
    CsvTable t = parse_csv("t,value\n0,1\n2,3\n");
    CHECK(t.rows.size() == 2);
    CHECK(t.column(1) == std::vector<double>{1.0, 3.0});
}

TEST_CASE("boundary series ingestion enforces monotone time and bounded gaps") {
    SampledSeries s = series_from_csv("t,value\n0,280\n3600,281\n7200,282\n");
    CHECK(s.signal()(1800.0) == doctest::Approx(280.5));
    CHECK_THROWS_WITH_AS(series_from_csv("t,value\n0,1\n0,2\n"), doctest::Contains("line 3"),
                         std::invalid_argument);
    // a dropped sample makes the gap twice the median step
    CHECK_THROWS_WITH_AS(series_from_csv("t,value\n0,1\n3600,2\n7200,2\n14400,3\n18000,3\n"),
                         doctest::Contains("gap"), std::invalid_argument);
    CHECK_THROWS_AS(series_from_csv("t,value\n0,1\n"), std::invalid_argument);
}

TEST_CASE("weather series round-trips through CSV and matches the generator") {
    WeatherSeries w = synthetic_year(99, 72);
    std::string csv = weather_to_csv(w);
    WeatherSeries back = weather_from_csv(csv);
    CHECK(back.time == w.time);
    CHECK(back.q_sw == w.q_sw);
    CHECK(back.T_out == w.T_out);
    CHECK(back.T_in == w.T_in);

    WeatherSeries full = synthetic_year(2203);
    CHECK(full.time.size() == 8760);
    CHECK(full.horizon() == doctest::Approx(3600.0 * 8759));
    // night hours carry no shortwave flux
    CHECK(full.q_sw[0] == 0.0);
    double q_max = 0.0;
    for (double q : full.q_sw) {
        CHECK(q >= 0.0);
        q_max = std::max(q_max, q);
    }
    CHECK(q_max > 300.0);
    CHECK(q_max < 1000.0);
    // generator is deterministic in the seed
    WeatherSeries again = synthetic_year(2203);
    CHECK(again.T_out == full.T_out);
}

TEST_CASE("wall config loads, builds and marches") {
    TempDir dir;
    std::string t_out = "t,value\n";
    std::string t_in = "t,value\n";
    for (int h = 0; h <= 48; ++h) {
        t_out += std::to_string(3600.0 * h) + "," + std::to_string(283.15 + 2.0 * (h % 24) / 24.0) + "\n";
        t_in += std::to_string(3600.0 * h) + ",293.15\n";
    }
    write_text_file(dir.file("t_out.csv"), t_out);
    write_text_file(dir.file("t_in.csv"), t_in);
    write_text_file(dir.file("wall.json"), R"({
      "format": "wallsens-wall", "version": 1,
      "layers": [
        {"name": "dressed stone", "conductivity": 1.75, "volumetric_capacity": 1.6e6, "thickness": 0.2},
        {"name": "rubble stone", "conductivity": 2.3, "volumetric_capacity": 2.8e6, "thickness": 0.28},
        {"name": "lime coater", "conductivity": 0.8, "volumetric_capacity": 2.2e6, "thickness": 0.02}
      ],
      "h_left": 15.0, "h_right": 8.0, "absorptivity": 0.6,
      "references": {"T_ref": 293.15, "t_ref": 3600.0},
      "initial": {"kind": "linear"},
      "boundary": {"T_out": "t_out.csv", "T_in": "t_in.csv"}
    })");

    WallConfig cfg = load_wall_config(dir.file("wall.json"));
    CHECK(cfg.refs.k_ref == doctest::Approx(1.75));
    CHECK(cfg.refs.length == doctest::Approx(0.5));
    LoadedProblem loaded = build_problem(cfg);
    CHECK(loaded.horizon_seconds == doctest::Approx(3600.0 * 48));
    CHECK(loaded.problem.biot_left() == doctest::Approx(15.0 * 0.5 / 1.75));

    Grid g(1e-2, 1e-2, 48.0);
    MarchResult res = solve(loaded.problem, g);
    for (double v : res.track(SlotId::Value).final_level) CHECK(std::isfinite(v));

    // config errors surface as rejected inputs
    write_text_file(dir.file("bad.json"), "{\"format\": \"other\"}");
    CHECK_THROWS_AS(load_wall_config(dir.file("bad.json")), std::invalid_argument);
    CHECK_THROWS_AS(load_wall_config(dir.file("missing.json")), std::invalid_argument);
}

TEST_CASE("manifest serialization is stable and content-hashed") {
    Manifest m;
    m.tool_version = "0.1.0";
    m.task = "sobol";
    m.arguments = {"--n-samples", "1024"};
    m.seed = 7;
    m.inputs["wall.json"] = fmt_hash(fnv1a64("payload"));
    m.outputs = {"summary.json"};
    std::string a = manifest_json(m);
    std::string b = manifest_json(m);
    CHECK(a == b);
    CHECK(a.find("\"seed\": 7") != std::string::npos);
    CHECK(fnv1a64("payload") != fnv1a64("payloae"));
}
