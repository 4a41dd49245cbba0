// End-to-end checks of the batch tool: spawns the real executable.

#include "doctest.h"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "wallsens/csv_io.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("wallsens_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string sub(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::string& args) {
    std::string cmd = std::string(WALLSENS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) { return wallsens::read_text_file(path); }

}  // namespace

TEST_CASE("simulate produces flux series, summary and manifest") {
    TempDir dir;
    int rc = run_cli("simulate --case validation --grid-dx 0.05 --grid-dt 0.005 --horizon 2 "
                     "--store-every 100 --out " + dir.sub("sim"));
    CHECK(rc == 0);
    CHECK(fs::exists(dir.sub("sim") + "/flux.csv"));
    CHECK(fs::exists(dir.sub("sim") + "/field.csv"));
    CHECK(fs::exists(dir.sub("sim") + "/summary.json"));
    CHECK(fs::exists(dir.sub("sim") + "/manifest.json"));
    auto table = wallsens::parse_csv(slurp(dir.sub("sim") + "/flux.csv"), {"t_star", "j_star"});
    CHECK(table.rows.size() == 401);
}

TEST_CASE("sens and fd-sens agree on the loads derivative") {
    TempDir dir;
    CHECK(run_cli("sens --case validation --grid-dx 0.02 --grid-dt 0.002 --horizon 2 "
                  "--params k2 --out " + dir.sub("a")) == 0);
    CHECK(run_cli("fd-sens --case validation --grid-dx 0.02 --grid-dt 0.002 --horizon 2 "
                  "--params k2 --scheme central --step 1e-4 --out " + dir.sub("b")) == 0);
    std::string sa = slurp(dir.sub("a") + "/summary.json");
    std::string sb = slurp(dir.sub("b") + "/summary.json");
    auto pick = [](const std::string& text, const std::string& key) {
        auto pos = text.find(key);
        REQUIRE(pos != std::string::npos);
        pos = text.find(':', pos);
        return std::stod(text.substr(pos + 1));
    };
    double cont = pick(sa, "\"dp\"");
    double disc = pick(sb, "\"k2\"");
    CHECK(cont == doctest::Approx(disc).epsilon(1e-4));
}

TEST_CASE("stochastic tasks are byte-reproducible for a fixed seed") {
    TempDir dir;
    std::string flags = "sobol --case validation --grid-dx 0.05 --grid-dt 0.005 --horizon 1 "
                        "--params k2,c2 --n-samples 32 --seed 7 --threads 4 --out ";
    CHECK(run_cli(flags + dir.sub("r1")) == 0);
    CHECK(run_cli(flags + dir.sub("r2")) == 0);
    CHECK(slurp(dir.sub("r1") + "/summary.json") == slurp(dir.sub("r2") + "/summary.json"));
    CHECK(slurp(dir.sub("r1") + "/manifest.json") == slurp(dir.sub("r2") + "/manifest.json"));
}

TEST_CASE("seeds are mandatory for stochastic tasks") {
    TempDir dir;
    CHECK(run_cli("sobol --case validation --n-samples 8 --out " + dir.sub("x")) != 0);
    CHECK(run_cli("rbd-fast --case validation --n-samples 50 --out " + dir.sub("y")) != 0);
}

TEST_CASE("config errors exit with the dedicated status") {
    TempDir dir;
    CHECK(run_cli("simulate --case no-such-case --out " + dir.sub("z")) == 2);
    CHECK(run_cli("simulate --config /nonexistent.json --out " + dir.sub("w")) == 2);
}

TEST_CASE("gen-weather emits an hourly year") {
    TempDir dir;
    CHECK(run_cli("gen-weather --seed 11 --out " + dir.sub("w")) == 0);
    auto table = wallsens::parse_csv(slurp(dir.sub("w") + "/weather.csv"),
                                     {"t", "q_sw", "T_out", "T_in"});
    CHECK(table.rows.size() == 8760);
}

TEST_CASE("metrics task emits the report files") {
    TempDir dir;
    CHECK(run_cli("metrics --case validation --grid-dx 0.05 --grid-dt 0.005 --horizon 1 "
                  "--params k2,c2 --domain-pct 50 --lattice-n 5 --out " + dir.sub("m")) == 0);
    CHECK(fs::exists(dir.sub("m") + "/metrics.json"));
    std::string csv = slurp(dir.sub("m") + "/metrics.csv");
    CHECK(csv.find("k2,gamma,") != std::string::npos);
    CHECK(csv.find("c2,eta,") != std::string::npos);
}

TEST_CASE("taylor task exports a reloadable surrogate") {
    TempDir dir;
    CHECK(run_cli("taylor --case validation --grid-dx 0.05 --grid-dt 0.005 --horizon 1 "
                  "--params k2,c2 --order 2 --eval 0.33,0.45 --out " + dir.sub("t")) == 0);
    std::string doc = slurp(dir.sub("t") + "/taylor.json");
    CHECK(doc.find("wallsens-taylor") != std::string::npos);
    std::string summary = slurp(dir.sub("t") + "/summary.json");
    CHECK(summary.find("predicted_loads") != std::string::npos);
    CHECK(summary.find("direct_loads") != std::string::npos);
}
