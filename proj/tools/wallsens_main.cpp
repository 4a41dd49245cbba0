// Batch front end: builds a study case, runs one analysis task, and writes
// the result files plus a reproducibility manifest into the output directory.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wallsens/baselines.hpp"
#include "wallsens/cases.hpp"
#include "wallsens/config.hpp"
#include "wallsens/csv_io.hpp"
#include "wallsens/fd_schemes.hpp"
#include "wallsens/metrics.hpp"
#include "wallsens/oracle.hpp"
#include "wallsens/parallel.hpp"
#include "wallsens/taylor.hpp"
#include "wallsens/validation.hpp"
#include "wallsens/version.hpp"
#include "wallsens/weather.hpp"
#include "wallsens/window.hpp"

namespace ws = wallsens;
using nlohmann::json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitOracle = 4;
constexpr int kExitValidation = 5;

struct CommonOpts {
    std::string case_name = "validation";
    std::string config_path;
    double grid_dx = 1e-2;
    double grid_dt = 1e-3;
    double horizon = -1.0;  // dimensionless; <0: case default
    std::string out_dir = "out";
    std::string params = "k2,c2";
    double domain_pct = 90.0;
    int lattice_n = 20;
    int n_samples = 1024;
    int replicates = 1;
    std::uint64_t seed = 0;
    int threads = 0;
    int store_every = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_seed) {
    cmd->add_option("--case", o.case_name, "built-in case: validation | bayonne-synthetic");
    cmd->add_option("--config", o.config_path, "wall config JSON (overrides --case)");
    cmd->add_option("--grid-dx", o.grid_dx, "space step dx*");
    cmd->add_option("--grid-dt", o.grid_dt, "time step dt*");
    cmd->add_option("--horizon", o.horizon, "horizon t*_max (default per case)");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--params", o.params, "comma-separated parameter names (k1, c2, tau, rho)");
    cmd->add_option("--domain-pct", o.domain_pct, "parameter domain half-width in percent");
    cmd->add_option("--lattice-n", o.lattice_n, "points per parameter lattice");
    cmd->add_option("--n-samples", o.n_samples, "sample count for sampling estimators");
    cmd->add_option("--replicates", o.replicates, "independent replicates to average");
    cmd->add_option("--threads", o.threads, "worker threads (0 = auto)");
    cmd->add_option("--store-every", o.store_every, "store every k-th time level of fields");
    auto* s = cmd->add_option("--seed", o.seed, "RNG seed");
    if (needs_seed) s->required();
}

struct CaseSetup {
    ws::DimensionlessProblem problem;
    ws::Grid grid;
    std::string description;
};

CaseSetup make_case(const CommonOpts& o) {
    if (!o.config_path.empty()) {
        ws::WallConfig cfg = ws::load_wall_config(o.config_path);
        ws::LoadedProblem loaded = ws::build_problem(cfg);
        double horizon =
            o.horizon > 0 ? o.horizon : loaded.horizon_seconds / cfg.refs.t_ref;
        return {loaded.problem, ws::Grid(o.grid_dx, o.grid_dt, horizon),
                "config:" + o.config_path};
    }
    if (o.case_name == "validation") {
        double horizon = o.horizon > 0 ? o.horizon : 30.0;
        return {ws::validation_case(), ws::Grid(o.grid_dx, o.grid_dt, horizon), "validation"};
    }
    if (o.case_name == "bayonne-synthetic") {
        ws::AnnualWallCase c = ws::annual_wall_case(o.seed == 0 ? 2203 : o.seed);
        double horizon = o.horizon > 0 ? o.horizon : c.grid.t_max;
        return {c.problem, ws::Grid(o.grid_dx, o.grid_dt > 1e-3 ? o.grid_dt : 1e-2, horizon),
                "bayonne-synthetic"};
    }
    throw std::invalid_argument("unknown case: " + o.case_name);
}

std::vector<ws::ParamId> parse_params(const std::string& text) {
    std::vector<ws::ParamId> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(ws::parse_param(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (out.empty()) throw std::invalid_argument("no parameters given");
    return out;
}

class Run {
  public:
    Run(const CommonOpts& o, const std::string& task) : opts_(o) {
        manifest_.tool_version = WALLSENS_VERSION;
        manifest_.task = task;
        manifest_.seed = o.seed;
        std::filesystem::create_directories(o.out_dir);
        if (!o.config_path.empty()) {
            manifest_.inputs[o.config_path] =
                ws::fmt_hash(ws::fnv1a64(ws::read_text_file(o.config_path)));
        }
    }

    void write(const std::string& name, const std::string& content) {
        ws::write_text_file(path(name), content);
        manifest_.outputs.push_back(name);
    }

    std::string path(const std::string& name) const {
        return (std::filesystem::path(opts_.out_dir) / name).string();
    }

    void finish(const json& summary) {
        json s = summary;
        s["task"] = manifest_.task;
        ws::write_text_file(path("summary.json"), s.dump(2));
        manifest_.outputs.push_back("summary.json");
        ws::write_text_file(path("manifest.json"), ws::manifest_json(manifest_));
    }

    ws::Manifest manifest_;

  private:
    CommonOpts opts_;
};

std::string series_csv(const std::vector<double>& t, const std::vector<double>& v,
                       const std::string& header) {
    std::string out = header + "\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        out += ws::format_double(t[i]) + "," + ws::format_double(v[i]) + "\n";
    return out;
}

std::string sens_series_csv(const ws::MarchResult& res) {
    std::string out = "t_star,value,param\n";
    for (const auto& tr : res.tracks) {
        if (tr.slot == ws::SlotId::Value) continue;
        std::string label = ws::slot_name(tr.slot);
        for (std::size_t n = 0; n < tr.flux.size(); ++n)
            out += ws::format_double(res.grid.t(static_cast<int>(n))) + "," +
                   ws::format_double(tr.flux[n]) + "," + label + "\n";
    }
    return out;
}

std::string field_csv(const ws::FieldStore& f, const ws::Grid& g, const std::string& value_name) {
    std::string out = "x_star,t_star," + value_name + "\n";
    for (int lv = 0; lv < f.n_levels(); ++lv)
        for (int j = 0; j < f.n_nodes; ++j)
            out += ws::format_double(g.x(j)) + "," + ws::format_double(f.times[lv]) + "," +
                   ws::format_double(f.at(lv, j)) + "\n";
    return out;
}

int task_simulate(const CommonOpts& o) {
    CaseSetup cs = make_case(o);
    Run run(o, "simulate");
    ws::MarchOptions mo;
    mo.store_every = o.store_every;
    ws::MarchResult res = ws::solve(cs.problem, cs.grid, mo);
    std::vector<double> times(cs.grid.n_steps + 1);
    for (int n = 0; n <= cs.grid.n_steps; ++n) times[n] = cs.grid.t(n);
    run.write("flux.csv", series_csv(times, res.track(ws::SlotId::Value).flux, "t_star,j_star"));
    if (o.store_every > 0)
        run.write("field.csv", field_csv(res.track(ws::SlotId::Value).field, cs.grid, "u"));
    json summary;
    summary["case"] = cs.description;
    summary["loads_total"] = res.loads(0.0, cs.grid.t_max);
    run.finish(summary);
    return 0;
}

int task_sens(const CommonOpts& o, int order) {
    CaseSetup cs = make_case(o);
    auto params = parse_params(o.params);
    ws::SensRequest req;
    req.p = params[0];
    if (params.size() > 1) req.q = params[1];
    req.order = order;
    Run run(o, order == 1 ? "sens" : "sens2");
    ws::MarchOptions mo;
    mo.store_every = o.store_every;
    ws::MarchResult res = ws::propagate(cs.problem, cs.grid, req, mo);
    run.write("sens_flux.csv", sens_series_csv(res));
    if (o.store_every > 0)
        for (const auto& tr : res.tracks)
            if (tr.slot != ws::SlotId::Value)
                run.write("sens_field_" + ws::slot_name(tr.slot) + ".csv",
                          field_csv(tr.field, cs.grid, "value"));
    json summary;
    summary["case"] = cs.description;
    for (const auto& tr : res.tracks) {
        if (tr.slot == ws::SlotId::Value) continue;
        summary["loads_derivative"][ws::slot_name(tr.slot)] =
            res.loads(0.0, cs.grid.t_max, tr.slot);
    }
    run.finish(summary);
    return 0;
}

int task_fd_sens(const CommonOpts& o, const std::string& scheme_name, double step) {
    CaseSetup cs = make_case(o);
    auto params = parse_params(o.params);
    Run run(o, "fd-sens");

    ws::FdKind kind;
    if (scheme_name == "forward") kind = ws::FdKind::Forward;
    else if (scheme_name == "backward") kind = ws::FdKind::Backward;
    else if (scheme_name == "central") kind = ws::FdKind::Central;
    else if (scheme_name == "three-point") kind = ws::FdKind::ThreePointBackward;
    else if (scheme_name == "second-forward") kind = ws::FdKind::SecondForward;
    else if (scheme_name == "second-central") kind = ws::FdKind::SecondCentral;
    else if (scheme_name == "mixed") kind = ws::FdKind::MixedCentral;
    else throw std::invalid_argument("unknown scheme: " + scheme_name);

    std::vector<double> base;
    for (const auto& p : params) base.push_back(cs.problem.param_value(p));
    ws::EvalCache cache([&](const std::vector<double>& v) {
        ws::DimensionlessProblem prob = cs.problem;
        for (std::size_t i = 0; i < params.size(); ++i) prob = prob.with_param(params[i], v[i]);
        return std::vector<double>{ws::solve(prob, cs.grid).loads(0.0, cs.grid.t_max)};
    });

    json summary;
    summary["case"] = cs.description;
    summary["scheme"] = scheme_name;
    summary["step"] = step;
    for (std::size_t i = 0; i < params.size(); ++i) {
        std::optional<int> second;
        if (kind == ws::FdKind::MixedCentral) {
            if (params.size() != 2)
                throw std::invalid_argument("mixed scheme needs exactly two parameters");
            if (i == 1) break;
            second = 1;
        }
        auto d = ws::fd_sensitivity(cache, base, static_cast<int>(i),
                                    ws::FdScheme{kind, step}, second);
        std::string label = kind == ws::FdKind::MixedCentral
                                ? params[0].name() + "," + params[1].name()
                                : params[i].name();
        summary["loads_derivative"][label] = d[0];
    }
    summary["evaluations"] = cache.evaluations();
    run.finish(summary);
    return 0;
}

int task_taylor(const CommonOpts& o, int order, const std::string& eval_at) {
    CaseSetup cs = make_case(o);
    auto params = parse_params(o.params);
    Run run(o, "taylor");
    ws::TaylorBuildOptions topt;
    topt.store_every = o.store_every;
    topt.load_intervals = {{0.0, cs.grid.t_max}};
    for (const auto& p : params) {
        double anchor = cs.problem.param_value(p);
        topt.trust.emplace_back(anchor * (1.0 - o.domain_pct / 100.0),
                                anchor * (1.0 + o.domain_pct / 100.0));
    }
    ws::TaylorModel model = ws::build_taylor(cs.problem, cs.grid, params, order, topt);
    run.write("taylor.json", ws::taylor_to_json(model));

    json summary;
    summary["case"] = cs.description;
    summary["anchors"] = model.anchors;
    if (!eval_at.empty()) {
        std::vector<double> values;
        std::string cur;
        for (char ch : eval_at + ",") {
            if (ch == ',') {
                if (!cur.empty()) values.push_back(std::stod(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        ws::TaylorEvalInfo info;
        double predicted = ws::taylor_load(model, 0, values, &info);
        ws::DimensionlessProblem direct_prob = cs.problem;
        for (std::size_t i = 0; i < params.size(); ++i)
            direct_prob = direct_prob.with_param(params[i], values[i]);
        double direct = ws::solve(direct_prob, cs.grid).loads(0.0, cs.grid.t_max);
        summary["evaluate"] = {{"values", values},
                               {"predicted_loads", predicted},
                               {"direct_loads", direct},
                               {"extrapolated", info.extrapolated}};
    }
    run.finish(summary);
    return 0;
}

int task_metrics(const CommonOpts& o, bool crossed) {
    CaseSetup cs = make_case(o);
    auto params = parse_params(o.params);
    Run run(o, "metrics");
    const double t1 = cs.grid.t_max;
    const int threads = o.threads > 0 ? o.threads : ws::default_threads();

    ws::MetricReport report;
    report.params = params;

    // eta from joint marches, two parameters at a time
    std::vector<double> squared;
    for (std::size_t i = 0; i < params.size(); i += 2) {
        ws::SensRequest req;
        req.p = params[i];
        req.order = 1;
        if (i + 1 < params.size()) req.q = params[i + 1];
        ws::MarchResult res = ws::propagate(cs.problem, cs.grid, req);
        double dp = res.loads(0.0, t1, ws::SlotId::DP);
        squared.push_back(dp * dp);
        if (req.q) {
            double dq = res.loads(0.0, t1, ws::SlotId::DQ);
            squared.push_back(dq * dq);
        }
        report.evaluations_local += 1;
    }
    report.eta = ws::local_metric(squared);

    std::vector<std::pair<double, double>> domains;
    std::vector<int> lattice(params.size(), o.lattice_n);
    for (const auto& p : params) {
        double anchor = cs.problem.param_value(p);
        domains.emplace_back(anchor * (1.0 - o.domain_pct / 100.0),
                             anchor * (1.0 + o.domain_pct / 100.0));
    }
    auto sq = [&](int index, double value) {
        ws::DimensionlessProblem prob = cs.problem.with_param(params[index], value);
        double d = ws::loads_derivative(prob, cs.grid, params[index], 0.0, t1);
        return d * d;
    };
    ws::GlobalMetricResult g = ws::global_metric(sq, domains, lattice, threads);
    report.nu = g.nu;
    report.gamma = g.gamma;
    report.nu_over_pi2 = g.nu_over_pi2;
    report.nu_over_12 = g.nu_over_12;
    report.evaluations_global = g.evaluations;

    if (crossed) {
        if (params.size() != 2)
            throw std::invalid_argument("crossed measure needs exactly two parameters");
        report.crossed_value = ws::crossed_measure(
            [&](double pv, double qv) {
                ws::DimensionlessProblem prob =
                    cs.problem.with_param(params[0], pv).with_param(params[1], qv);
                return ws::loads_mixed_derivative(prob, cs.grid, params[0], params[1], 0.0, t1);
            },
            domains[0], domains[1], o.lattice_n, o.lattice_n, threads);
        report.has_crossed = true;
        report.crossed_pair = params[0].name() + "," + params[1].name();
        report.evaluations_crossed = static_cast<long>(o.lattice_n) * o.lattice_n;
    }

    report.ranking = ws::rank_parameters(params, report.gamma);
    run.write("metrics.json", ws::metric_report_json(report));
    run.write("metrics.csv", ws::metric_report_csv(report));
    json summary;
    summary["case"] = cs.description;
    summary["evaluations"] = {{"local", report.evaluations_local},
                              {"global", report.evaluations_global},
                              {"crossed", report.evaluations_crossed}};
    run.finish(summary);
    return 0;
}

// shared by src / sobol / rbd-fast
int task_sampling(const CommonOpts& o, const std::string& which) {
    CaseSetup cs = make_case(o);
    auto params = parse_params(o.params);
    Run run(o, which);
    const double t1 = cs.grid.t_max;
    const int threads = o.threads > 0 ? o.threads : ws::default_threads();

    std::vector<std::pair<double, double>> domains;
    for (const auto& p : params) {
        double anchor = cs.problem.param_value(p);
        domains.emplace_back(anchor * (1.0 - o.domain_pct / 100.0),
                             anchor * (1.0 + o.domain_pct / 100.0));
    }
    ws::ScalarModel model = [&](const std::vector<double>& v) {
        ws::DimensionlessProblem prob = cs.problem;
        for (std::size_t i = 0; i < params.size(); ++i) prob = prob.with_param(params[i], v[i]);
        return ws::solve(prob, cs.grid).loads(0.0, t1);
    };

    json summary;
    summary["case"] = cs.description;
    summary["n_samples"] = o.n_samples;
    summary["replicates"] = o.replicates;

    auto average = [](std::vector<std::vector<double>>& rows) {
        std::vector<double> m(rows.front().size(), 0.0);
        for (auto& r : rows)
            for (std::size_t i = 0; i < r.size(); ++i) m[i] += r[i] / rows.size();
        return m;
    };

    if (which == "src") {
        std::vector<std::vector<double>> nsrc, nsrrc;
        for (int r = 0; r < o.replicates; ++r) {
            ws::SampleDesign design;
            design.kind = ws::SampleDesign::Kind::LatinHypercube;
            design.n_samples = o.n_samples;
            design.domains = domains;
            design.seed = o.seed + 13 * static_cast<std::uint64_t>(r);
            auto X = ws::generate_design(design);
            std::vector<double> y(X.size());
            ws::parallel_for(
                static_cast<int>(X.size()), [&](int i) { y[i] = model(X[i]); }, threads);
            if (r == 0) {
                std::string csv = "sample";
                for (const auto& p : params) csv += "," + p.name();
                csv += ",y\n";
                for (std::size_t i = 0; i < X.size(); ++i) {
                    csv += std::to_string(i);
                    for (double v : X[i]) csv += "," + ws::format_double(v);
                    csv += "," + ws::format_double(y[i]) + "\n";
                }
                run.write("design_evaluations.csv", csv);
            }
            ws::SrcResult res = ws::src_srrc(X, y);
            nsrc.push_back(res.normalized_src);
            nsrrc.push_back(res.normalized_srrc);
            if (r == 0) {
                summary["raw_src"] = res.src;
                summary["raw_srrc"] = res.srrc;
                summary["r2_src"] = res.r2_src;
            }
        }
        summary["normalized_src"] = average(nsrc);
        summary["normalized_srrc"] = average(nsrrc);
        summary["evaluations_per_replicate"] = o.n_samples;
    } else if (which == "sobol") {
        std::vector<std::vector<double>> s1, st, dtot, s1c, stc;
        long evals = 0;
        for (int r = 0; r < o.replicates; ++r) {
            ws::SobolOptions so;
            so.design = ws::SampleDesign::Kind::SobolSequence;
            so.n_samples = o.n_samples;
            so.seed = o.seed + 13 * static_cast<std::uint64_t>(r);
            so.threads = threads;
            ws::VarianceReport rep = ws::sobol_indices(model, domains, so);
            s1.push_back(rep.s1);
            st.push_back(rep.s_total);
            dtot.push_back(rep.d_total);
            s1c.push_back(rep.s1_clamped);
            stc.push_back(rep.s_total_clamped);
            evals = rep.evaluations;
            if (r == 0) {
                summary["estimators"] = {{"s1", rep.estimator_s1}, {"s_total", rep.estimator_st}};
                summary["variance"] = rep.variance;
            }
        }
        summary["s1"] = average(s1);
        summary["s_total"] = average(st);
        summary["s1_clamped"] = average(s1c);
        summary["s_total_clamped"] = average(stc);
        summary["d_total"] = average(dtot);
        summary["evaluations_per_replicate"] = evals;
    } else {  // rbd-fast
        std::vector<std::vector<double>> s1;
        for (int r = 0; r < o.replicates; ++r) {
            ws::RbdOptions ro;
            ro.n_samples = o.n_samples;
            ro.seed = o.seed + 13 * static_cast<std::uint64_t>(r);
            ro.threads = threads;
            ws::RbdReport rep = ws::rbd_fast(model, domains, ro);
            s1.push_back(rep.s1);
            if (r == 0) summary["harmonics"] = rep.harmonics;
        }
        summary["s1"] = average(s1);
        summary["evaluations_per_replicate"] = o.n_samples;
    }
    run.finish(summary);
    return 0;
}

int task_validate(const CommonOpts& o) {
    ws::BatteryOptions bo;
    bo.threads = o.threads;
    if (o.seed != 0) bo.seed = o.seed;
    bo.replicates = o.replicates > 1 ? o.replicates : 5;
    bo.artifacts_dir = o.out_dir;
    ws::ValidationBattery battery(bo);
    auto results = battery.run_all();
    std::string table = ws::format_results(results);
    std::cout << table;
    Run run(o, "validate");
    run.write("validate_report.txt", table);
    json summary;
    bool all = true;
    for (const auto& r : results) {
        summary["checks"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        all = all && r.pass;
    }
    summary["pass"] = all;
    run.finish(summary);
    return all ? 0 : kExitValidation;
}

int task_envelope(const CommonOpts& o) {
    Run run(o, "envelope");
    const int threads = o.threads > 0 ? o.threads : ws::default_threads();
    ws::EnvelopeCase env = ws::envelope_case(o.seed == 0 ? 2203 : o.seed);
    const auto wall_refs = env.wall.problem.refs();
    auto months = ws::month_intervals_seconds(env.wall.horizon_seconds);

    // month intervals in dimensionless time for both components
    std::vector<std::pair<double, double>> wall_iv, glass_iv;
    for (auto [a, b] : months) {
        wall_iv.emplace_back(a / wall_refs.t_ref, b / wall_refs.t_ref);
        glass_iv.emplace_back(a / wall_refs.t_ref, b / wall_refs.t_ref);
    }
    const double e_ref_wall =
        wall_refs.T_ref * wall_refs.k_ref * wall_refs.t_ref / wall_refs.length;
    const auto glass_refs = env.glass_prob.refs();
    const double e_ref_glass =
        glass_refs.T_ref * glass_refs.k_ref * glass_refs.t_ref / glass_refs.length;

    // order-2 surrogates of the monthly loads for both components
    ws::TaylorBuildOptions wopt, gopt;
    wopt.load_intervals = wall_iv;
    gopt.load_intervals = glass_iv;
    std::vector<ws::ParamId> wall_params = {ws::ParamId::conductivity(1),
                                            ws::ParamId::conductivity(2)};
    std::vector<ws::ParamId> glass_params = {ws::ParamId::glass_transmissivity(),
                                             ws::ParamId::glass_reflectivity()};
    ws::TaylorModel wall_model = ws::build_taylor(env.wall.problem, env.wall.grid, wall_params, 2, wopt);
    ws::TaylorModel glass_model =
        ws::build_taylor(env.glass_prob, env.glass_grid, glass_params, 2, gopt);

    auto monthly_total = [&](double k1f, double k2f, double tauf, double rhof) {
        std::vector<double> total(months.size());
        std::vector<double> wv = {wall_model.anchors[0] * k1f, wall_model.anchors[1] * k2f};
        std::vector<double> gv = {glass_model.anchors[0] * tauf, glass_model.anchors[1] * rhof};
        for (std::size_t m = 0; m < months.size(); ++m)
            total[m] = e_ref_wall * ws::taylor_load(wall_model, static_cast<int>(m), wv) +
                       e_ref_glass * ws::taylor_load(glass_model, static_cast<int>(m), gv);
        return total;
    };

    std::vector<double> base = monthly_total(1, 1, 1, 1);
    std::string csv = "month,E_wall,E_glass,E_hat\n";
    for (std::size_t m = 0; m < months.size(); ++m) {
        double ew = e_ref_wall * wall_model.base.loads[m];
        double eg = e_ref_glass * glass_model.base.loads[m];
        csv += std::to_string(m + 1) + "," + ws::format_double(ew) + "," + ws::format_double(eg) +
               "," + ws::format_double(ew + eg) + "\n";
    }
    run.write("envelope_monthly.csv", csv);

    const char* labels[4] = {"k1", "k2", "tau", "rho"};
    json epsr;
    for (int pi = 0; pi < 4; ++pi) {
        for (double sgn : {+0.5, -0.5}) {
            double f[4] = {1, 1, 1, 1};
            f[pi] += sgn;
            auto shifted = monthly_total(f[0], f[1], f[2], f[3]);
            ws::RelativeDifference rd = ws::relative_difference(base, shifted);
            std::string key = std::string(labels[pi]) + (sgn > 0 ? "_plus50" : "_minus50");
            for (std::size_t m = 0; m < months.size(); ++m)
                epsr[key].push_back(rd.defined[m] ? rd.value[m] : -1.0);
        }
    }
    run.write("epsr_monthly.json", epsr.dump(2));

    // global gamma ordering across the four parameters
    std::vector<std::pair<double, double>> domains = {
        {0.5 * wall_model.anchors[0], 1.5 * wall_model.anchors[0]},
        {0.5 * wall_model.anchors[1], 1.5 * wall_model.anchors[1]},
        {0.5 * glass_model.anchors[0], 1.5 * glass_model.anchors[0]},
        {0.5 * glass_model.anchors[1], 1.5 * glass_model.anchors[1]}};
    auto sq = [&](int index, double value) {
        if (index < 2) {
            ws::ParamId p = wall_params[index];
            ws::DimensionlessProblem prob = env.wall.problem.with_param(p, value);
            double d = e_ref_wall *
                       ws::loads_derivative(prob, env.wall.grid, p, 0.0, env.wall.grid.t_max);
            return d * d;
        }
        ws::ParamId p = glass_params[index - 2];
        ws::DimensionlessProblem prob = env.glass_prob.with_param(p, value);
        double d = e_ref_glass *
                   ws::loads_derivative(prob, env.glass_grid, p, 0.0, env.glass_grid.t_max);
        return d * d;
    };
    ws::GlobalMetricResult g = ws::global_metric(
        sq, domains, std::vector<int>(4, o.lattice_n > 5 ? 5 : o.lattice_n), threads);

    ws::MetricReport report;
    report.params = {wall_params[0], wall_params[1], glass_params[0], glass_params[1]};
    report.nu = g.nu;
    report.gamma = g.gamma;
    report.nu_over_pi2 = g.nu_over_pi2;
    report.nu_over_12 = g.nu_over_12;
    report.evaluations_global = g.evaluations;
    report.ranking = ws::rank_parameters(report.params, report.gamma);
    run.write("envelope_metrics.json", ws::metric_report_json(report));
    run.write("envelope_metrics.csv", ws::metric_report_csv(report));

    json summary;
    summary["absorbed_fraction"] = ws::absorbed_fraction(env.glass.reflectivity,
                                                         env.glass.transmissivity);
    summary["gamma"] = g.gamma;
    run.finish(summary);
    return 0;
}

int task_gen_weather(const CommonOpts& o) {
    Run run(o, "gen-weather");
    ws::WeatherSeries w = ws::synthetic_year(o.seed);
    run.write("weather.csv", ws::weather_to_csv(w));
    json summary;
    summary["hours"] = w.time.size();
    run.finish(summary);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transient multilayer wall conduction with derivative-based "
                 "sensitivity analysis"};
    app.require_subcommand(1);

    CommonOpts o;
    int order = 1;
    std::string scheme = "central";
    double step = 1e-3;
    std::string eval_at;
    bool crossed = false;

    auto* sim = app.add_subcommand("simulate", "march the temperature field");
    add_common(sim, o, false);

    auto* sens = app.add_subcommand("sens", "first-order sensitivity propagation");
    add_common(sens, o, false);
    sens->add_option("--order", order, "sensitivity order (1 or 2)");

    auto* fd = app.add_subcommand("fd-sens", "finite-difference sensitivity baseline");
    add_common(fd, o, false);
    fd->add_option("--scheme", scheme,
                   "forward | backward | central | three-point | second-forward | "
                   "second-central | mixed");
    fd->add_option("--step", step, "parameter step");

    auto* taylor = app.add_subcommand("taylor", "build a Taylor surrogate of the outputs");
    add_common(taylor, o, false);
    taylor->add_option("--order", order, "expansion order (1 or 2)");
    taylor->add_option("--eval", eval_at, "evaluate at comma-separated parameter values");

    auto* metrics = app.add_subcommand("metrics", "derivative-based importance metrics");
    add_common(metrics, o, false);
    metrics->add_flag("--crossed", crossed, "also compute the crossed measure");

    auto* src = app.add_subcommand("src", "standardized (rank) regression baseline");
    add_common(src, o, true);
    auto* sobol = app.add_subcommand("sobol", "Sobol variance decomposition baseline");
    add_common(sobol, o, true);
    auto* rbd = app.add_subcommand("rbd-fast", "RBD-FAST spectral baseline");
    add_common(rbd, o, true);

    auto* validate = app.add_subcommand("validate", "run the benchmark validation battery");
    add_common(validate, o, false);

    auto* envelope = app.add_subcommand("envelope", "wall + single-glazed window study");
    add_common(envelope, o, false);

    auto* genw = app.add_subcommand("gen-weather", "emit a synthetic annual weather series");
    add_common(genw, o, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return task_simulate(o);
        if (sens->parsed()) return task_sens(o, order);
        if (fd->parsed()) return task_fd_sens(o, scheme, step);
        if (taylor->parsed()) return task_taylor(o, order, eval_at);
        if (metrics->parsed()) return task_metrics(o, crossed);
        if (src->parsed()) return task_sampling(o, "src");
        if (sobol->parsed()) return task_sampling(o, "sobol");
        if (rbd->parsed()) return task_sampling(o, "rbd-fast");
        if (validate->parsed()) return task_validate(o);
        if (envelope->parsed()) return task_envelope(o);
        if (genw->parsed()) return task_gen_weather(o);
    } catch (const ws::DivergenceError& e) {
        std::cerr << "divergence: " << e.what() << "\n";
        return kExitDivergence;
    } catch (const ws::OracleFailure& e) {
        std::cerr << "oracle failure: " << e.what() << "\n";
        return kExitOracle;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
