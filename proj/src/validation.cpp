#include "wallsens/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>

#include "wallsens/csv_io.hpp"
#include "wallsens/fd_schemes.hpp"
#include "wallsens/parallel.hpp"

namespace wallsens {

namespace {

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

// Log-log slope of err(h) by least squares.
double fit_slope(const std::vector<double>& h, const std::vector<double>& err) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(h.size());
    for (int i = 0; i < n; ++i) {
        double x = std::log(h[i]), y = std::log(err[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

struct ValidationBattery::Shared {
    DimensionlessProblem problem = validation_case();
    Grid grid30{1e-2, 1e-3, 30.0};
    Grid grid5{1e-2, 1e-3, 5.0};
    ParamId k1 = ParamId::conductivity(1);
    ParamId k2 = ParamId::conductivity(2);
    ParamId c2 = ParamId::capacity(2);

    std::optional<MarchResult> df30;           // u stored fully on [0, 30]
    std::optional<ReferenceField> oracle_u;
    std::optional<ReferenceField> ref_xk1, ref_xk1k1;
    std::optional<MarchResult> prop30;         // u, X_k1, X_k1k1 stored fully
    std::optional<GlobalMetricResult> g20, g5;
    std::optional<std::vector<double>> eta;
    struct Baselines {
        std::vector<double> src, sobol_s1, sobol_st, sobol_dtot, rbd;
        long sobol_evals = 0;
    };
    std::optional<Baselines> baselines;

    std::pair<double, double> domain_k2, domain_c2;

    Shared() {
        double k2v = 0.3, c2v = 0.5;
        domain_k2 = {0.1 * k2v, 1.9 * k2v};
        domain_c2 = {0.1 * c2v, 1.9 * c2v};
    }

    const MarchResult& get_df30() {
        if (!df30) {
            MarchOptions mo;
            mo.store_every = 1;
            df30 = solve(problem, grid30, mo);
        }
        return *df30;
    }
    const ReferenceField& get_oracle_u() {
        if (!oracle_u) oracle_u = reference_solve(problem, grid30, OracleConfig{});
        return *oracle_u;
    }
    const ReferenceField& get_ref_xk1() {
        if (!ref_xk1) {
            OracleConfig cfg;
            cfg.check_self_convergence = false;  // guarded once by the u oracle
            get_oracle_u();
            ref_xk1 = reference_sensitivity(problem, grid30, k1, std::nullopt, 1, cfg);
        }
        return *ref_xk1;
    }
    const ReferenceField& get_ref_xk1k1() {
        if (!ref_xk1k1) {
            OracleConfig cfg;
            cfg.check_self_convergence = false;
            get_oracle_u();
            ref_xk1k1 = reference_sensitivity(problem, grid30, k1, std::nullopt, 2, cfg);
        }
        return *ref_xk1k1;
    }
    const MarchResult& get_prop30() {
        if (!prop30) {
            SensRequest req;
            req.p = k1;
            req.order = 2;
            MarchOptions mo;
            mo.store_every = 1;
            prop30 = propagate(problem, grid30, req, mo);
        }
        return *prop30;
    }

    double loads_model(double k2v, double c2v) {
        DimensionlessProblem p = problem.with_param(k2, k2v).with_param(c2, c2v);
        return solve(p, grid5).loads(0.0, 5.0);
    }
    double squared_loads_derivative(int index, double value) {
        ParamId target = index == 0 ? k2 : c2;
        DimensionlessProblem p = problem.with_param(target, value);
        double d = loads_derivative(p, grid5, target, 0.0, 5.0);
        return d * d;
    }
};

ValidationBattery::ValidationBattery(BatteryOptions options) : opt_(options) {
    if (opt_.threads <= 0) opt_.threads = default_threads();
    if (opt_.replicates < 1) opt_.replicates = 1;
    shared_ = std::make_shared<Shared>();
}

ValidationBattery::Shared& ValidationBattery::shared() { return *shared_; }

void ValidationBattery::emit(const std::string& name, const std::string& content) {
    if (opt_.artifacts_dir.empty()) return;
    std::filesystem::create_directories(opt_.artifacts_dir);
    write_text_file((std::filesystem::path(opt_.artifacts_dir) / name).string(), content);
}

CheckResult ValidationBattery::solver_accuracy() {
    Shared& s = shared();
    auto prof = eps2_profile(s.get_df30().track(SlotId::Value).field, s.get_oracle_u());
    numbers_.eps2_u_max = max_of(prof);

    std::string csv = "x_star,eps2\n";
    for (int j = 0; j < s.grid30.n_nodes; ++j)
        csv += format_double(s.grid30.x(j)) + "," + format_double(prof[j]) + "\n";
    emit("fig_eps2_u_vs_x.csv", csv);

    bool pass = numbers_.eps2_u_max <= 5e-3;
    return {"solver accuracy eps2(u) <= 5e-3", pass,
            fmt("max eps2 = %.3e (dx*=1e-2, dt*=1e-3, t* in [0,30])", numbers_.eps2_u_max)};
}

CheckResult ValidationBattery::sensitivity_fidelity() {
    Shared& s = shared();
    auto prof1 = eps2_profile(s.get_prop30().track(SlotId::DP).field, s.get_ref_xk1());
    auto prof2 = eps2_profile(s.get_prop30().track(SlotId::DPP).field, s.get_ref_xk1k1());
    numbers_.eps2_xk1_max = max_of(prof1);
    numbers_.eps2_xk1k1_max = max_of(prof2);

    std::string csv = "x_star,eps2_Xk1,eps2_Xk1k1\n";
    for (int j = 0; j < s.grid30.n_nodes; ++j)
        csv += format_double(s.grid30.x(j)) + "," + format_double(prof1[j]) + "," +
               format_double(prof2[j]) + "\n";
    emit("fig_eps2_sensitivities_vs_x.csv", csv);

    bool pass = numbers_.eps2_xk1_max <= 1e-2 && numbers_.eps2_xk1k1_max <= 1e-1;
    return {"sensitivity fidelity eps2(X_k1) <= 1e-2, eps2(X_k1k1) <= 1e-1", pass,
            fmt("max eps2(X_k1) = %.3e, max eps2(X_k1k1) = %.3e", numbers_.eps2_xk1_max,
                numbers_.eps2_xk1k1_max)};
}

CheckResult ValidationBattery::discrete_vs_continuous() {
    Shared& s = shared();
    const double continuous = (numbers_.eps2_xk1_max > 0.0)
                                  ? numbers_.eps2_xk1_max
                                  : max_of(eps2_profile(s.get_prop30().track(SlotId::DP).field,
                                                        s.get_ref_xk1()));
    numbers_.eps2_xk1_max = continuous;

    // discrete approximations over the parameter axis, full field as output
    EvalCache cache([&](const std::vector<double>& params) {
        MarchOptions mo;
        mo.store_every = 1;
        return solve(s.problem.with_param(s.k1, params[0]), s.grid30, mo)
            .track(SlotId::Value)
            .field.values;
    });
    const double k1v = s.problem.param_value(s.k1);
    auto eps_for = [&](const std::vector<double>& field) {
        FieldStore store;
        store.n_nodes = s.grid30.n_nodes;
        store.times = s.get_df30().track(SlotId::Value).field.times;
        store.values = field;
        return max_of(eps2_profile(store, s.get_ref_xk1()));
    };
    numbers_.eps2_central_max =
        eps_for(fd_sensitivity(cache, {k1v}, 0, FdScheme{FdKind::Central, 1e-3}));
    numbers_.eps2_forward_max =
        eps_for(fd_sensitivity(cache, {k1v}, 0, FdScheme{FdKind::Forward, 1e-2}));

    bool pass = numbers_.eps2_central_max <= 10.0 * continuous &&
                numbers_.eps2_central_max >= 0.1 * continuous &&
                numbers_.eps2_forward_max > numbers_.eps2_central_max &&
                numbers_.eps2_forward_max > continuous;
    return {"discrete vs continuous orderings (central 1e-3 vs forward 1e-2)", pass,
            fmt("max eps2: continuous %.3e, central(1e-3) %.3e, forward(1e-2) %.3e", continuous,
                numbers_.eps2_central_max, numbers_.eps2_forward_max)};
}

CheckResult ValidationBattery::taylor_trust_region() {
    Shared& s = shared();
    const int store_every = 25;
    const double k2a = s.problem.param_value(s.k2);
    const double c2a = s.problem.param_value(s.c2);

    TaylorBuildOptions topt;
    topt.store_every = store_every;
    topt.trust = {{0.2 * k2a, 1.9 * k2a}, {0.35 * c2a, 1.9 * c2a}};
    TaylorModel model = build_taylor(s.problem, s.grid30, {s.k2, s.c2}, 2, topt);

    const int n_lattice = 21;
    std::vector<double> factors(n_lattice);
    for (int i = 0; i < n_lattice; ++i) factors[i] = 0.1 + 0.09 * i;

    std::vector<double> err(n_lattice * n_lattice, 0.0);
    parallel_for(
        n_lattice * n_lattice,
        [&](int idx) {
            int i = idx / n_lattice, j = idx % n_lattice;
            double k2v = factors[i] * k2a, c2v = factors[j] * c2a;
            MarchOptions mo;
            mo.store_every = store_every;
            FieldStore direct =
                solve(s.problem.with_param(s.k2, k2v).with_param(s.c2, c2v), s.grid30, mo)
                    .track(SlotId::Value)
                    .field;
            err[idx] = surrogate_error_field(model, {k2v, c2v}, direct);
        },
        opt_.threads);

    std::string csv = "k2_factor,c2_factor,eps_tay\n";
    for (int i = 0; i < n_lattice; ++i)
        for (int j = 0; j < n_lattice; ++j)
            csv += format_double(factors[i]) + "," + format_double(factors[j]) + "," +
                   format_double(err[i * n_lattice + j]) + "\n";
    emit("fig_eps_tay_u_lattice.csv", csv);

    // region check: k factor >= 0.2, c factor >= 0.35
    double worst_inside = 0.0;
    for (int i = 0; i < n_lattice; ++i)
        for (int j = 0; j < n_lattice; ++j)
            if (factors[i] >= 0.2 - 1e-9 && factors[j] >= 0.35 - 1e-9)
                worst_inside = std::max(worst_inside, err[i * n_lattice + j]);

    // remainder slopes along each axis (moderate right-side displacements,
    // where the cubic term dominates and the error is well above round-off)
    auto axis_slope = [&](bool k_axis) {
        std::vector<double> hs, es;
        for (int i = 12; i <= 16; ++i) {
            double f = factors[i];
            int idx = k_axis ? i * n_lattice + 10 : 10 * n_lattice + i;
            hs.push_back(std::abs(f - 1.0) * (k_axis ? k2a : c2a));
            es.push_back(err[idx]);
        }
        return fit_slope(hs, es);
    };
    double slope_k = axis_slope(true);
    double slope_c = axis_slope(false);

    bool pass = worst_inside <= 1e-2 && std::abs(slope_k - 3.0) <= 0.3 &&
                std::abs(slope_c - 3.0) <= 0.3;
    return {"taylor trust region (eps_tay <= 1e-2 inside, cubic remainder)", pass,
            fmt("worst eps_tay inside = %.3e, slopes k: %.2f, c: %.2f", worst_inside, slope_k,
                slope_c)};
}

CheckResult ValidationBattery::derivative_metrics() {
    Shared& s = shared();
    SensRequest req;
    req.p = s.k2;
    req.q = s.c2;
    req.order = 1;
    MarchResult prop = propagate(s.problem, s.grid5, req);
    double d_k = prop.loads(0.0, 5.0, SlotId::DP);
    double d_c = prop.loads(0.0, 5.0, SlotId::DQ);
    numbers_.eta = local_metric({d_k * d_k, d_c * d_c});
    shared().eta = numbers_.eta;

    auto sq = [&](int index, double value) { return s.squared_loads_derivative(index, value); };
    std::vector<std::pair<double, double>> domains = {s.domain_k2, s.domain_c2};
    if (!s.g20) s.g20 = global_metric(sq, domains, {20, 20}, opt_.threads);
    if (!s.g5) s.g5 = global_metric(sq, domains, {5, 5}, opt_.threads);
    numbers_.gamma20 = s.g20->gamma;
    numbers_.gamma5 = s.g5->gamma;
    numbers_.nu20_over_pi2 = s.g20->nu_over_pi2;
    numbers_.global_marches = s.g20->evaluations;

    double gamma_sum = 0.0;
    for (double g : s.g20->gamma) gamma_sum += g;

    bool pass = std::abs(numbers_.eta[0] - 0.86) <= 0.02 &&
                std::abs(numbers_.eta[1] - 0.14) <= 0.02 &&
                std::abs(numbers_.gamma20[0] - 0.77) <= 0.03 &&
                std::abs(numbers_.gamma20[1] - 0.23) <= 0.03 &&
                std::abs(numbers_.gamma5[0] - 0.80) <= 0.03 &&
                std::abs(numbers_.gamma5[1] - 0.20) <= 0.03 && std::abs(gamma_sum - 1.0) <= 1e-10;
    return {"derivative metrics eta=(0.86,0.14)+-0.02, gamma20=(0.77,0.23)+-0.03, "
            "gamma5=(0.80,0.20)+-0.03",
            pass,
            fmt("eta = (%.3f, %.3f), gamma N=20 = (%.3f, %.3f), N=5 = (%.3f, %.3f), "
                "nu/pi^2 = (%.2e, %.2e)",
                numbers_.eta[0], numbers_.eta[1], numbers_.gamma20[0], numbers_.gamma20[1],
                numbers_.gamma5[0], numbers_.gamma5[1], numbers_.nu20_over_pi2[0],
                numbers_.nu20_over_pi2[1])};
}

namespace {

std::vector<double> mean_columns(const std::vector<std::vector<double>>& rows) {
    std::vector<double> mean(rows.front().size(), 0.0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) mean[i] += r[i];
    for (auto& v : mean) v /= static_cast<double>(rows.size());
    return mean;
}

}  // namespace

CheckResult ValidationBattery::baseline_reproduction() {
    Shared& s = shared();
    if (!s.baselines) {
        Shared::Baselines b;
        std::vector<std::pair<double, double>> domains = {s.domain_k2, s.domain_c2};
        ScalarModel model = [&](const std::vector<double>& v) { return s.loads_model(v[0], v[1]); };

        std::vector<std::vector<double>> src_rows, s1_rows, st_rows, dtot_rows, rbd_rows;
        for (int r = 0; r < opt_.replicates; ++r) {
            SampleDesign design;
            design.kind = SampleDesign::Kind::LatinHypercube;
            design.n_samples = 150;
            design.domains = domains;
            design.seed = opt_.seed + 13 * r;
            auto X = generate_design(design);
            std::vector<double> y(X.size());
            parallel_for(
                static_cast<int>(X.size()), [&](int i) { y[i] = model(X[i]); }, opt_.threads);
            src_rows.push_back(src_srrc(X, y).normalized_src);

            SobolOptions so;
            so.design = SampleDesign::Kind::SobolSequence;
            so.n_samples = 1024;
            so.seed = opt_.seed + 101 + 13 * r;
            so.threads = opt_.threads;
            VarianceReport vr = sobol_indices(model, domains, so);
            s1_rows.push_back(vr.s1);
            st_rows.push_back(vr.s_total);
            dtot_rows.push_back(vr.d_total);
            b.sobol_evals = vr.evaluations;

            RbdOptions ro;
            ro.n_samples = 500;
            ro.harmonics = 6;
            ro.seed = opt_.seed + 201 + 13 * r;
            ro.threads = opt_.threads;
            rbd_rows.push_back(rbd_fast(model, domains, ro).s1);
        }
        b.src = mean_columns(src_rows);
        b.sobol_s1 = mean_columns(s1_rows);
        b.sobol_st = mean_columns(st_rows);
        b.sobol_dtot = mean_columns(dtot_rows);
        b.rbd = mean_columns(rbd_rows);
        s.baselines = std::move(b);
    }
    const auto& b = *s.baselines;
    numbers_.src_normalized = b.src;
    numbers_.sobol_s1 = b.sobol_s1;
    numbers_.sobol_st = b.sobol_st;
    numbers_.sobol_dtot = b.sobol_dtot;
    numbers_.rbd_s1 = b.rbd;
    numbers_.sobol_evaluations = b.sobol_evals;

    auto near = [](double v, double target, double tol) { return std::abs(v - target) <= tol; };
    bool pass = near(b.src[0], 0.69, 0.05) && near(b.src[1], 0.31, 0.05) &&
                near(b.sobol_s1[0], 0.66, 0.05) && near(b.sobol_s1[1], 0.33, 0.05) &&
                near(b.sobol_st[0], 0.67, 0.05) && near(b.sobol_st[1], 0.34, 0.05) &&
                near(b.rbd[0], 0.66, 0.05) && near(b.rbd[1], 0.32, 0.05);
    return {"baseline reproduction (SRC n=150, Sobol n=1024, RBD-FAST n=500)", pass,
            fmt("SRC = (%.3f, %.3f), Sobol S1 = (%.3f, %.3f), St = (%.3f, %.3f), RBD = (%.3f, "
                "%.3f), replicates = %d",
                b.src[0], b.src[1], b.sobol_s1[0], b.sobol_s1[1], b.sobol_st[0], b.sobol_st[1],
                b.rbd[0], b.rbd[1], opt_.replicates)};
}

CheckResult ValidationBattery::variance_bound() {
    if (numbers_.nu20_over_pi2.empty()) derivative_metrics();
    if (numbers_.sobol_dtot.empty()) baseline_reproduction();
    bool pass = numbers_.sobol_dtot[0] <= numbers_.nu20_over_pi2[0] &&
                numbers_.sobol_dtot[1] <= numbers_.nu20_over_pi2[1];
    return {"variance bound D_tot <= nu/pi^2", pass,
            fmt("D_tot = (%.2e, %.2e), nu/pi^2 = (%.2e, %.2e)", numbers_.sobol_dtot[0],
                numbers_.sobol_dtot[1], numbers_.nu20_over_pi2[0], numbers_.nu20_over_pi2[1])};
}

CheckResult ValidationBattery::cost_accounting() {
    if (numbers_.global_marches == 0) derivative_metrics();
    if (numbers_.sobol_evaluations == 0) baseline_reproduction();
    double ratio = static_cast<double>(numbers_.sobol_evaluations) /
                   static_cast<double>(numbers_.global_marches);
    bool pass = numbers_.global_marches <= 2 * 20 && ratio >= 50.0;
    return {"cost accounting: Sobol/global evaluation ratio >= 50", pass,
            fmt("global metric marches = %ld, Sobol evaluations = %ld, ratio = %.1f",
                numbers_.global_marches, numbers_.sobol_evaluations, ratio)};
}

CheckResult ValidationBattery::annual_wall_ranking() {
    AnnualWallCase annual = annual_wall_case();
    const double t_end = annual.grid.t_max;
    const int layers = annual.problem.n_layers();

    numbers_.annual_eta_loads_k.assign(layers, 0.0);
    numbers_.annual_eta_loads_c.assign(layers, 0.0);
    numbers_.annual_eta_temp_k.assign(layers, 0.0);
    numbers_.annual_eta_temp_c.assign(layers, 0.0);

    parallel_for(
        layers,
        [&](int i) {
            SensRequest req;
            req.p = ParamId::conductivity(i + 1);
            req.q = ParamId::capacity(i + 1);
            req.order = 1;
            MarchResult res = propagate(annual.problem, annual.grid, req);
            double de_k = res.loads(0.0, t_end, SlotId::DP);
            double de_c = res.loads(0.0, t_end, SlotId::DQ);
            auto eta_loads = local_metric({de_k * de_k, de_c * de_c});
            auto eta_temp = local_metric({res.track(SlotId::DP).squared_spacetime_integral,
                                          res.track(SlotId::DQ).squared_spacetime_integral});
            numbers_.annual_eta_loads_k[i] = eta_loads[0];
            numbers_.annual_eta_loads_c[i] = eta_loads[1];
            numbers_.annual_eta_temp_k[i] = eta_temp[0];
            numbers_.annual_eta_temp_c[i] = eta_temp[1];
        },
        opt_.threads);

    bool pass = true;
    for (int i = 0; i < layers; ++i) {
        if (numbers_.annual_eta_loads_k[i] < 0.99 || numbers_.annual_eta_loads_c[i] > 1e-2)
            pass = false;
        auto ranked = rank_parameters({ParamId::conductivity(i + 1), ParamId::capacity(i + 1)},
                                      {numbers_.annual_eta_loads_k[i],
                                       numbers_.annual_eta_loads_c[i]});
        if (ranked[0].id.kind != ParamId::Kind::Conductivity || ranked[1].significant)
            pass = false;
    }
    return {"annual wall ranking: eta_k >= 0.99, eta_c <= 1e-2, capacities non-significant", pass,
            fmt("loads eta_k = (%.5f, %.5f, %.5f), eta_c = (%.1e, %.1e, %.1e)",
                numbers_.annual_eta_loads_k[0], numbers_.annual_eta_loads_k[1],
                numbers_.annual_eta_loads_k[2], numbers_.annual_eta_loads_c[0],
                numbers_.annual_eta_loads_c[1], numbers_.annual_eta_loads_c[2])};
}

CheckResult ValidationBattery::envelope_ordering() {
    EnvelopeCase env = envelope_case();
    const ReferenceValues wall_refs = env.wall.problem.refs();
    const ReferenceValues glass_refs = env.glass_prob.refs();
    const double e_ref_wall = wall_refs.T_ref * wall_refs.k_ref * wall_refs.t_ref / wall_refs.length;
    const double e_ref_glass =
        glass_refs.T_ref * glass_refs.k_ref * glass_refs.t_ref / glass_refs.length;
    const double t_wall = env.wall.grid.t_max;
    const double t_glass = env.glass_grid.t_max;

    std::vector<ParamId> params = {ParamId::conductivity(1), ParamId::conductivity(2),
                                   ParamId::glass_transmissivity(), ParamId::glass_reflectivity()};
    std::vector<std::pair<double, double>> domains;
    for (int i = 0; i < 2; ++i) {
        double anchor = env.wall.problem.param_value(params[i]);
        domains.emplace_back(0.5 * anchor, 1.5 * anchor);
    }
    for (int i = 2; i < 4; ++i) {
        double anchor = env.glass_prob.param_value(params[i]);
        domains.emplace_back(0.5 * anchor, 1.5 * anchor);
    }

    auto sq = [&](int index, double value) {
        const ParamId& p = params[index];
        if (index < 2) {
            DimensionlessProblem prob = env.wall.problem.with_param(p, value);
            double d = e_ref_wall * loads_derivative(prob, env.wall.grid, p, 0.0, t_wall);
            return d * d;
        }
        DimensionlessProblem prob = env.glass_prob.with_param(p, value);
        double d = e_ref_glass * loads_derivative(prob, env.glass_grid, p, 0.0, t_glass);
        return d * d;
    };
    GlobalMetricResult g = global_metric(sq, domains, {5, 5, 5, 5}, opt_.threads);
    numbers_.envelope_gamma = g.gamma;

    const double a_check = absorbed_fraction(0.15, 0.26);
    const double a_expected = (1.0 - 0.26) * (1.0 - 0.15) / (1.0 - 0.15 * 0.26);
    double glass_max = std::max(g.gamma[2], g.gamma[3]);
    bool pass = g.gamma[0] >= 10.0 * glass_max && g.gamma[1] >= 10.0 * glass_max &&
                std::abs(a_check - a_expected) <= 1e-12;
    return {"envelope ordering gamma(k1), gamma(k2) >= 10x glass optics; A formula", pass,
            fmt("gamma = (k1 %.3f, k2 %.3f, tau %.2e, rho %.2e), A(0.15, 0.26) = %.12f",
                g.gamma[0], g.gamma[1], g.gamma[2], g.gamma[3], a_check)};
}

std::vector<CheckResult> ValidationBattery::run_all() {
    std::vector<CheckResult> out;
    out.push_back(solver_accuracy());
    out.push_back(sensitivity_fidelity());
    out.push_back(discrete_vs_continuous());
    out.push_back(taylor_trust_region());
    out.push_back(derivative_metrics());
    out.push_back(baseline_reproduction());
    out.push_back(variance_bound());
    out.push_back(cost_accounting());
    out.push_back(annual_wall_ranking());
    out.push_back(envelope_ordering());
    return out;
}

std::string format_results(const std::vector<CheckResult>& results) {
    std::string out;
    for (const auto& r : results) {
        out += (r.pass ? "PASS  " : "FAIL  ") + r.name + "\n        " + r.detail + "\n";
    }
    int passed = 0;
    for (const auto& r : results) passed += r.pass ? 1 : 0;
    out += fmt("%d/%zu checks passed\n", passed, results.size());
    return out;
}

}  // namespace wallsens
