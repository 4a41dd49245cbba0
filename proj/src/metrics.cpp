#include "wallsens/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

#include "wallsens/parallel.hpp"

namespace wallsens {

std::vector<double> local_metric(const std::vector<double>& squared_integrals) {
    double total = 0.0;
    for (double v : squared_integrals) {
        if (v < 0.0) throw std::invalid_argument("squared integrals must be >= 0");
        total += v;
    }
    if (total <= 0.0)
        throw std::invalid_argument("no sensitive parameter: all squared integrals are zero");
    std::vector<double> eta(squared_integrals.size());
    for (std::size_t i = 0; i < eta.size(); ++i) eta[i] = squared_integrals[i] / total;
    return eta;
}

namespace {

double trapezoid(const std::vector<double>& y, double a, double b) {
    const int n = static_cast<int>(y.size());
    const double h = (b - a) / (n - 1);
    double acc = 0.5 * (y.front() + y.back());
    for (int i = 1; i + 1 < n; ++i) acc += y[i];
    return acc * h;
}

}  // namespace

GlobalMetricResult global_metric(const std::function<double(int, double)>& squared_integral,
                                 const std::vector<std::pair<double, double>>& domains,
                                 const std::vector<int>& lattice_n, int threads) {
    if (domains.empty() || domains.size() != lattice_n.size())
        throw std::invalid_argument("domains and lattice sizes must pair up");
    for (std::size_t i = 0; i < domains.size(); ++i) {
        if (!(domains[i].second > domains[i].first))
            throw std::invalid_argument("parameter domain is empty or reversed");
        if (lattice_n[i] < 2) throw std::invalid_argument("parameter lattice needs >= 2 points");
    }

    GlobalMetricResult out;
    const int n_params = static_cast<int>(domains.size());
    out.nu.resize(n_params);

    for (int i = 0; i < n_params; ++i) {
        const auto [a, b] = domains[i];
        const int n = lattice_n[i];
        std::vector<double> integrand(n);
        parallel_for(
            n,
            [&](int r) {
                double v = a + (b - a) * static_cast<double>(r) / (n - 1);
                integrand[r] = squared_integral(i, v);
            },
            threads);
        out.nu[i] = trapezoid(integrand, a, b);
        out.evaluations += n;
    }

    double total = 0.0;
    for (double v : out.nu) total += v;
    if (total <= 0.0) throw std::invalid_argument("no sensitive parameter: all nu are zero");
    out.gamma.resize(n_params);
    out.nu_over_pi2.resize(n_params);
    out.nu_over_12.resize(n_params);
    for (int i = 0; i < n_params; ++i) {
        out.gamma[i] = out.nu[i] / total;
        out.nu_over_pi2[i] = out.nu[i] / (std::numbers::pi * std::numbers::pi);
        out.nu_over_12[i] = out.nu[i] / 12.0;
    }
    return out;
}

double crossed_measure(const std::function<double(double, double)>& mixed_derivative,
                       std::pair<double, double> domain_p, std::pair<double, double> domain_q,
                       int n_p, int n_q, int threads) {
    if (n_p < 2 || n_q < 2) throw std::invalid_argument("joint lattice needs >= 2 points per axis");
    if (!(domain_p.second > domain_p.first) || !(domain_q.second > domain_q.first))
        throw std::invalid_argument("parameter domain is empty or reversed");

    std::vector<double> values(static_cast<std::size_t>(n_p) * n_q);
    parallel_for(
        n_p * n_q,
        [&](int idx) {
            int i = idx / n_q, j = idx % n_q;
            double pv = domain_p.first +
                        (domain_p.second - domain_p.first) * static_cast<double>(i) / (n_p - 1);
            double qv = domain_q.first +
                        (domain_q.second - domain_q.first) * static_cast<double>(j) / (n_q - 1);
            values[idx] = mixed_derivative(pv, qv);
        },
        threads);

    // double trapezoid, inner q then outer p
    std::vector<double> inner(n_p);
    for (int i = 0; i < n_p; ++i) {
        std::vector<double> row(values.begin() + static_cast<std::size_t>(i) * n_q,
                                values.begin() + static_cast<std::size_t>(i + 1) * n_q);
        inner[i] = trapezoid(row, domain_q.first, domain_q.second);
    }
    return trapezoid(inner, domain_p.first, domain_p.second);
}

std::vector<RankedParam> rank_parameters(const std::vector<ParamId>& params,
                                         const std::vector<double>& metric,
                                         double rel_threshold) {
    if (params.size() != metric.size())
        throw std::invalid_argument("parameter list and metric values must pair up");
    std::vector<RankedParam> ranked(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) ranked[i] = {params[i], metric[i], true};

    auto kind_order = [](ParamId::Kind k) {
        switch (k) {
            case ParamId::Kind::Conductivity: return 0;
            case ParamId::Kind::Capacity: return 1;
            case ParamId::Kind::GlassTransmissivity: return 2;
            case ParamId::Kind::GlassReflectivity: return 3;
        }
        return 4;
    };
    std::stable_sort(ranked.begin(), ranked.end(), [&](const RankedParam& a, const RankedParam& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.id.layer != b.id.layer) return a.id.layer < b.id.layer;
        return kind_order(a.id.kind) < kind_order(b.id.kind);
    });
    if (!ranked.empty()) {
        const double cut = rel_threshold * ranked.front().value;
        for (auto& r : ranked) r.significant = r.value >= cut && r.value > 0.0;
    }
    return ranked;
}

std::string metric_report_json(const MetricReport& rep) {
    nlohmann::json j;
    j["format"] = "wallsens-metrics";
    j["version"] = 1;
    for (std::size_t i = 0; i < rep.params.size(); ++i) {
        nlohmann::json row;
        row["param"] = rep.params[i].name();
        if (i < rep.eta.size()) row["eta"] = rep.eta[i];
        if (i < rep.nu.size()) {
            row["nu"] = rep.nu[i];
            row["gamma"] = rep.gamma[i];
            row["nu_over_pi2"] = rep.nu_over_pi2[i];
            row["nu_over_12"] = rep.nu_over_12[i];
        }
        j["parameters"].push_back(row);
    }
    if (rep.has_crossed) {
        j["crossed"] = {{"pair", rep.crossed_pair}, {"value", rep.crossed_value}};
    }
    j["evaluations"] = {{"local", rep.evaluations_local},
                        {"global", rep.evaluations_global},
                        {"crossed", rep.evaluations_crossed}};
    for (const auto& r : rep.ranking) {
        j["ranking"].push_back({{"param", r.id.name()},
                                {"value", r.value},
                                {"significant", r.significant}});
    }
    return j.dump(2);
}

std::string metric_report_csv(const MetricReport& rep) {
    std::string out = "param,metric,value\n";
    char buf[64];
    auto emit = [&](const std::string& p, const char* metric, double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += p + "," + metric + "," + buf + "\n";
    };
    for (std::size_t i = 0; i < rep.params.size(); ++i) {
        const std::string name = rep.params[i].name();
        if (i < rep.eta.size()) emit(name, "eta", rep.eta[i]);
        if (i < rep.nu.size()) {
            emit(name, "nu", rep.nu[i]);
            emit(name, "gamma", rep.gamma[i]);
            emit(name, "nu_over_pi2", rep.nu_over_pi2[i]);
            emit(name, "nu_over_12", rep.nu_over_12[i]);
        }
    }
    if (rep.has_crossed) emit(rep.crossed_pair, "nu_crossed", rep.crossed_value);
    return out;
}

}  // namespace wallsens
