#include "wallsens/taylor.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace wallsens {

namespace {

TaylorTerms extract_terms(const MarchResult& res, SlotId slot, const TaylorBuildOptions& opt) {
    TaylorTerms terms;
    const auto& tr = res.track(slot);
    terms.flux = tr.flux;
    terms.field = tr.field;
    for (auto [t0, t1] : opt.load_intervals) terms.loads.push_back(res.loads(t0, t1, slot));
    return terms;
}

// Expansion weights for the active terms given a displacement. The mixed term
// carries the full cross coefficient (the expansion must reproduce quadratic
// models exactly, leaving a cubic remainder).
struct Expansion {
    double wp = 0.0, wq = 0.0, wpp = 0.0, wqq = 0.0, wpq = 0.0;
};

Expansion weights(const TaylorModel& m, const std::vector<double>& values,
                  TaylorEvalInfo* info) {
    if (values.size() != m.params.size())
        throw std::invalid_argument("parameter value count does not match the model");
    const double dp = values[0] - m.anchors[0];
    const double dq = m.two_params() ? values[1] - m.anchors[1] : 0.0;
    Expansion e;
    e.wp = dp;
    e.wq = dq;
    if (m.order >= 2) {
        e.wpp = 0.5 * dp * dp;
        e.wqq = 0.5 * dq * dq;
        e.wpq = dp * dq;
    }
    if (info) {
        info->displacement = {dp};
        if (m.two_params()) info->displacement.push_back(dq);
        info->extrapolated = false;
        for (std::size_t i = 0; i < m.trust.size() && i < values.size(); ++i)
            if (values[i] < m.trust[i].first || values[i] > m.trust[i].second)
                info->extrapolated = true;
    }
    return e;
}

template <class Get>
double combine(const TaylorModel& m, const Expansion& e, Get get) {
    double out = get(m.base);
    out += e.wp * get(m.d_p);
    if (m.two_params()) out += e.wq * get(m.d_q);
    if (m.order >= 2) {
        out += e.wpp * get(m.d_pp);
        if (m.two_params()) out += e.wqq * get(m.d_qq) + e.wpq * get(m.d_pq);
    }
    return out;
}

}  // namespace

TaylorModel build_taylor(const DimensionlessProblem& problem, const Grid& grid,
                         const std::vector<ParamId>& params, int order,
                         const TaylorBuildOptions& options) {
    if (params.empty() || params.size() > 2)
        throw std::invalid_argument("taylor surrogate supports one or two parameters");
    if (order != 1 && order != 2) throw std::invalid_argument("taylor order must be 1 or 2");
    if (!options.trust.empty() && options.trust.size() != params.size())
        throw std::invalid_argument("trust region needs one interval per parameter");

    SensRequest req;
    req.p = params[0];
    if (params.size() == 2) req.q = params[1];
    req.order = order;

    MarchOptions mopt;
    mopt.store_every = options.store_every;
    MarchResult res = propagate(problem, grid, req, mopt);

    TaylorModel m;
    m.params = params;
    for (const auto& p : params) m.anchors.push_back(problem.param_value(p));
    m.order = order;
    m.grid = grid;
    m.store_every = options.store_every;
    m.load_intervals = options.load_intervals;
    m.trust = options.trust;

    m.base = extract_terms(res, SlotId::Value, options);
    m.d_p = extract_terms(res, SlotId::DP, options);
    if (params.size() == 2) m.d_q = extract_terms(res, SlotId::DQ, options);
    if (order >= 2) {
        m.d_pp = extract_terms(res, SlotId::DPP, options);
        if (params.size() == 2) {
            m.d_qq = extract_terms(res, SlotId::DQQ, options);
            m.d_pq = extract_terms(res, SlotId::DPQ, options);
        }
    }
    return m;
}

std::vector<double> taylor_flux(const TaylorModel& m, const std::vector<double>& values,
                                TaylorEvalInfo* info) {
    Expansion e = weights(m, values, info);
    std::vector<double> out(m.base.flux.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = combine(m, e, [i](const TaylorTerms& t) { return t.flux[i]; });
    return out;
}

double taylor_load(const TaylorModel& m, int interval, const std::vector<double>& values,
                   TaylorEvalInfo* info) {
    if (interval < 0 || interval >= static_cast<int>(m.load_intervals.size()))
        throw std::invalid_argument("load interval index out of range");
    Expansion e = weights(m, values, info);
    return combine(m, e, [interval](const TaylorTerms& t) { return t.loads[interval]; });
}

FieldStore taylor_field(const TaylorModel& m, const std::vector<double>& values,
                        TaylorEvalInfo* info) {
    if (m.store_every <= 0)
        throw std::invalid_argument("model was built without a temperature-field surrogate");
    Expansion e = weights(m, values, info);
    FieldStore out;
    out.n_nodes = m.base.field.n_nodes;
    out.times = m.base.field.times;
    out.values.resize(m.base.field.values.size());
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = combine(m, e, [i](const TaylorTerms& t) { return t.field.values[i]; });
    return out;
}

double surrogate_error_field(const TaylorModel& m, const std::vector<double>& values,
                             const FieldStore& reference) {
    FieldStore pred = taylor_field(m, values);
    if (pred.n_nodes != reference.n_nodes || pred.values.size() != reference.values.size())
        throw std::invalid_argument("reference field shape does not match the surrogate");
    double acc = 0.0;
    for (std::size_t i = 0; i < pred.values.size(); ++i) {
        double d = pred.values[i] - reference.values[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(pred.values.size()));
}

double surrogate_error_flux(const TaylorModel& m, const std::vector<double>& values,
                            const std::vector<double>& reference_flux) {
    std::vector<double> pred = taylor_flux(m, values);
    if (pred.size() != reference_flux.size())
        throw std::invalid_argument("reference flux length does not match the surrogate");
    double acc = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        double d = pred[i] - reference_flux[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(pred.size()));
}

namespace {

using nlohmann::json;

json terms_to_json(const TaylorTerms& t) {
    json j;
    j["flux"] = t.flux;
    j["loads"] = t.loads;
    if (t.field.n_nodes > 0) {
        j["field"] = {{"n_nodes", t.field.n_nodes},
                      {"times", t.field.times},
                      {"values", t.field.values}};
    }
    return j;
}

TaylorTerms terms_from_json(const json& j) {
    TaylorTerms t;
    t.flux = j.at("flux").get<std::vector<double>>();
    t.loads = j.at("loads").get<std::vector<double>>();
    if (j.contains("field")) {
        t.field.n_nodes = j["field"].at("n_nodes").get<int>();
        t.field.times = j["field"].at("times").get<std::vector<double>>();
        t.field.values = j["field"].at("values").get<std::vector<double>>();
    }
    return t;
}

json param_to_json(const ParamId& p) {
    return json{{"name", p.name()}};
}

}  // namespace

std::string taylor_to_json(const TaylorModel& m) {
    json j;
    j["format"] = "wallsens-taylor";
    j["version"] = 1;
    j["order"] = m.order;
    j["anchors"] = m.anchors;
    j["store_every"] = m.store_every;
    j["grid"] = {{"dx", m.grid.dx}, {"dt", m.grid.dt}, {"t_max", m.grid.t_max}};
    for (const auto& p : m.params) j["params"].push_back(param_to_json(p));
    json intervals = json::array();
    for (auto [a, b] : m.load_intervals) intervals.push_back({a, b});
    j["load_intervals"] = intervals;
    json trust = json::array();
    for (auto [a, b] : m.trust) trust.push_back({a, b});
    j["trust"] = trust;
    j["base"] = terms_to_json(m.base);
    j["d_p"] = terms_to_json(m.d_p);
    if (m.two_params()) j["d_q"] = terms_to_json(m.d_q);
    if (m.order >= 2) {
        j["d_pp"] = terms_to_json(m.d_pp);
        if (m.two_params()) {
            j["d_qq"] = terms_to_json(m.d_qq);
            j["d_pq"] = terms_to_json(m.d_pq);
        }
    }
    return j.dump();
}

TaylorModel taylor_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("format", "") != "wallsens-taylor" || j.value("version", 0) != 1)
        throw std::invalid_argument("not a wallsens-taylor v1 document");
    TaylorModel m;
    m.order = j.at("order").get<int>();
    m.anchors = j.at("anchors").get<std::vector<double>>();
    m.store_every = j.at("store_every").get<int>();
    m.grid = Grid(j["grid"].at("dx").get<double>(), j["grid"].at("dt").get<double>(),
                  j["grid"].at("t_max").get<double>());
    for (const auto& p : j.at("params")) m.params.push_back(parse_param(p.at("name")));
    for (const auto& iv : j.at("load_intervals"))
        m.load_intervals.emplace_back(iv[0].get<double>(), iv[1].get<double>());
    for (const auto& iv : j.at("trust"))
        m.trust.emplace_back(iv[0].get<double>(), iv[1].get<double>());
    m.base = terms_from_json(j.at("base"));
    m.d_p = terms_from_json(j.at("d_p"));
    if (m.params.size() == 2) m.d_q = terms_from_json(j.at("d_q"));
    if (m.order >= 2) {
        m.d_pp = terms_from_json(j.at("d_pp"));
        if (m.params.size() == 2) {
            m.d_qq = terms_from_json(j.at("d_qq"));
            m.d_pq = terms_from_json(j.at("d_pq"));
        }
    }
    return m;
}

}  // namespace wallsens
