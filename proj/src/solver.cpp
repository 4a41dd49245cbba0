#include "wallsens/solver.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "wallsens/deriv2.hpp"

namespace wallsens {

std::string slot_name(SlotId s) {
    switch (s) {
        case SlotId::Value: return "u";
        case SlotId::DP: return "dp";
        case SlotId::DQ: return "dq";
        case SlotId::DPP: return "dpp";
        case SlotId::DQQ: return "dqq";
        case SlotId::DPQ: return "dpq";
    }
    return "?";
}

namespace {

template <class T>
struct StateOps;

template <>
struct StateOps<double> {
    static constexpr int kSlots = 1;
    static double constant(double c) { return c; }
    static double slot(double s, int) { return s; }
    static bool finite(double s) { return std::isfinite(s); }
};

template <>
struct StateOps<Deriv2> {
    static constexpr int kSlots = 6;
    static Deriv2 constant(double c) { return Deriv2::constant(c); }
    static double slot(const Deriv2& s, int i) {
        switch (i) {
            case 0: return s.v;
            case 1: return s.dp;
            case 2: return s.dq;
            case 3: return s.dpp;
            case 4: return s.dqq;
            default: return s.dpq;
        }
    }
    static bool finite(const Deriv2& s) { return all_finite(s); }
};

// Material samples carrying derivative seeds with respect to the requested
// parameter pair: d k*(x)/d k*_l is the indicator of layer l, d c*(x)/d c*_l
// likewise, and the source amplitude A(rho, tau) carries its optical
// derivatives. Everything downstream is plain Deriv2 arithmetic.
struct SeedContext {
    std::optional<ParamId> p, q;

    static double indicator(const std::optional<ParamId>& id, ParamId::Kind kind, int layer) {
        return (id && id->kind == kind && id->layer_index() == layer) ? 1.0 : 0.0;
    }

    template <class T>
    T k_sample(const DimensionlessProblem& pr, double x) const;
    template <class T>
    T c_sample(const DimensionlessProblem& pr, double x) const;
    template <class T>
    T source_amplitude(const DimensionlessProblem& pr) const;
};

template <>
double SeedContext::k_sample<double>(const DimensionlessProblem& pr, double x) const {
    return pr.k_at(x);
}
template <>
double SeedContext::c_sample<double>(const DimensionlessProblem& pr, double x) const {
    return pr.c_at(x);
}
template <>
double SeedContext::source_amplitude<double>(const DimensionlessProblem& pr) const {
    if (!pr.source() || !pr.source()->optics) return 1.0;
    const auto& o = *pr.source()->optics;
    return (1.0 - o.transmissivity) * (1.0 - o.reflectivity) /
           (1.0 - o.reflectivity * o.transmissivity);
}

template <>
Deriv2 SeedContext::k_sample<Deriv2>(const DimensionlessProblem& pr, double x) const {
    int layer = pr.layer_at(x);
    Deriv2 r = Deriv2::constant(pr.k_values()[layer]);
    r.dp = indicator(p, ParamId::Kind::Conductivity, layer);
    r.dq = indicator(q, ParamId::Kind::Conductivity, layer);
    return r;
}
template <>
Deriv2 SeedContext::c_sample<Deriv2>(const DimensionlessProblem& pr, double x) const {
    int layer = pr.layer_at(x);
    Deriv2 r = Deriv2::constant(pr.c_values()[layer]);
    r.dp = indicator(p, ParamId::Kind::Capacity, layer);
    r.dq = indicator(q, ParamId::Kind::Capacity, layer);
    return r;
}
template <>
Deriv2 SeedContext::source_amplitude<Deriv2>(const DimensionlessProblem& pr) const {
    if (!pr.source() || !pr.source()->optics) return Deriv2::constant(1.0);
    const auto& o = *pr.source()->optics;
    Deriv2 tau = Deriv2::constant(o.transmissivity);
    tau.dp = (p && p->kind == ParamId::Kind::GlassTransmissivity) ? 1.0 : 0.0;
    tau.dq = (q && q->kind == ParamId::Kind::GlassTransmissivity) ? 1.0 : 0.0;
    Deriv2 rho = Deriv2::constant(o.reflectivity);
    rho.dp = (p && p->kind == ParamId::Kind::GlassReflectivity) ? 1.0 : 0.0;
    rho.dq = (q && q->kind == ParamId::Kind::GlassReflectivity) ? 1.0 : 0.0;
    return ((1.0 - tau) * (1.0 - rho)) / (1.0 - rho * tau);
}

// Per-node coefficients of the Dufort-Frankel update
//   u_j^{n+1} = nu1 u_{j+1}^n + nu2 u_{j-1}^n + nu3 u_j^{n-1} + src_gain S_j^n,
// with lambda3 = (dt Fo / dx^2) (k_{j+1/2} + k_{j-1/2}) / c_j and
// nu1 = lambda1/(1+lambda3), nu2 = lambda2/(1+lambda3),
// nu3 = (1-lambda3)/(1+lambda3); the half-node conductivities are sampled at
// the interval midpoints. The seeding step is one forward-Euler application
// of the same spatial operator.
template <class T>
struct Coefficients {
    std::vector<T> nu1, nu2, nu3, df_src_gain;       // interior nodes
    std::vector<T> kp, km, euler_gain, euler_src_gain;
    std::vector<T> src_node;                          // amplitude * shape(x_j)
    T k_left, k_right;
    double bi_l = 0.0, bi_r = 0.0, alpha = 0.0, inv2dx = 0.0;
    bool has_source = false;
};

template <class T>
Coefficients<T> build_coefficients(const DimensionlessProblem& pr, const Grid& g,
                                   const SeedContext& seeds) {
    const int n = g.n_nodes;
    Coefficients<T> co;
    co.bi_l = pr.biot_left();
    co.bi_r = pr.biot_right();
    co.alpha = pr.absorptivity();
    co.inv2dx = 1.0 / (2.0 * g.dx);
    co.k_left = seeds.k_sample<T>(pr, 0.0);
    co.k_right = seeds.k_sample<T>(pr, 1.0);
    co.has_source = pr.source().has_value();

    const double r = g.dt * pr.fourier() / (g.dx * g.dx);
    co.nu1.resize(n); co.nu2.resize(n); co.nu3.resize(n);
    co.df_src_gain.resize(n);
    co.kp.resize(n); co.km.resize(n);
    co.euler_gain.resize(n); co.euler_src_gain.resize(n);
    if (co.has_source) co.src_node.resize(n);

    T amplitude = seeds.source_amplitude<T>(pr);
    for (int j = 1; j + 1 < n; ++j) {
        T kp = seeds.k_sample<T>(pr, 0.5 * (g.x(j) + g.x(j + 1)));
        T km = seeds.k_sample<T>(pr, 0.5 * (g.x(j) + g.x(j - 1)));
        T c = seeds.c_sample<T>(pr, g.x(j));
        T lam1 = (2.0 * r) * kp / c;
        T lam2 = (2.0 * r) * km / c;
        T lam3 = r * (kp + km) / c;
        T denom = 1.0 + lam3;
        co.nu1[j] = lam1 / denom;
        co.nu2[j] = lam2 / denom;
        co.nu3[j] = (1.0 - lam3) / denom;
        co.df_src_gain[j] = (2.0 * g.dt * pr.fourier()) / (c * denom);
        co.kp[j] = kp;
        co.km[j] = km;
        co.euler_gain[j] = StateOps<T>::constant(r) / c;
        co.euler_src_gain[j] = StateOps<T>::constant(g.dt * pr.fourier()) / c;
        if (co.has_source) co.src_node[j] = amplitude * pr.source()->shape(g.x(j));
    }
    return co;
}

// Linear-interpolation reader over a sampled signal with a moving index
// hint; the march queries time monotonically, so lookups are amortized O(1).
class SignalCursor {
  public:
    explicit SignalCursor(const Signal& s) : sig_(s) {}
    double operator()(double t) {
        if (!sig_.is_sampled()) return sig_(t);
        const auto& ts = sig_.sample_times();
        const auto& vs = sig_.sample_values();
        if (t <= ts.front()) return vs.front();
        if (t >= ts.back()) return vs.back();
        while (idx_ + 1 < ts.size() && ts[idx_ + 1] <= t) ++idx_;
        while (idx_ > 0 && ts[idx_] > t) --idx_;
        double w = (t - ts[idx_]) / (ts[idx_ + 1] - ts[idx_]);
        return vs[idx_] + w * (vs[idx_ + 1] - vs[idx_]);
    }

  private:
    const Signal& sig_;
    std::size_t idx_ = 0;
};

struct BoundaryValues {
    double u_left, u_right, g_left;
};

// Solves the discretized Robin conditions for the boundary nodes using the
// second-order one-sided gradient, in derivative-carrying arithmetic; this is
// simultaneously the boundary treatment of u and of every sensitivity field.
template <class T>
void apply_boundaries(std::vector<T>& u, const Coefficients<T>& co, const BoundaryValues& bv) {
    const int n = static_cast<int>(u.size());
    const double u_l = bv.u_left;
    const double u_r = bv.u_right;
    const double g_l = bv.g_left;

    T g_left = 4.0 * u[1] - u[2];
    T f_left = co.k_left * g_left * co.inv2dx + StateOps<T>::constant(co.bi_l * u_l + co.alpha * g_l);
    T d_left = 3.0 * co.inv2dx * co.k_left + co.bi_l;
    u[0] = f_left / d_left;

    T g_right = 4.0 * u[n - 2] - u[n - 3];
    T f_right = co.k_right * g_right * co.inv2dx + StateOps<T>::constant(co.bi_r * u_r);
    T d_right = 3.0 * co.inv2dx * co.k_right + co.bi_r;
    u[n - 1] = f_right / d_right;
}

// Interior-surface flux j* = -(k* du/dx*)|_{x*=1}, one-sided second order.
// Its derivative slots realize the flux sensitivity expressions
// dj/dp = -(dk/dp du/dx + k dX_p/dx) and the second-order analogues.
template <class T>
T surface_flux(const std::vector<T>& u, const Coefficients<T>& co) {
    const int n = static_cast<int>(u.size());
    T grad = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) * co.inv2dx;
    return -(co.k_right * grad);
}

struct SlotPlan {
    std::vector<SlotId> active;  // tracks to expose, Value first
};

SlotPlan plan_slots(const SensRequest& req) {
    SlotPlan plan;
    plan.active.push_back(SlotId::Value);
    if (!req.p) return plan;
    plan.active.push_back(SlotId::DP);
    if (req.q) plan.active.push_back(SlotId::DQ);
    if (req.order >= 2) {
        plan.active.push_back(SlotId::DPP);
        if (req.q) {
            plan.active.push_back(SlotId::DQQ);
            plan.active.push_back(SlotId::DPQ);
        }
    }
    return plan;
}

int slot_component(SlotId s) {
    switch (s) {
        case SlotId::Value: return 0;
        case SlotId::DP: return 1;
        case SlotId::DQ: return 2;
        case SlotId::DPP: return 3;
        case SlotId::DQQ: return 4;
        case SlotId::DPQ: return 5;
    }
    return 0;
}

template <class T>
class Recorder {
  public:
    Recorder(const Grid& g, const SlotPlan& plan, const MarchOptions& opt,
             const Coefficients<T>& co)
        : grid_(g), plan_(plan), opt_(opt), co_(co) {
        tracks_.resize(plan.active.size());
        for (std::size_t i = 0; i < plan.active.size(); ++i) {
            auto& tr = tracks_[i];
            tr.slot = plan.active[i];
            tr.flux.assign(g.n_steps + 1, 0.0);
            tr.probes.assign(opt.probes.size(), std::vector<double>(g.n_steps + 1, 0.0));
            if (opt.store_every > 0) tr.field.n_nodes = g.n_nodes;
        }
    }

    void record(int level, const std::vector<T>& u) {
        T flux = surface_flux(u, co_);
        const double wt = (level == 0 || level == grid_.n_steps) ? 0.5 : 1.0;
        for (std::size_t i = 0; i < plan_.active.size(); ++i) {
            const int comp = slot_component(plan_.active[i]);
            auto& tr = tracks_[i];
            tr.flux[level] = StateOps<T>::slot(flux, comp);
            for (std::size_t pi = 0; pi < opt_.probes.size(); ++pi)
                tr.probes[pi][level] = probe_value(u, opt_.probes[pi], comp);
            // trapezoid in x* and t* of the squared field
            double sum = 0.0;
            for (int j = 0; j < grid_.n_nodes; ++j) {
                double v = StateOps<T>::slot(u[j], comp);
                double wx = (j == 0 || j == grid_.n_nodes - 1) ? 0.5 : 1.0;
                sum += wx * v * v;
            }
            tr.squared_spacetime_integral += wt * grid_.dt * sum * grid_.dx;
            if (opt_.store_every > 0 && level % opt_.store_every == 0) {
                if (i == 0) stored_times_.push_back(grid_.t(level));
                for (int j = 0; j < grid_.n_nodes; ++j)
                    tr.field.values.push_back(StateOps<T>::slot(u[j], comp));
            }
            if (level == grid_.n_steps) {
                tr.final_level.resize(grid_.n_nodes);
                for (int j = 0; j < grid_.n_nodes; ++j)
                    tr.final_level[j] = StateOps<T>::slot(u[j], comp);
            }
        }
    }

    std::vector<TrackOutputs> take() {
        for (auto& tr : tracks_)
            if (opt_.store_every > 0) tr.field.times = stored_times_;
        return std::move(tracks_);
    }

  private:
    double probe_value(const std::vector<T>& u, double x, int comp) const {
        double pos = x / grid_.dx;
        int j = std::min(static_cast<int>(pos), grid_.n_nodes - 2);
        double w = pos - j;
        return (1.0 - w) * StateOps<T>::slot(u[j], comp) + w * StateOps<T>::slot(u[j + 1], comp);
    }

    const Grid& grid_;
    const SlotPlan& plan_;
    const MarchOptions& opt_;
    const Coefficients<T>& co_;
    std::vector<TrackOutputs> tracks_;
    std::vector<double> stored_times_;
};

template <class T>
void check_finite(const std::vector<T>& u, int level) {
    for (std::size_t j = 0; j < u.size(); ++j)
        if (!StateOps<T>::finite(u[j])) throw DivergenceError(static_cast<int>(j), level);
}

void validate_inputs(const DimensionlessProblem& pr, const Grid& g, const SensRequest& req,
                     const MarchOptions& opt) {
    pr.require_horizon(g.t_max);
    // every layer must be resolved by at least two cells
    double prev = 0.0;
    for (std::size_t i = 0; i <= pr.breakpoints().size(); ++i) {
        double next = (i < pr.breakpoints().size()) ? pr.breakpoints()[i] : 1.0;
        if (next - prev < 2.0 * g.dx - 1e-12)
            throw std::invalid_argument("grid does not resolve layer " + std::to_string(i + 1) +
                                        " with at least 2 cells");
        prev = next;
    }
    if (req.q && !req.p) throw std::invalid_argument("second parameter given without a first");
    if (req.p) {
        if (req.order != 1 && req.order != 2)
            throw std::invalid_argument("sensitivity order must be 1 or 2");
        pr.require_param(*req.p);
        if (req.q) pr.require_param(*req.q);
    }
    for (double x : opt.probes)
        if (x < 0.0 || x > 1.0) throw std::invalid_argument("probe position outside [0, 1]");
    if (opt.store_every < 0) throw std::invalid_argument("store_every must be >= 0");
    if (opt.restart_levels) {
        if (req.p) throw std::invalid_argument("restart is supported for plain solves only");
        if (opt.start_level < 1 || opt.start_level > g.n_steps)
            throw std::invalid_argument("restart level outside the march range");
        if (opt.restart_levels->first.size() != static_cast<std::size_t>(g.n_nodes) ||
            opt.restart_levels->second.size() != static_cast<std::size_t>(g.n_nodes))
            throw std::invalid_argument("restart levels have the wrong node count");
    }
}

template <class T>
MarchResult run_march(const DimensionlessProblem& pr, const Grid& g, const SensRequest& req,
                      const MarchOptions& opt) {
    validate_inputs(pr, g, req, opt);
    SeedContext seeds{req.p, req.q};
    Coefficients<T> co = build_coefficients<T>(pr, g, seeds);
    SlotPlan plan = plan_slots(req);
    Recorder<T> rec(g, plan, opt, co);

    const int n = g.n_nodes;
    std::vector<T> prev(n), cur(n), nxt(n);

    SignalCursor bc_left(pr.boundary().u_left_air);
    SignalCursor bc_right(pr.boundary().u_right_air);
    SignalCursor bc_rad(pr.boundary().g_left_rad);
    std::optional<SignalCursor> src_time;
    if (co.has_source) src_time.emplace(pr.source()->time);
    auto boundary_at = [&](double t) { return BoundaryValues{bc_left(t), bc_right(t), bc_rad(t)}; };

    int first_new_level = 2;
    double src_prev_level = 0.0;  // source signal at the level feeding the update
    if (opt.restart_levels) {
        for (int j = 0; j < n; ++j) {
            prev[j] = StateOps<T>::constant(opt.restart_levels->first[j]);
            cur[j] = StateOps<T>::constant(opt.restart_levels->second[j]);
        }
        rec.record(opt.start_level - 1, prev);
        rec.record(opt.start_level, cur);
        first_new_level = opt.start_level + 1;
    } else {
        // level 0: initial profile, boundary nodes made consistent with the
        // Robin conditions at t* = 0
        for (int j = 0; j < n; ++j) prev[j] = StateOps<T>::constant(pr.initial()(g.x(j)));
        apply_boundaries(prev, co, boundary_at(0.0));
        check_finite(prev, 0);
        rec.record(0, prev);

        // level 1: one forward-Euler step of the same spatial operator
        const double g0 = co.has_source ? (*src_time)(0.0) : 0.0;
        for (int j = 1; j + 1 < n; ++j) {
            T diff = co.kp[j] * (prev[j + 1] - prev[j]) - co.km[j] * (prev[j] - prev[j - 1]);
            cur[j] = prev[j] + co.euler_gain[j] * diff;
            if (co.has_source) cur[j] += co.euler_src_gain[j] * co.src_node[j] * g0;
        }
        apply_boundaries(cur, co, boundary_at(g.dt));
        check_finite(cur, 1);
        rec.record(1, cur);
        src_prev_level = co.has_source ? (*src_time)(g.dt) : 0.0;
    }

    if (opt.restart_levels && co.has_source)
        src_prev_level = (*src_time)(g.t(first_new_level - 1));

    for (int level = first_new_level; level <= g.n_steps; ++level) {
        const double gs = src_prev_level;
        for (int j = 1; j + 1 < n; ++j) {
            nxt[j] = co.nu1[j] * cur[j + 1] + co.nu2[j] * cur[j - 1] + co.nu3[j] * prev[j];
            if (co.has_source) nxt[j] += co.df_src_gain[j] * co.src_node[j] * gs;
        }
        apply_boundaries(nxt, co, boundary_at(g.t(level)));
        check_finite(nxt, level);
        rec.record(level, nxt);
        if (co.has_source && level < g.n_steps) src_prev_level = (*src_time)(g.t(level));
        std::swap(prev, cur);
        std::swap(cur, nxt);
    }

    MarchResult result;
    result.grid = g;
    result.request = req;
    result.tracks = rec.take();
    return finish_result(std::move(result));
}

}  // namespace

MarchResult finish_result(MarchResult r);

const TrackOutputs& MarchResult::track(SlotId s) const {
    for (const auto& tr : tracks)
        if (tr.slot == s) return tr;
    throw std::invalid_argument("march result has no track " + slot_name(s));
}

bool MarchResult::has_track(SlotId s) const {
    for (const auto& tr : tracks)
        if (tr.slot == s) return true;
    return false;
}

double MarchResult::loads(double t0, double t1, SlotId s) const {
    std::size_t idx = 0;
    while (idx < tracks.size() && tracks[idx].slot != s) ++idx;
    if (idx == tracks.size())
        throw std::invalid_argument("march result has no track " + slot_name(s));
    const auto& cum = cumulative_[idx];
    if (!(t1 > t0) || t0 < -1e-12 || t1 > grid.t_max + 1e-9)
        throw std::invalid_argument("loads interval must satisfy 0 <= t0 < t1 <= t_max");
    auto eval = [&](double t) {
        double pos = t / grid.dt;
        int i = std::clamp(static_cast<int>(pos), 0, grid.n_steps - 1);
        double w = pos - i;
        return cum[i] + w * (cum[i + 1] - cum[i]);
    };
    return eval(t1) - eval(t0);
}

MarchResult finish_result(MarchResult r) {
    r.cumulative_.resize(r.tracks.size());
    for (std::size_t i = 0; i < r.tracks.size(); ++i) {
        const auto& flux = r.tracks[i].flux;
        auto& cum = r.cumulative_[i];
        cum.assign(flux.size(), 0.0);
        for (std::size_t nidx = 1; nidx < flux.size(); ++nidx)
            cum[nidx] = cum[nidx - 1] + 0.5 * r.grid.dt * (flux[nidx - 1] + flux[nidx]);
    }
    return r;
}

MarchResult solve(const DimensionlessProblem& problem, const Grid& grid,
                  const MarchOptions& options) {
    return run_march<double>(problem, grid, SensRequest{}, options);
}

MarchResult propagate(const DimensionlessProblem& problem, const Grid& grid,
                      const SensRequest& request, const MarchOptions& options) {
    if (!request.p) throw std::invalid_argument("propagate needs a target parameter");
    return run_march<Deriv2>(problem, grid, request, options);
}

double integrate_series(const std::vector<double>& values, double dt, double t0, double t1) {
    if (values.size() < 2) throw std::invalid_argument("series needs >= 2 samples");
    double t_end = dt * static_cast<double>(values.size() - 1);
    if (!(t1 > t0) || t0 < -1e-12 || t1 > t_end + 1e-9)
        throw std::invalid_argument("integration interval must satisfy 0 <= t0 < t1 <= horizon");
    std::vector<double> cum(values.size(), 0.0);
    for (std::size_t i = 1; i < values.size(); ++i)
        cum[i] = cum[i - 1] + 0.5 * dt * (values[i - 1] + values[i]);
    auto eval = [&](double t) {
        double pos = t / dt;
        int i = std::clamp(static_cast<int>(pos), 0, static_cast<int>(values.size()) - 2);
        double w = pos - i;
        return cum[i] + w * (cum[i + 1] - cum[i]);
    };
    return eval(t1) - eval(t0);
}

}  // namespace wallsens
