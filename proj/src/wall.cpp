#include "wallsens/wall.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wallsens {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

double WallSpec::total_thickness() const {
    double L = 0.0;
    for (const auto& l : layers) L += l.thickness;
    return L;
}

void WallSpec::validate() const {
    require(!layers.empty(), "wall needs at least one layer");
    for (const auto& l : layers) {
        require(l.conductivity > 0.0, "layer conductivity must be > 0");
        require(l.volumetric_capacity > 0.0, "layer capacity must be > 0");
        require(l.thickness > 0.0, "layer thickness must be > 0");
    }
    require(h_left > 0.0 && h_right > 0.0, "surface coefficients must be > 0");
    require(absorptivity >= 0.0 && absorptivity <= 1.0, "absorptivity must be in [0, 1]");
}

void ReferenceValues::validate() const {
    require(k_ref > 0.0 && c_ref > 0.0 && T_ref > 0.0 && t_ref > 0.0 && length > 0.0,
            "reference values must be strictly positive");
}

InitialProfile InitialProfile::constant(double u0) {
    InitialProfile p;
    p.kind = Kind::Constant;
    p.constant_value = u0;
    return p;
}

InitialProfile InitialProfile::linear(double u_left, double u_right) {
    InitialProfile p;
    p.kind = Kind::LinearBetweenSurfaces;
    p.left_value = u_left;
    p.right_value = u_right;
    return p;
}

InitialProfile InitialProfile::from_function(std::function<double(double)> f) {
    InitialProfile p;
    p.kind = Kind::Tabulated;
    p.tabulated = std::move(f);
    return p;
}

double InitialProfile::operator()(double x) const {
    switch (kind) {
        case Kind::Constant: return constant_value;
        case Kind::LinearBetweenSurfaces: return left_value + (right_value - left_value) * x;
        case Kind::Tabulated: return tabulated(x);
    }
    return 0.0;
}

DimensionlessProblem::DimensionlessProblem(std::vector<double> breakpoints,
                                           std::vector<double> k_star,
                                           std::vector<double> c_star,
                                           double fourier,
                                           double biot_left,
                                           double biot_right,
                                           double absorptivity,
                                           BoundarySignals boundary,
                                           InitialProfile initial,
                                           ReferenceValues refs,
                                           std::optional<SourceTerm> source)
    : breakpoints_(std::move(breakpoints)),
      k_star_(std::move(k_star)),
      c_star_(std::move(c_star)),
      fourier_(fourier),
      biot_left_(biot_left),
      biot_right_(biot_right),
      absorptivity_(absorptivity),
      boundary_(std::move(boundary)),
      initial_(std::move(initial)),
      refs_(refs),
      source_(std::move(source)) {
    require(!k_star_.empty() && k_star_.size() == c_star_.size(),
            "k*/c* need one value per layer");
    require(breakpoints_.size() + 1 == k_star_.size(),
            "breakpoint count must be layer count - 1");
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        require(breakpoints_[i] > 0.0 && breakpoints_[i] < 1.0, "breakpoints must lie in (0, 1)");
        if (i > 0) require(breakpoints_[i] > breakpoints_[i - 1], "breakpoints must increase");
    }
    for (double k : k_star_) require(k > 0.0, "k* must be > 0");
    for (double c : c_star_) require(c > 0.0, "c* must be > 0");
    require(fourier_ > 0.0, "Fo must be > 0");
    require(biot_left_ > 0.0 && biot_right_ > 0.0, "Biot numbers must be > 0");
    if (source_ && source_->optics) {
        const auto& o = *source_->optics;
        require(o.reflectivity >= 0.0 && o.reflectivity < 1.0, "reflectivity must be in [0, 1)");
        require(o.transmissivity >= 0.0 && o.transmissivity <= 1.0,
                "transmissivity must be in [0, 1]");
        require(o.reflectivity * o.transmissivity < 1.0, "rho*tau must be < 1");
    }
}

int DimensionlessProblem::layer_at(double x) const {
    require(x >= -1e-12 && x <= 1.0 + 1e-12, "x* outside [0, 1]");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    return static_cast<int>(it - breakpoints_.begin());
}

std::pair<double, double> DimensionlessProblem::properties_at(double x) const {
    int i = layer_at(x);
    return {k_star_[i], c_star_[i]};
}

double DimensionlessProblem::param_value(const ParamId& p) const {
    require_param(p);
    switch (p.kind) {
        case ParamId::Kind::Conductivity: return k_star_[p.layer_index()];
        case ParamId::Kind::Capacity: return c_star_[p.layer_index()];
        case ParamId::Kind::GlassTransmissivity: return source_->optics->transmissivity;
        case ParamId::Kind::GlassReflectivity: return source_->optics->reflectivity;
    }
    return 0.0;
}

DimensionlessProblem DimensionlessProblem::with_param(const ParamId& p, double value) const {
    require_param(p);
    DimensionlessProblem out = *this;
    switch (p.kind) {
        case ParamId::Kind::Conductivity:
            require(value > 0.0, "k* must contain > 0");
            out.k_star_[p.layer_index()] = value;
            break;
        case ParamId::Kind::Capacity:
            require(value > 0.0, "c* must stay > 0");
            out.c_star_[p.layer_index()] = value;
            break;
        case ParamId::Kind::GlassTransmissivity:
            out.source_->optics->transmissivity = value;
            break;
        case ParamId::Kind::GlassReflectivity:
            out.source_->optics->reflectivity = value;
            break;
    }
    return out;
}

bool DimensionlessProblem::has_param(const ParamId& p) const {
    if (p.is_layer_param()) return p.layer >= 1 && p.layer <= n_layers();
    return source_.has_value() && source_->optics.has_value();
}

void DimensionlessProblem::require_param(const ParamId& p) const {
    if (!has_param(p))
        throw std::invalid_argument("parameter " + p.name() + " is not part of this problem");
}

void DimensionlessProblem::require_horizon(double t_max) const {
    if (!boundary_.u_left_air.covers(t_max) || !boundary_.u_right_air.covers(t_max) ||
        !boundary_.g_left_rad.covers(t_max))
        throw std::invalid_argument("boundary signals do not cover the simulation horizon");
    if (source_ && !source_->time.covers(t_max))
        throw std::invalid_argument("source signal does not cover the simulation horizon");
}

namespace {

// Rescales a dimensional time signal into a dimensionless one.
Signal scale_signal(const Signal& s, double t_ref, double value_scale, double value_offset = 0.0) {
    if (s.is_sampled()) {
        std::vector<double> t = s.sample_times();
        std::vector<double> v = s.sample_values();
        for (auto& x : t) x /= t_ref;
        for (auto& y : v) y = y * value_scale + value_offset;
        return Signal::sampled(std::move(t), std::move(v));
    }
    return Signal::function(
        [s, t_ref, value_scale, value_offset](double ts) {
            return s(ts * t_ref) * value_scale + value_offset;
        });
}

}  // namespace

DimensionlessProblem nondimensionalize(const WallSpec& wall,
                                       const ReferenceValues& refs,
                                       const DimensionalBoundary& boundary,
                                       const InitialProfile& initial_dimensionless,
                                       double horizon_seconds) {
    wall.validate();
    refs.validate();
    require(horizon_seconds > 0.0, "horizon must be > 0");

    const double L = refs.length;
    std::vector<double> breaks, ks, cs;
    double x = 0.0;
    for (std::size_t i = 0; i < wall.layers.size(); ++i) {
        const auto& layer = wall.layers[i];
        ks.push_back(layer.conductivity / refs.k_ref);
        cs.push_back(layer.volumetric_capacity / refs.c_ref);
        x += layer.thickness;
        if (i + 1 < wall.layers.size()) breaks.push_back(x / L);
    }
    require(std::abs(x - L) < 1e-9 * L,
            "reference length must equal the total wall thickness");

    const double fourier = refs.t_ref * refs.k_ref / (L * L * refs.c_ref);
    const double biot_left = wall.h_left * L / refs.k_ref;
    const double biot_right = wall.h_right * L / refs.k_ref;

    BoundarySignals bc;
    bc.u_left_air = scale_signal(boundary.T_left_air, refs.t_ref, 1.0 / refs.T_ref);
    bc.u_right_air = scale_signal(boundary.T_right_air, refs.t_ref, 1.0 / refs.T_ref);
    bc.g_left_rad = scale_signal(boundary.q_left_rad, refs.t_ref, L / (refs.T_ref * refs.k_ref));

    DimensionlessProblem problem(std::move(breaks), std::move(ks), std::move(cs), fourier,
                                 biot_left, biot_right, wall.absorptivity, std::move(bc),
                                 initial_dimensionless, refs);
    problem.require_horizon(horizon_seconds / refs.t_ref);
    return problem;
}

WallSpec redimensionalize(const DimensionlessProblem& problem, double h_left, double h_right) {
    const auto& refs = problem.refs();
    WallSpec wall;
    wall.h_left = h_left;
    wall.h_right = h_right;
    wall.absorptivity = problem.absorptivity();
    double prev = 0.0;
    for (int i = 0; i < problem.n_layers(); ++i) {
        double next = (i + 1 < problem.n_layers()) ? problem.breakpoints()[i] : 1.0;
        Layer layer;
        layer.conductivity = problem.k_values()[i] * refs.k_ref;
        layer.volumetric_capacity = problem.c_values()[i] * refs.c_ref;
        layer.thickness = (next - prev) * refs.length;
        wall.layers.push_back(layer);
        prev = next;
    }
    return wall;
}

DimensionlessProblem validation_case() {
    using std::numbers::pi;
    BoundarySignals bc;
    bc.u_left_air = Signal::function([](double t) { return 0.8 * std::sin(pi * t / 3.0); });
    bc.g_left_rad = Signal::function([](double t) {
        double s = std::sin(pi * t / 5.0);
        return 0.6 * s * s;
    });
    bc.u_right_air =
        Signal::function([](double t) { return 0.5 * (1.0 - std::cos(pi * t / 4.0)); });

    ReferenceValues refs;
    refs.k_ref = 1.0;
    refs.c_ref = 1.0;
    refs.T_ref = 1.0;
    refs.t_ref = 1.0;
    refs.length = 1.0;

    return DimensionlessProblem({0.6}, {0.1, 0.3}, {0.2, 0.5}, 0.02, 0.1, 0.2, 1.0,
                                std::move(bc), InitialProfile::constant(0.0), refs);
}

ParamId parse_param(const std::string& text) {
    if (text == "tau") return ParamId::glass_transmissivity();
    if (text == "rho") return ParamId::glass_reflectivity();
    if (text.size() >= 2 && (text[0] == 'k' || text[0] == 'c')) {
        int layer = 0;
        try {
            layer = std::stoi(text.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse parameter name: " + text);
        }
        if (layer < 1) throw std::invalid_argument("layer index must be >= 1: " + text);
        return text[0] == 'k' ? ParamId::conductivity(layer) : ParamId::capacity(layer);
    }
    throw std::invalid_argument("cannot parse parameter name: " + text);
}

}  // namespace wallsens
