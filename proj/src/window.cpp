#include "wallsens/window.hpp"

#include <cmath>
#include <stdexcept>

namespace wallsens {

void GlassSpec::validate() const {
    if (!(density > 0.0) || !(specific_heat > 0.0) || !(conductivity > 0.0) ||
        !(thickness > 0.0))
        throw std::invalid_argument("glass physical properties must be > 0");
    if (reflectivity < 0.0 || reflectivity >= 1.0)
        throw std::invalid_argument("reflectivity must be in [0, 1)");
    if (transmissivity < 0.0 || transmissivity > 1.0)
        throw std::invalid_argument("transmissivity must be in [0, 1]");
    if (reflectivity * transmissivity >= 1.0)
        throw std::invalid_argument("rho*tau must be < 1");
}

double absorbed_fraction(double rho, double tau) {
    if (rho * tau >= 1.0) throw std::invalid_argument("rho*tau must be < 1");
    return (1.0 - tau) * (1.0 - rho) / (1.0 - rho * tau);
}

double absorbed_fraction_dtau(double rho, double tau) {
    double d = 1.0 - rho * tau;
    return -(1.0 - rho) * (1.0 - rho) / (d * d);
}

double absorbed_fraction_drho(double rho, double tau) {
    double d = 1.0 - rho * tau;
    return -(1.0 - tau) * (1.0 - tau) / (d * d);
}

DimensionlessProblem glass_problem(const GlassSpec& glass, double h_left, double h_right,
                                   const Signal& T_left_air, const Signal& T_right_air,
                                   const Signal& q_shortwave, double T_ref, double t_ref,
                                   double horizon_seconds) {
    glass.validate();
    if (!(h_left > 0.0) || !(h_right > 0.0))
        throw std::invalid_argument("surface coefficients must be > 0");

    ReferenceValues refs;
    refs.k_ref = glass.conductivity;
    refs.c_ref = glass.volumetric_capacity();
    refs.T_ref = T_ref;
    refs.t_ref = t_ref;
    refs.length = glass.thickness;
    refs.validate();

    WallSpec pane;
    pane.layers.push_back(Layer{glass.conductivity, glass.volumetric_capacity(),
                                glass.thickness, "glass"});
    pane.h_left = h_left;
    pane.h_right = h_right;
    pane.absorptivity = 0.0;  // radiation enters through the source term only

    DimensionalBoundary bc;
    bc.T_left_air = T_left_air;
    bc.T_right_air = T_right_air;
    bc.q_left_rad = Signal::constant(0.0);

    // Initial state: interior air temperature across the pane.
    double u0 = T_right_air(0.0) / T_ref;
    DimensionlessProblem base = nondimensionalize(pane, refs, bc, InitialProfile::constant(u0),
                                                  horizon_seconds);

    // S*(x*, t*) = A(rho, tau) g_sw(t*) x*, with the shortwave flux scaled the
    // same way as the boundary radiation.
    SourceTerm source;
    source.optics = GlassOptics{glass.reflectivity, glass.transmissivity};
    const double g_scale = glass.thickness / (T_ref * glass.conductivity);
    if (q_shortwave.is_sampled()) {
        std::vector<double> t = q_shortwave.sample_times();
        std::vector<double> v = q_shortwave.sample_values();
        for (auto& x : t) x /= t_ref;
        for (auto& y : v) y *= g_scale;
        source.time = Signal::sampled(std::move(t), std::move(v));
    } else {
        source.time = Signal::function(
            [q_shortwave, t_ref, g_scale](double ts) { return q_shortwave(ts * t_ref) * g_scale; });
    }
    source.shape = [](double x) { return x; };

    return DimensionlessProblem(base.breakpoints(), base.k_values(), base.c_values(),
                                base.fourier(), base.biot_left(), base.biot_right(),
                                base.absorptivity(), base.boundary(), base.initial(), refs,
                                std::move(source));
}

double dimensional_loads(const MarchResult& result, const DimensionlessProblem& problem,
                         double t0_seconds, double t1_seconds, SlotId slot) {
    const auto& refs = problem.refs();
    const double e_ref = refs.T_ref * refs.k_ref * refs.t_ref / refs.length;
    return e_ref * result.loads(t0_seconds / refs.t_ref, t1_seconds / refs.t_ref, slot);
}

EnvelopeLoads envelope_loads(const std::vector<std::pair<double, double>>& intervals_seconds,
                             const std::vector<double>& wall_loads,
                             const std::vector<double>& glass_loads) {
    if (wall_loads.size() != intervals_seconds.size() ||
        glass_loads.size() != intervals_seconds.size())
        throw std::invalid_argument("per-interval load series do not match the intervals");
    EnvelopeLoads out;
    out.intervals = intervals_seconds;
    out.wall = wall_loads;
    out.glass = glass_loads;
    out.total.resize(wall_loads.size());
    for (std::size_t i = 0; i < wall_loads.size(); ++i)
        out.total[i] = wall_loads[i] + glass_loads[i];
    return out;
}

RelativeDifference relative_difference(const std::vector<double>& loads_at_p,
                                       const std::vector<double>& loads_at_p_plus) {
    if (loads_at_p.size() != loads_at_p_plus.size())
        throw std::invalid_argument("load series must have matching intervals");
    RelativeDifference out;
    out.value.resize(loads_at_p.size());
    out.defined.resize(loads_at_p.size());
    for (std::size_t i = 0; i < loads_at_p.size(); ++i) {
        if (loads_at_p[i] == 0.0) {
            out.value[i] = std::nan("");
            out.defined[i] = false;
        } else {
            out.value[i] = std::abs((loads_at_p_plus[i] - loads_at_p[i]) / loads_at_p[i]);
            out.defined[i] = true;
        }
    }
    return out;
}

}  // namespace wallsens
