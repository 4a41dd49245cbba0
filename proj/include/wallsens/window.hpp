#pragma once

#include <utility>
#include <vector>

#include "wallsens/solver.hpp"
#include "wallsens/wall.hpp"

namespace wallsens {

// Single-glazed window: one conductive layer with an internal shortwave
// source S = A q_sw x / L_w (x measured from the exterior surface) and Robin
// exchange on both faces; radiation enters only through the source term.
struct GlassSpec {
    double density = 2200.0;            // kg/m^3
    double specific_heat = 835.0;       // J/(kg K)
    double conductivity = 1.0;          // W/(m K)
    double reflectivity = 0.15;
    double transmissivity = 0.26;
    double thickness = 0.006;           // m

    double volumetric_capacity() const { return density * specific_heat; }
    void validate() const;
};

// Fraction of incident shortwave energy absorbed by the glazing:
// A = (1 - tau)(1 - rho) / (1 - rho tau).
double absorbed_fraction(double reflectivity, double transmissivity);
// Analytic first derivatives (both strictly negative on the physical domain).
double absorbed_fraction_dtau(double reflectivity, double transmissivity);
double absorbed_fraction_drho(double reflectivity, double transmissivity);

// Builds the dimensionless glass problem. Boundary temperatures and the
// shortwave flux are dimensional signals over time in seconds; T_ref and
// t_ref fix the scaling (the glass provides its own k_ref, c_ref, length).
DimensionlessProblem glass_problem(const GlassSpec& glass, double h_left, double h_right,
                                   const Signal& T_left_air, const Signal& T_right_air,
                                   const Signal& q_shortwave, double T_ref, double t_ref,
                                   double horizon_seconds);

// Dimensional thermal loads [W s / m^2] of a march over the given dimensional
// interval [t0, t1] in seconds, using the problem's reference scales.
double dimensional_loads(const MarchResult& result, const DimensionlessProblem& problem,
                         double t0_seconds, double t1_seconds, SlotId slot = SlotId::Value);

// Overall envelope loads per interval: exact sum of the wall and glass loads.
struct EnvelopeLoads {
    std::vector<std::pair<double, double>> intervals;  // seconds
    std::vector<double> wall, glass, total;
};

EnvelopeLoads envelope_loads(const std::vector<std::pair<double, double>>& intervals_seconds,
                             const std::vector<double>& wall_loads,
                             const std::vector<double>& glass_loads);

// Relative load difference |(E(p + dp) - E(p)) / E(p)| per interval. Entries
// where E(p) vanishes are flagged (value omitted as NaN).
struct RelativeDifference {
    std::vector<double> value;
    std::vector<bool> defined;
};

RelativeDifference relative_difference(const std::vector<double>& loads_at_p,
                                       const std::vector<double>& loads_at_p_plus);

}  // namespace wallsens
