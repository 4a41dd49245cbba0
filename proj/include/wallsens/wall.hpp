#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wallsens/param.hpp"
#include "wallsens/signal.hpp"

namespace wallsens {

// ---------------------------------------------------------------------------
// Dimensional description of a layered wall.
// ---------------------------------------------------------------------------

struct Layer {
    double conductivity = 0.0;         // W/(m K)
    double volumetric_capacity = 0.0;  // J/(m^3 K)
    double thickness = 0.0;            // m
    std::string name;
};

struct WallSpec {
    std::vector<Layer> layers;
    double h_left = 0.0;   // exterior convective coefficient, W/(m^2 K)
    double h_right = 0.0;  // interior convective coefficient, W/(m^2 K)
    double absorptivity = 1.0;

    double total_thickness() const;
    void validate() const;  // throws std::invalid_argument
};

struct ReferenceValues {
    double k_ref = 0.0;  // W/(m K)
    double c_ref = 0.0;  // J/(m^3 K)
    double T_ref = 0.0;  // K
    double t_ref = 0.0;  // s
    double length = 0.0; // m, wall thickness used for x scaling

    void validate() const;
};

// Dimensional boundary forcing: air temperatures [K] and incident shortwave
// radiation [W/m^2], all as functions of time in seconds.
struct DimensionalBoundary {
    Signal T_left_air;   // exterior
    Signal T_right_air;  // interior
    Signal q_left_rad;   // incident radiation on the exterior face
};

// ---------------------------------------------------------------------------
// Dimensionless problem consumed by the solvers.
// ---------------------------------------------------------------------------

struct BoundarySignals {
    Signal u_left_air;   // u_L_inf(t*)
    Signal u_right_air;  // u_R_inf(t*)
    Signal g_left_rad;   // g_L_inf(t*)
};

struct InitialProfile {
    enum class Kind { Constant, LinearBetweenSurfaces, Tabulated };
    Kind kind = Kind::Constant;
    double constant_value = 0.0;
    double left_value = 0.0, right_value = 0.0;       // for Linear
    std::function<double(double)> tabulated;          // u0(x*) for Tabulated

    static InitialProfile constant(double u0);
    static InitialProfile linear(double u_left, double u_right);
    static InitialProfile from_function(std::function<double(double)> f);
    double operator()(double x_star) const;
};

// Optical pair of a single glazing; defines the absorbed fraction
// A = (1-tau)(1-rho)/(1-rho tau) of the incident shortwave flux.
struct GlassOptics {
    double reflectivity = 0.0;    // rho in [0, 1)
    double transmissivity = 0.0;  // tau in [0, 1]
};

// Internal source S*(x*, t*) = amplitude * time(t*) * shape(x*), where the
// amplitude is the absorbed fraction A(optics) when optics are present and 1
// otherwise. The governing equation carries it as c* du/dt* = Fo [ (k* u')' + S* ].
struct SourceTerm {
    std::optional<GlassOptics> optics;
    Signal time;
    std::function<double(double)> shape;  // x* -> shape factor
};

class DimensionlessProblem {
  public:
    // breakpoints are the interior layer interfaces in (0, 1), strictly
    // increasing; k_star/c_star hold one value per layer (breakpoints.size()+1).
    DimensionlessProblem(std::vector<double> breakpoints,
                         std::vector<double> k_star,
                         std::vector<double> c_star,
                         double fourier,
                         double biot_left,
                         double biot_right,
                         double absorptivity,
                         BoundarySignals boundary,
                         InitialProfile initial,
                         ReferenceValues refs,
                         std::optional<SourceTerm> source = std::nullopt);

    int n_layers() const { return static_cast<int>(k_star_.size()); }
    double fourier() const { return fourier_; }
    double biot_left() const { return biot_left_; }
    double biot_right() const { return biot_right_; }
    double absorptivity() const { return absorptivity_; }
    const BoundarySignals& boundary() const { return boundary_; }
    const InitialProfile& initial() const { return initial_; }
    const ReferenceValues& refs() const { return refs_; }
    const std::optional<SourceTerm>& source() const { return source_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& k_values() const { return k_star_; }
    const std::vector<double>& c_values() const { return c_star_; }

    // Layer lookup with half-open intervals [x_{i-1}, x_i); the last interval
    // is closed so x*=1 belongs to the last layer. A point exactly on an
    // interior breakpoint therefore takes the values of the layer that starts
    // there (the validation case's "x* >= 0.6" convention).
    int layer_at(double x_star) const;
    // (k*, c*) at x_star; throws for x* outside [0, 1].
    std::pair<double, double> properties_at(double x_star) const;

    double k_at(double x_star) const { return properties_at(x_star).first; }
    double c_at(double x_star) const { return properties_at(x_star).second; }

    // Current value of a sensitivity parameter.
    double param_value(const ParamId& p) const;
    // Copy of the problem with one parameter replaced.
    DimensionlessProblem with_param(const ParamId& p, double value) const;
    // True when p is a meaningful sensitivity parameter of this problem.
    bool has_param(const ParamId& p) const;
    void require_param(const ParamId& p) const;  // throws std::invalid_argument

    // Checks boundary signal coverage of [0, t_max].
    void require_horizon(double t_max) const;

  private:
    std::vector<double> breakpoints_;
    std::vector<double> k_star_, c_star_;
    double fourier_, biot_left_, biot_right_, absorptivity_;
    BoundarySignals boundary_;
    InitialProfile initial_;
    ReferenceValues refs_;
    std::optional<SourceTerm> source_;
};

// Appendix-A scaling of a dimensional wall problem. Boundary series are given
// in dimensional units on dimensional time; the result carries dimensionless
// signals on t* = t / t_ref.
DimensionlessProblem nondimensionalize(const WallSpec& wall,
                                       const ReferenceValues& refs,
                                       const DimensionalBoundary& boundary,
                                       const InitialProfile& initial_dimensionless,
                                       double horizon_seconds);

// Recovers the dimensional layer properties from a dimensionless problem
// (round-trip check of the scaling).
WallSpec redimensionalize(const DimensionlessProblem& problem,
                          double h_left, double h_right);

// The two-layer validation problem: Bi_L = 0.1, Bi_R = 0.2, Fo = 0.02,
// breakpoint 0.6, k* = (0.1, 0.3), c* = (0.2, 0.5), u0 = 0, alpha = 1,
// u_L = 0.8 sin(pi t/3), g_L = 0.6 sin^2(pi t/5), u_R = 0.5 (1 - cos(pi t/4)).
DimensionlessProblem validation_case();

}  // namespace wallsens
