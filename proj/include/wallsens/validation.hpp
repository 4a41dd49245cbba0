#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wallsens/baselines.hpp"
#include "wallsens/cases.hpp"
#include "wallsens/metrics.hpp"
#include "wallsens/oracle.hpp"
#include "wallsens/taylor.hpp"

namespace wallsens {

// The validation battery reproduces the two-layer benchmark study end to end
// against pinned targets (solver and sensitivity accuracy versus the
// reference oracle, Taylor trust region, derivative-based metrics, regression
// / variance / spectral baselines, the annual wall and the window envelope).
// It backs both the `validate` CLI task and the acceptance test suite.

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct BatteryOptions {
    int threads = 0;             // 0: pick automatically
    std::uint64_t seed = 90210;  // base seed of the stochastic baselines
    int replicates = 5;
    std::string artifacts_dir;   // when set, figure CSVs and reports are written
};

class ValidationBattery {
  public:
    explicit ValidationBattery(BatteryOptions options = {});

    CheckResult solver_accuracy();         // eps2(u) vs reference oracle
    CheckResult sensitivity_fidelity();    // eps2(X_k1), eps2(X_k1k1)
    CheckResult discrete_vs_continuous();  // central/forward orderings
    CheckResult taylor_trust_region();     // eps_tay lattice + cubic slopes
    CheckResult derivative_metrics();      // eta, gamma at N=20 and N=5
    CheckResult variance_bound();          // D_tot <= nu / pi^2
    CheckResult baseline_reproduction();   // SRC, Sobol, RBD-FAST tables
    CheckResult cost_accounting();         // march-count ratio vs Sobol
    CheckResult annual_wall_ranking();     // per-layer eta pattern
    CheckResult envelope_ordering();       // gamma(k) >> gamma(tau, rho)

    std::vector<CheckResult> run_all();

    // Values shared between checks, exposed for reporting.
    struct Numbers {
        double eps2_u_max = 0.0;
        double eps2_xk1_max = 0.0, eps2_xk1k1_max = 0.0;
        double eps2_central_max = 0.0, eps2_forward_max = 0.0;
        std::vector<double> eta, gamma20, gamma5, nu20_over_pi2;
        double crossed = 0.0;
        std::vector<double> src_normalized, sobol_s1, sobol_st, sobol_dtot, rbd_s1;
        long global_marches = 0, sobol_evaluations = 0;
        std::vector<double> annual_eta_loads_k, annual_eta_loads_c;
        std::vector<double> annual_eta_temp_k, annual_eta_temp_c;
        std::vector<double> envelope_gamma;  // k1, k2, tau, rho
    };
    const Numbers& numbers() const { return numbers_; }

  private:
    struct Shared;
    Shared& shared();

    void emit(const std::string& name, const std::string& content);

    BatteryOptions opt_;
    Numbers numbers_;
    std::shared_ptr<Shared> shared_;
};

// Formats results as an aligned pass/fail table.
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace wallsens
