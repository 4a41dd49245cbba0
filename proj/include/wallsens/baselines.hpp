#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wallsens/sampling.hpp"

namespace wallsens {

// Scalar model over a parameter vector, evaluated many times by the sampling
// estimators below.
using ScalarModel = std::function<double(const std::vector<double>&)>;

// Standardized (rank) regression coefficients. X is the n x p sample matrix,
// y the matching outputs. Raw coefficients come from ordinary least squares
// on z-scored variables; normalized indices are beta^2 / sum beta^2.
struct SrcResult {
    std::vector<double> src, srrc;              // raw standardized coefficients
    std::vector<double> normalized_src, normalized_srrc;
    double r2_src = 0.0, r2_srrc = 0.0;         // fit quality of each regression
    int n_samples = 0;
};

SrcResult src_srrc(const std::vector<std::vector<double>>& X, const std::vector<double>& y);

// Saltelli-scheme variance decomposition: n (p+2) model evaluations over the
// A, B and A_B^(i) matrices. First-order indices use the Janon estimator,
// total-effect indices the Jansen estimator.
struct SobolOptions {
    SampleDesign::Kind design = SampleDesign::Kind::SobolSequence;
    int n_samples = 1024;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct VarianceReport {
    std::vector<double> s1, s_total;            // raw estimates
    std::vector<double> s1_clamped, s_total_clamped;  // negatives clamped to 0
    std::vector<double> d_total;                // S_total * Var(y)
    double variance = 0.0;
    long evaluations = 0;
    std::string estimator_s1 = "janon";
    std::string estimator_st = "jansen";
};

VarianceReport sobol_indices(const ScalarModel& model,
                             const std::vector<std::pair<double, double>>& domains,
                             const SobolOptions& options);

// RBD-FAST first-order indices: single driving frequency (omega = 1), an
// independent random permutation per parameter, power at harmonics 1..M of
// the re-ordered output, with the standard 2M/n bias correction.
struct RbdOptions {
    int n_samples = 500;
    int harmonics = 6;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct RbdReport {
    std::vector<double> s1, s1_clamped;
    long evaluations = 0;
    int harmonics = 6;
};

RbdReport rbd_fast(const ScalarModel& model,
                   const std::vector<std::pair<double, double>>& domains,
                   const RbdOptions& options);

}  // namespace wallsens
