#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace wallsens {

// Gray-code Sobol low-discrepancy sequence (Joe-Kuo direction numbers,
// first 10 dimensions). Index 0 (the all-zeros point) is skipped: next()
// first returns the point of index 1, which is 0.5 in every coordinate.
class SobolSequence {
  public:
    explicit SobolSequence(int dimensions);
    std::vector<double> next();
    static constexpr int max_dimensions() { return 10; }

  private:
    int dim_;
    std::uint64_t index_ = 0;
    std::vector<std::uint32_t> state_;
    std::vector<std::vector<std::uint32_t>> directions_;  // [dim][bit]
};

struct SampleDesign {
    enum class Kind { LatinHypercube, SobolSequence };
    Kind kind = Kind::LatinHypercube;
    int n_samples = 0;
    std::vector<std::pair<double, double>> domains;
    std::uint64_t seed = 0;
};

// Row-major n x p sample matrix. Latin hypercube: one jittered sample per
// stratum per axis, independently permuted. Sobol: the raw sequence under a
// seeded Cranley-Patterson rotation (so replicates with different seeds are
// independent while each is deterministic).
std::vector<std::vector<double>> generate_design(const SampleDesign& design);

// Uniform points on [0,1)^d used internally by the Sobol-index estimator;
// exposed for tests.
std::vector<std::vector<double>> unit_design(SampleDesign::Kind kind, int n, int dim,
                                             std::uint64_t seed);

}  // namespace wallsens
