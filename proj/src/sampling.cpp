#include "wallsens/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace wallsens {

namespace {

constexpr int kBits = 32;

struct JoeKuoRow {
    int degree;
    std::uint32_t poly;  // coefficients a of the primitive polynomial
    std::uint32_t m[5];
};

// new-joe-kuo-6 initialization for dimensions 2..10 (dimension 1 is the van
// der Corput sequence in base 2).
constexpr JoeKuoRow kJoeKuo[] = {
    {1, 0, {1, 0, 0, 0, 0}},
    {2, 1, {1, 3, 0, 0, 0}},
    {3, 1, {1, 3, 1, 0, 0}},
    {3, 2, {1, 1, 1, 0, 0}},
    {4, 1, {1, 1, 3, 3, 0}},
    {4, 4, {1, 3, 5, 13, 0}},
    {5, 2, {1, 1, 5, 5, 17}},
    {5, 4, {1, 1, 5, 5, 5}},
    {5, 7, {1, 1, 7, 11, 19}},
};

}  // namespace

SobolSequence::SobolSequence(int dimensions) : dim_(dimensions) {
    if (dimensions < 1 || dimensions > max_dimensions())
        throw std::invalid_argument("sobol sequence supports 1.." +
                                    std::to_string(max_dimensions()) + " dimensions");
    state_.assign(dim_, 0);
    directions_.assign(dim_, std::vector<std::uint32_t>(kBits, 0));

    for (int b = 0; b < kBits; ++b) directions_[0][b] = 1u << (kBits - 1 - b);
    for (int d = 1; d < dim_; ++d) {
        const JoeKuoRow& row = kJoeKuo[d - 1];
        const int s = row.degree;
        auto& v = directions_[d];
        for (int b = 0; b < s; ++b) v[b] = row.m[b] << (kBits - 1 - b);
        for (int b = s; b < kBits; ++b) {
            std::uint32_t val = v[b - s] ^ (v[b - s] >> s);
            for (int k = 1; k < s; ++k)
                if ((row.poly >> (s - 1 - k)) & 1u) val ^= v[b - k];
            v[b] = val;
        }
    }
}

std::vector<double> SobolSequence::next() {
    // lowest zero bit of the previous index drives the Gray-code update
    std::uint64_t idx = index_++;
    int bit = 0;
    while (idx & 1u) {
        idx >>= 1;
        ++bit;
    }
    std::vector<double> point(dim_);
    for (int d = 0; d < dim_; ++d) {
        state_[d] ^= directions_[d][bit];
        point[d] = static_cast<double>(state_[d]) / 4294967296.0;
    }
    return point;
}

std::vector<std::vector<double>> unit_design(SampleDesign::Kind kind, int n, int dim,
                                             std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("design needs n >= 1 samples");
    std::vector<std::vector<double>> rows(n, std::vector<double>(dim));
    if (kind == SampleDesign::Kind::SobolSequence) {
        SobolSequence seq(dim);
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::vector<double> shift(dim);
        for (auto& s : shift) s = unif(rng);
        for (int i = 0; i < n; ++i) {
            auto p = seq.next();
            for (int d = 0; d < dim; ++d) {
                double v = p[d] + shift[d];
                rows[i][d] = v - std::floor(v);
            }
        }
        return rows;
    }
    // Latin hypercube: stratified jitter, independent permutation per axis
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int d = 0; d < dim; ++d) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < n; ++i) rows[i][d] = (perm[i] + unif(rng)) / n;
    }
    return rows;
}

std::vector<std::vector<double>> generate_design(const SampleDesign& design) {
    if (design.domains.empty()) throw std::invalid_argument("design needs parameter domains");
    for (const auto& [a, b] : design.domains)
        if (!(b > a)) throw std::invalid_argument("degenerate parameter domain");
    const int dim = static_cast<int>(design.domains.size());
    auto rows = unit_design(design.kind, design.n_samples, dim, design.seed);
    for (auto& row : rows)
        for (int d = 0; d < dim; ++d)
            row[d] = design.domains[d].first +
                     row[d] * (design.domains[d].second - design.domains[d].first);
    return rows;
}

}  // namespace wallsens
