#include "wallsens/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "wallsens/parallel.hpp"

namespace wallsens {

namespace {

std::vector<double> zscore(const std::vector<double>& x) {
    const double n = static_cast<double>(x.size());
    double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    double sd = std::sqrt(ss / (n - 1.0));
    if (!(sd > 0.0)) throw std::invalid_argument("constant column in regression input");
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] - mean) / sd;
    return z;
}

std::vector<double> average_ranks(const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });
    std::vector<double> ranks(n);
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
        double avg = 0.5 * (i + j) + 1.0;
        for (int k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

// Cholesky solve of the (small, SPD) normal equations.
std::vector<double> ols(const std::vector<std::vector<double>>& cols,
                        const std::vector<double>& y, double* r2) {
    const int p = static_cast<int>(cols.size());
    const int n = static_cast<int>(y.size());
    std::vector<std::vector<double>> a(p, std::vector<double>(p, 0.0));
    std::vector<double> b(p, 0.0);
    for (int i = 0; i < p; ++i) {
        for (int j = i; j < p; ++j) {
            double s = 0.0;
            for (int r = 0; r < n; ++r) s += cols[i][r] * cols[j][r];
            a[i][j] = a[j][i] = s;
        }
        for (int r = 0; r < n; ++r) b[i] += cols[i][r] * y[r];
    }
    // in-place Cholesky a = L L^T
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a[i][j];
            for (int k = 0; k < j; ++k) s -= a[i][k] * a[j][k];
            if (i == j) {
                if (s <= 1e-10 * n) throw std::invalid_argument("singular regression design");
                a[i][i] = std::sqrt(s);
            } else {
                a[i][j] = s / a[j][j];
            }
        }
    }
    std::vector<double> beta(p);
    for (int i = 0; i < p; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= a[i][k] * beta[k];
        beta[i] = s / a[i][i];
    }
    for (int i = p - 1; i >= 0; --i) {
        double s = beta[i];
        for (int k = i + 1; k < p; ++k) s -= a[k][i] * beta[k];
        beta[i] = s / a[i][i];
    }
    if (r2) {
        double ssr = 0.0, sst = 0.0;
        for (int r = 0; r < n; ++r) {
            double fit = 0.0;
            for (int i = 0; i < p; ++i) fit += beta[i] * cols[i][r];
            ssr += (y[r] - fit) * (y[r] - fit);
            sst += y[r] * y[r];  // y is centered by the z-score
        }
        *r2 = sst > 0.0 ? 1.0 - ssr / sst : 0.0;
    }
    return beta;
}

std::vector<double> normalize_squares(const std::vector<double>& beta) {
    double total = 0.0;
    for (double b : beta) total += b * b;
    std::vector<double> out(beta.size(), 0.0);
    if (total > 0.0)
        for (std::size_t i = 0; i < beta.size(); ++i) out[i] = beta[i] * beta[i] / total;
    return out;
}

}  // namespace

SrcResult src_srrc(const std::vector<std::vector<double>>& X, const std::vector<double>& y) {
    const int n = static_cast<int>(y.size());
    if (X.size() != y.size()) throw std::invalid_argument("sample/output count mismatch");
    if (n < 3 || X.empty()) throw std::invalid_argument("too few samples");
    const int p = static_cast<int>(X[0].size());
    if (n < p + 2) throw std::invalid_argument("need at least p + 2 samples");
    for (double v : y)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite model output");

    std::vector<std::vector<double>> cols(p, std::vector<double>(n));
    for (int j = 0; j < p; ++j)
        for (int i = 0; i < n; ++i) cols[j][i] = X[i][j];

    SrcResult res;
    res.n_samples = n;

    std::vector<std::vector<double>> zcols(p);
    for (int j = 0; j < p; ++j) zcols[j] = zscore(cols[j]);
    res.src = ols(zcols, zscore(y), &res.r2_src);
    res.normalized_src = normalize_squares(res.src);

    std::vector<std::vector<double>> rcols(p);
    for (int j = 0; j < p; ++j) rcols[j] = zscore(average_ranks(cols[j]));
    res.srrc = ols(rcols, zscore(average_ranks(y)), &res.r2_srrc);
    res.normalized_srrc = normalize_squares(res.srrc);
    return res;
}

VarianceReport sobol_indices(const ScalarModel& model,
                             const std::vector<std::pair<double, double>>& domains,
                             const SobolOptions& options) {
    const int p = static_cast<int>(domains.size());
    const int n = options.n_samples;
    if (p < 1) throw std::invalid_argument("need at least one parameter");
    if (n < 2) throw std::invalid_argument("need at least two samples");

    auto unit = unit_design(options.design, n, 2 * p, options.seed);
    auto scale = [&](double u, int d) {
        return domains[d].first + u * (domains[d].second - domains[d].first);
    };

    // rows of A, B, and A with column i replaced from B
    std::vector<std::vector<double>> a_rows(n, std::vector<double>(p)),
        b_rows(n, std::vector<double>(p));
    for (int r = 0; r < n; ++r)
        for (int d = 0; d < p; ++d) {
            a_rows[r][d] = scale(unit[r][d], d);
            b_rows[r][d] = scale(unit[r][p + d], d);
        }

    std::vector<double> fa(n), fb(n);
    std::vector<std::vector<double>> fab(p, std::vector<double>(n));
    parallel_for(n, [&](int r) { fa[r] = model(a_rows[r]); }, options.threads);
    parallel_for(n, [&](int r) { fb[r] = model(b_rows[r]); }, options.threads);
    for (int i = 0; i < p; ++i)
        parallel_for(
            n,
            [&](int r) {
                std::vector<double> row = a_rows[r];
                row[i] = b_rows[r][i];
                fab[i][r] = model(row);
            },
            options.threads);

    VarianceReport rep;
    rep.evaluations = static_cast<long>(n) * (p + 2);

    double mean = 0.0;
    for (int r = 0; r < n; ++r) mean += fa[r] + fb[r];
    mean /= 2.0 * n;
    double var = 0.0;
    for (int r = 0; r < n; ++r)
        var += (fa[r] - mean) * (fa[r] - mean) + (fb[r] - mean) * (fb[r] - mean);
    var /= 2.0 * n - 1.0;
    if (!(var > 0.0)) throw std::invalid_argument("model output variance is zero");
    rep.variance = var;

    for (int i = 0; i < p; ++i) {
        // Janon first-order estimator on the (B, A_B^i) pair: the two designs
        // share exactly the i-th coordinate
        double m = 0.0;
        for (int r = 0; r < n; ++r) m += fb[r] + fab[i][r];
        m /= 2.0 * n;
        double num = 0.0, den = 0.0;
        for (int r = 0; r < n; ++r) {
            num += fb[r] * fab[i][r];
            den += 0.5 * (fb[r] * fb[r] + fab[i][r] * fab[i][r]);
        }
        num = num / n - m * m;
        den = den / n - m * m;
        double s1 = den > 0.0 ? num / den : 0.0;

        // Jansen total-effect estimator
        double st_num = 0.0;
        for (int r = 0; r < n; ++r)
            st_num += (fa[r] - fab[i][r]) * (fa[r] - fab[i][r]);
        double st = st_num / (2.0 * n) / var;

        rep.s1.push_back(s1);
        rep.s_total.push_back(st);
        rep.s1_clamped.push_back(std::max(0.0, s1));
        rep.s_total_clamped.push_back(std::max(0.0, st));
        rep.d_total.push_back(st * var);
    }
    return rep;
}

RbdReport rbd_fast(const ScalarModel& model,
                   const std::vector<std::pair<double, double>>& domains,
                   const RbdOptions& options) {
    using std::numbers::pi;
    const int p = static_cast<int>(domains.size());
    const int n = options.n_samples;
    const int M = options.harmonics;
    if (p < 1) throw std::invalid_argument("need at least one parameter");
    if (M < 1) throw std::invalid_argument("need at least one harmonic");
    if (n < 4 * M + 1)
        throw std::invalid_argument("RBD-FAST needs at least 4 M + 1 samples");

    // single-frequency design points and per-parameter permutations
    std::vector<double> s(n);
    for (int i = 0; i < n; ++i) s[i] = -pi + 2.0 * pi * (i + 0.5) / n;

    std::mt19937_64 rng(options.seed);
    std::vector<std::vector<int>> perm(p, std::vector<int>(n));
    for (int j = 0; j < p; ++j) {
        std::iota(perm[j].begin(), perm[j].end(), 0);
        std::shuffle(perm[j].begin(), perm[j].end(), rng);
    }

    auto triangle = [&](double sv) { return 0.5 + std::asin(std::sin(sv)) / pi; };

    std::vector<std::vector<double>> rows(n, std::vector<double>(p));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) {
            double u = triangle(s[perm[j][i]]);
            rows[i][j] = domains[j].first + u * (domains[j].second - domains[j].first);
        }

    std::vector<double> y(n);
    parallel_for(n, [&](int i) { y[i] = model(rows[i]); }, options.threads);

    double mean = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double var = 0.0;
    for (double v : y) var += (v - mean) * (v - mean);
    var /= n;
    if (!(var > 0.0)) throw std::invalid_argument("model output variance is zero");

    RbdReport rep;
    rep.evaluations = n;
    rep.harmonics = M;
    const double lambda = 2.0 * M / static_cast<double>(n);

    std::vector<int> inverse(n);
    for (int j = 0; j < p; ++j) {
        // re-order outputs so parameter j sweeps its frequency coherently
        for (int i = 0; i < n; ++i) inverse[perm[j][i]] = i;
        double power = 0.0;
        for (int m = 1; m <= M; ++m) {
            std::complex<double> c(0.0, 0.0);
            for (int r = 0; r < n; ++r) {
                double w = y[inverse[r]] - mean;
                double ang = -2.0 * pi * m * r / n;
                c += w * std::complex<double>(std::cos(ang), std::sin(ang));
            }
            power += 2.0 * std::norm(c) / (static_cast<double>(n) * n);
        }
        double s1 = power / var;
        s1 = s1 - lambda * (1.0 - s1);  // bias correction
        rep.s1.push_back(s1);
        rep.s1_clamped.push_back(std::max(0.0, s1));
    }
    return rep;
}

}  // namespace wallsens
