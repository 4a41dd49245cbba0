#include "wallsens/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace wallsens {

namespace {

// One implicit trapezoidal march on the refined lattice, restricted to the
// production lattice by injection. Spatial operator: finite volumes with
// harmonic-mean conductivities at half-nodes and ghost-node (central) Robin
// boundaries, second order in space and time. This discretization family is
// deliberately different from the production Dufort-Frankel scheme.
std::vector<double> cn_march(const DimensionlessProblem& pr, const Grid& prod, int rx, int rt) {
    const int cells = (prod.n_nodes - 1) * rx;
    const int n = cells + 1;
    const double dx = 1.0 / cells;
    const double dt = prod.dt / rt;
    const int steps = prod.n_steps * rt;
    const double fo = pr.fourier();

    std::vector<double> k_node(n), c_node(n), k_half(n - 1);
    for (int j = 0; j < n; ++j) {
        double x = dx * j;
        k_node[j] = pr.k_at(x);
        c_node[j] = pr.c_at(x);
    }
    for (int j = 0; j + 1 < n; ++j)
        k_half[j] = 2.0 / (1.0 / k_node[j] + 1.0 / k_node[j + 1]);

    const bool has_source = pr.source().has_value();
    std::vector<double> shape(n, 0.0);
    double amplitude = 1.0;
    if (has_source) {
        if (pr.source()->optics) {
            const auto& o = *pr.source()->optics;
            amplitude = (1.0 - o.transmissivity) * (1.0 - o.reflectivity) /
                        (1.0 - o.reflectivity * o.transmissivity);
        }
        for (int j = 0; j < n; ++j) shape[j] = pr.source()->shape(dx * j);
    }

    // Row j of the spatial operator L u + b(t):
    //   interior: (fo / (c_j dx^2)) [k_{j-1/2} u_{j-1} - (k_{j-1/2}+k_{j+1/2}) u_j + k_{j+1/2} u_{j+1}]
    //   boundaries via ghost nodes eliminated with the central Robin gradient.
    // Assemble I - (dt/2) L on the left, apply I + (dt/2) L on the right.
    std::vector<double> lo(n, 0.0), di(n, 0.0), up(n, 0.0);  // L coefficients
    {
        double f0 = fo / (c_node[0] * dx * dx);
        di[0] = -f0 * (k_half[0] + k_node[0] + 2.0 * dx * pr.biot_left());
        up[0] = f0 * (k_half[0] + k_node[0]);
        for (int j = 1; j + 1 < n; ++j) {
            double f = fo / (c_node[j] * dx * dx);
            lo[j] = f * k_half[j - 1];
            di[j] = -f * (k_half[j - 1] + k_half[j]);
            up[j] = f * k_half[j];
        }
        double fn = fo / (c_node[n - 1] * dx * dx);
        lo[n - 1] = fn * (k_half[n - 2] + k_node[n - 1]);
        di[n - 1] = -fn * (k_half[n - 2] + k_node[n - 1] + 2.0 * dx * pr.biot_right());
    }

    auto boundary_forcing = [&](double t, double& b0, double& bn) {
        b0 = fo / (c_node[0] * dx * dx) * 2.0 * dx *
             (pr.biot_left() * pr.boundary().u_left_air(t) +
              pr.absorptivity() * pr.boundary().g_left_rad(t));
        bn = fo / (c_node[n - 1] * dx * dx) * 2.0 * dx *
             (pr.biot_right() * pr.boundary().u_right_air(t));
    };

    std::vector<double> u(n), rhs(n), a(n), b(n), c(n);
    for (int j = 0; j < n; ++j) u[j] = pr.initial()(dx * j);

    std::vector<double> restricted;
    restricted.reserve(static_cast<std::size_t>(prod.n_steps + 1) * prod.n_nodes);
    auto emit = [&]() {
        for (int j = 0; j < prod.n_nodes; ++j) restricted.push_back(u[j * rx]);
    };
    emit();

    const double h = 0.5 * dt;
    for (int step = 1; step <= steps; ++step) {
        const double t0 = dt * (step - 1), t1 = dt * step;
        double b0a, bna, b0b, bnb;
        boundary_forcing(t0, b0a, bna);
        boundary_forcing(t1, b0b, bnb);

        // rhs = (I + h L) u + h (b(t0) + b(t1)) + h (S(t0) + S(t1))
        rhs[0] = u[0] + h * (di[0] * u[0] + up[0] * u[1]) + h * (b0a + b0b);
        for (int j = 1; j + 1 < n; ++j)
            rhs[j] = u[j] + h * (lo[j] * u[j - 1] + di[j] * u[j] + up[j] * u[j + 1]);
        rhs[n - 1] = u[n - 1] + h * (lo[n - 1] * u[n - 2] + di[n - 1] * u[n - 1]) + h * (bna + bnb);
        if (has_source) {
            double ga = pr.source()->time(t0), gb = pr.source()->time(t1);
            for (int j = 0; j < n; ++j)
                rhs[j] += h * fo / c_node[j] * amplitude * shape[j] * (ga + gb);
        }

        // Thomas solve of (I - h L) u = rhs
        for (int j = 0; j < n; ++j) {
            a[j] = -h * lo[j];
            b[j] = 1.0 - h * di[j];
            c[j] = -h * up[j];
        }
        for (int j = 1; j < n; ++j) {
            double w = a[j] / b[j - 1];
            b[j] -= w * c[j - 1];
            rhs[j] -= w * rhs[j - 1];
        }
        u[n - 1] = rhs[n - 1] / b[n - 1];
        for (int j = n - 2; j >= 0; --j) u[j] = (rhs[j] - c[j] * u[j + 1]) / b[j];

        if (step % rt == 0) emit();
    }
    return restricted;
}

std::vector<double> max_abs_diff_profile(const std::vector<double>& a,
                                         const std::vector<double>& b, const Grid& g) {
    std::vector<double> prof(g.n_nodes, 0.0);
    const int levels = g.n_steps + 1;
    for (int lv = 0; lv < levels; ++lv)
        for (int j = 0; j < g.n_nodes; ++j) {
            double d = a[static_cast<std::size_t>(lv) * g.n_nodes + j] -
                       b[static_cast<std::size_t>(lv) * g.n_nodes + j];
            prof[j] += d * d;
        }
    for (auto& v : prof) v = std::sqrt(v / levels);
    return prof;
}

}  // namespace

ReferenceField reference_solve(const DimensionlessProblem& problem, const Grid& grid,
                               const OracleConfig& config) {
    if (config.refine_x < 4 || config.refine_t < 4)
        throw std::invalid_argument("oracle refinement must be at least 4x in each dimension");
    if (!(config.tolerance > 0.0)) throw std::invalid_argument("oracle tolerance must be > 0");
    problem.require_horizon(grid.t_max);

    ReferenceField field;
    field.grid = grid;
    field.values = cn_march(problem, grid, config.refine_x, config.refine_t);
    if (config.check_self_convergence) {
        std::vector<double> finer = cn_march(problem, grid, 2 * config.refine_x, 2 * config.refine_t);
        auto prof = max_abs_diff_profile(field.values, finer, grid);
        double worst = *std::max_element(prof.begin(), prof.end());
        if (worst > config.tolerance)
            throw OracleFailure("oracle self-convergence check failed: eps2 between refinements = " +
                                std::to_string(worst));
        field.values = std::move(finer);
    }
    return field;
}

std::vector<double> eps2_profile(const FieldStore& numeric, const ReferenceField& reference) {
    const Grid& g = reference.grid;
    if (numeric.n_nodes != g.n_nodes || numeric.n_levels() != g.n_steps + 1)
        throw std::invalid_argument("eps2 needs a fully stored field on the reference lattice");
    std::vector<double> prof(g.n_nodes, 0.0);
    for (int lv = 0; lv <= g.n_steps; ++lv)
        for (int j = 0; j < g.n_nodes; ++j) {
            double d = numeric.at(lv, j) - reference.at(lv, j);
            prof[j] += d * d;
        }
    for (auto& v : prof) v = std::sqrt(v / (g.n_steps + 1));
    return prof;
}

std::vector<double> eps2_profile(const FieldStore& numeric, const FieldStore& reference) {
    if (numeric.n_nodes != reference.n_nodes || numeric.n_levels() != reference.n_levels())
        throw std::invalid_argument("eps2 needs fields on matching lattices");
    std::vector<double> prof(numeric.n_nodes, 0.0);
    for (int lv = 0; lv < numeric.n_levels(); ++lv)
        for (int j = 0; j < numeric.n_nodes; ++j) {
            double d = numeric.at(lv, j) - reference.at(lv, j);
            prof[j] += d * d;
        }
    for (auto& v : prof) v = std::sqrt(v / numeric.n_levels());
    return prof;
}

ReferenceField reference_sensitivity(const DimensionlessProblem& problem, const Grid& grid,
                                     const ParamId& p, std::optional<ParamId> q, int order,
                                     const OracleConfig& config, double dp) {
    problem.require_param(p);
    if (q) problem.require_param(*q);
    if (!(dp > 0.0)) throw std::invalid_argument("parameter step must be > 0");

    OracleConfig inner = config;
    inner.check_self_convergence = false;

    auto solve_at = [&](double dpv, double dqv) {
        DimensionlessProblem shifted = problem.with_param(p, problem.param_value(p) + dpv);
        if (q) shifted = shifted.with_param(*q, shifted.param_value(*q) + dqv);
        return reference_solve(shifted, grid, inner).values;
    };

    // guard the base configuration once
    reference_solve(problem, grid, config);

    std::vector<double> acc(static_cast<std::size_t>(grid.n_steps + 1) * grid.n_nodes, 0.0);
    auto add = [&](const std::vector<double>& f, double w) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * f[i];
    };

    // Richardson combination (4 D(dp/2) - D(dp)) / 3 of central stencils.
    if (order == 1) {
        add(solve_at(+dp, 0), -1.0 / (6.0 * dp));
        add(solve_at(-dp, 0), +1.0 / (6.0 * dp));
        add(solve_at(+0.5 * dp, 0), +4.0 / (3.0 * dp));
        add(solve_at(-0.5 * dp, 0), -4.0 / (3.0 * dp));
    } else if (order == 2 && !q) {
        const double inv = 1.0 / (dp * dp);
        add(solve_at(+dp, 0), -inv / 3.0);
        add(solve_at(-dp, 0), -inv / 3.0);
        add(solve_at(+0.5 * dp, 0), 16.0 * inv / 3.0);
        add(solve_at(-0.5 * dp, 0), 16.0 * inv / 3.0);
        add(solve_at(0, 0), -10.0 * inv);
    } else if (order == 2 && q) {
        const double inv = 1.0 / (4.0 * dp * dp);
        auto cross = [&](double s, double w) {
            add(solve_at(+s, +s), +w);
            add(solve_at(+s, -s), -w);
            add(solve_at(-s, +s), -w);
            add(solve_at(-s, -s), +w);
        };
        cross(dp, -inv / 3.0);
        cross(0.5 * dp, 16.0 * inv / 3.0);
    } else {
        throw std::invalid_argument("reference sensitivity order must be 1 or 2");
    }

    ReferenceField field;
    field.grid = grid;
    field.values = std::move(acc);
    return field;
}

}  // namespace wallsens
