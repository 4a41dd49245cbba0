#pragma once

#include <cmath>
#include <stdexcept>

namespace wallsens {

// Uniform space-time lattice on [0, 1] x [0, t_max]. dx must divide 1 and dt
// must divide t_max (to round-off).
struct Grid {
    double dx = 0.0;
    double dt = 0.0;
    double t_max = 0.0;
    int n_nodes = 0;  // nodes 0 .. n_nodes-1 at x_j = j dx
    int n_steps = 0;  // levels 0 .. n_steps at t_n = n dt

    Grid() = default;
    Grid(double dx_, double dt_, double t_max_) : dx(dx_), dt(dt_), t_max(t_max_) {
        if (!(dx > 0.0) || !(dt > 0.0) || !(t_max > 0.0))
            throw std::invalid_argument("grid steps and horizon must be > 0");
        double nx = 1.0 / dx;
        double nt = t_max / dt;
        if (std::abs(nx - std::round(nx)) > 1e-6)
            throw std::invalid_argument("dx must divide the unit interval");
        if (std::abs(nt - std::round(nt)) > 1e-6)
            throw std::invalid_argument("dt must divide the horizon");
        n_nodes = static_cast<int>(std::round(nx)) + 1;
        n_steps = static_cast<int>(std::round(nt));
        if (n_nodes < 3) throw std::invalid_argument("grid needs at least 3 nodes");
    }

    double x(int j) const { return static_cast<double>(j) * dx; }
    double t(int n) const { return static_cast<double>(n) * dt; }
};

}  // namespace wallsens
