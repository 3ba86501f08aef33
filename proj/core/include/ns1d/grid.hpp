#pragma once

#include <vector>

namespace ns1d {

using Field = std::vector<double>;

// Uniform periodic Lagrangian mesh on [-L, L): n cells, x_i = -L + i dx,
// dx = 2L/n. dx is always derived from n and L, never stored separately.
struct Grid {
    int n = 0;
    double half_width = 0.0;

    double dx() const { return 2.0 * half_width / n; }
    double length() const { return 2.0 * half_width; }
    double x(int i) const { return -half_width + i * dx(); }

    // Throws ConfigError unless n is even and >= 16 and L > 0.
    static Grid make(int n, double half_width);
};

// The three primary fields sampled on the grid at one time instant.
struct State {
    Field v;
    Field u;
    Field theta;
    double t = 0.0;

    static State uniform(const Grid& grid, double v0 = 1.0, double u0 = 0.0,
                         double theta0 = 1.0);
    std::size_t size() const { return v.size(); }
};

} // namespace ns1d
