#include "ns1d/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ns1d/errors.hpp"

namespace ns1d {

Grid Grid::make(int n, double half_width) {
    if (n < 16 || n % 2 != 0) {
        throw ConfigError("n: must be even and >= 16, got " + std::to_string(n));
    }
    if (!(half_width > 0.0)) {
        throw ConfigError("L: must be > 0, got " + std::to_string(half_width));
    }
    return Grid{n, half_width};
}

State State::uniform(const Grid& grid, double v0, double u0, double theta0) {
    State s;
    s.v.assign(grid.n, v0);
    s.u.assign(grid.n, u0);
    s.theta.assign(grid.n, theta0);
    return s;
}

namespace {

void require_length(const Field& f, const Grid& grid, const char* name) {
    if (f.size() != static_cast<std::size_t>(grid.n)) {
        throw std::invalid_argument(std::string(name) + ": length " +
                                    std::to_string(f.size()) + " does not match grid n = " +
                                    std::to_string(grid.n));
    }
}

} // namespace

Field dx_central(const Field& f, const Grid& grid) {
    require_length(f, grid, "f");
    const int n = grid.n;
    const double inv2dx = 1.0 / (2.0 * grid.dx());
    Field out(n);
    out[0] = (f[1] - f[n - 1]) * inv2dx;
    for (int i = 1; i < n - 1; ++i) {
        out[i] = (f[i + 1] - f[i - 1]) * inv2dx;
    }
    out[n - 1] = (f[0] - f[n - 2]) * inv2dx;
    return out;
}

Field div_flux(const Field& coef, const Field& g, const Grid& grid) {
    require_length(coef, grid, "coef");
    require_length(g, grid, "g");
    const int n = grid.n;
    const double invdx2 = 1.0 / (grid.dx() * grid.dx());
    Field out(n);
    for (int i = 0; i < n; ++i) {
        const int ip = (i + 1 == n) ? 0 : i + 1;
        const int im = (i == 0) ? n - 1 : i - 1;
        const double c_plus = 0.5 * (coef[i] + coef[ip]);
        const double c_minus = 0.5 * (coef[im] + coef[i]);
        out[i] = (c_plus * (g[ip] - g[i]) - c_minus * (g[i] - g[im])) * invdx2;
    }
    return out;
}

double sobolev_norm(const std::vector<Field>& fields, int k, const Grid& grid) {
    if (k < 0 || k > 3) {
        throw std::invalid_argument("sobolev_norm: order k must be in {0,1,2,3}, got " +
                                    std::to_string(k));
    }
    const double dx = grid.dx();
    double total = 0.0;
    for (const Field& f : fields) {
        require_length(f, grid, "field");
        Field d = f;
        for (int j = 0; j <= k; ++j) {
            double sq = 0.0;
            for (double x : d) {
                sq += x * x;
            }
            total += sq * dx;
            if (j < k) {
                d = dx_central(d, grid);
            }
        }
    }
    return std::sqrt(total);
}

double sup_norm(const std::vector<Field>& fields) {
    if (fields.empty()) {
        throw std::invalid_argument("sup_norm: empty field list");
    }
    double m = 0.0;
    bool any = false;
    for (const Field& f : fields) {
        for (double x : f) {
            any = true;
            m = std::max(m, std::abs(x));
        }
    }
    if (!any) {
        throw std::invalid_argument("sup_norm: all fields empty");
    }
    return m;
}

double integrate(const Field& f, const Grid& grid) {
    require_length(f, grid, "f");
    double sum = 0.0;
    for (double x : f) {
        sum += x;
    }
    return sum * grid.dx();
}

} // namespace ns1d
