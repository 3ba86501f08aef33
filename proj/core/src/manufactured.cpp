#include "ns1d/manufactured.hpp"

#include <cmath>

namespace ns1d {

double ManufacturedSolution::v(double x, double t) const {
    return 1.0 + amplitude * std::sin(M_PI * x / half_width) * std::cos(t);
}

double ManufacturedSolution::u(double x, double t) const {
    return amplitude * std::sin(M_PI * x / half_width) * std::sin(t);
}

double ManufacturedSolution::theta(double x, double t) const {
    return 1.0 + amplitude * std::cos(M_PI * x / half_width) * std::cos(t);
}

State ManufacturedSolution::sample(const Grid& grid, double t) const {
    State s;
    s.t = t;
    s.v.resize(grid.n);
    s.u.resize(grid.n);
    s.theta.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        s.v[i] = v(x, t);
        s.u[i] = u(x, t);
        s.theta[i] = theta(x, t);
    }
    return s;
}

Forcing ManufacturedSolution::forcing(const GasParams& gas, const TransportLaw& law) const {
    const double a = amplitude;
    const double k = M_PI / half_width;
    const double c_v = gas.c_v();
    const double R = gas.R;

    return [a, k, c_v, R, law](double t, const Grid& grid, Field& fv, Field& fu,
                               Field& ftheta) {
        const double ct = std::cos(t);
        const double st = std::sin(t);
        for (int i = 0; i < grid.n; ++i) {
            const double x = grid.x(i);
            const double sk = std::sin(k * x);
            const double ckx = std::cos(k * x);

            const double v = 1.0 + a * sk * ct;
            const double u_x = a * k * ckx * st;
            const double u_xx = -a * k * k * sk * st;
            const double u_t = a * sk * ct;
            const double v_t = -a * sk * st;
            const double v_x = a * k * ckx * ct;
            const double th = 1.0 + a * ckx * ct;
            const double th_t = -a * ckx * st;
            const double th_x = -a * k * sk * ct;
            const double th_xx = -a * k * k * ckx * ct;

            const double mu = law.mu(th);
            const double mu1 = law.mu_d1(th);
            const double ka = law.kappa(th);
            const double ka1 = law.kappa_d1(th);

            const double v2 = v * v;
            const double p_x = R * (th_x / v - th * v_x / v2);
            const double visc_x = (mu1 * th_x * u_x + mu * u_xx) / v - mu * u_x * v_x / v2;
            const double heat_x = (ka1 * th_x * th_x + ka * th_xx) / v - ka * th_x * v_x / v2;

            fv[i] += v_t - u_x;
            fu[i] += u_t + p_x - visc_x;
            // The solver evolves theta directly, so the residual of the
            // temperature equation enters divided by c_v.
            ftheta[i] += th_t - (mu * u_x * u_x / v + heat_x - R * th * u_x / v) / c_v;
        }
    };
}

} // namespace ns1d
