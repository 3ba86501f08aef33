#pragma once

#include "ns1d/gas.hpp"
#include "ns1d/grid.hpp"
#include "ns1d/solver.hpp"

namespace ns1d {

// Space-time periodic manufactured fields with k = pi / L:
//   v*(x,t)     = 1 + a sin(kx) cos(t)
//   u*(x,t)     =     a sin(kx) sin(t)
//   theta*(x,t) = 1 + a cos(kx) cos(t)
// The forcing is the exact residual of the governing system on these fields,
// written out by the chain rule (see forcing() for the expanded terms), so a
// forced run must reproduce them up to discretization error.
struct ManufacturedSolution {
    double amplitude = 0.1;
    double half_width = 20.0;

    double v(double x, double t) const;
    double u(double x, double t) const;
    double theta(double x, double t) const;

    State sample(const Grid& grid, double t) const;

    // Source term F = (F_v, F_u, F_theta), phrased in the solver's tendency
    // convention (F_theta belongs to the evolved theta, not to c_v theta):
    //   F_v     = v*_t - u*_x
    //   F_u     = u*_t + p*_x - (mu(theta*) u*_x / v*)_x
    //   F_theta = theta*_t - [mu(theta*) u*_x^2 / v*
    //             + (kappa(theta*) theta*_x / v*)_x - p* u*_x] / c_v
    // where the flux derivatives are expanded as
    //   (mu u_x / v)_x       = (mu' theta_x u_x + mu u_xx)/v - mu u_x v_x / v^2
    //   (kappa theta_x / v)_x = (kappa' theta_x^2 + kappa theta_xx)/v
    //                           - kappa theta_x v_x / v^2
    // and every field derivative is analytic.
    Forcing forcing(const GasParams& gas, const TransportLaw& law) const;
};

} // namespace ns1d
