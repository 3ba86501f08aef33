#pragma once

#include <vector>

#include "ns1d/grid.hpp"

namespace ns1d {

// Second-order central difference with periodic wraparound:
// (f[i+1] - f[i-1]) / (2 dx). Annihilates constants exactly.
Field dx_central(const Field& f, const Grid& grid);

// Flux-form discretization of (coef g_x)_x:
//   [coef_{i+1/2} (g_{i+1} - g_i) - coef_{i-1/2} (g_i - g_{i-1})] / dx^2
// with coef_{i+1/2} the arithmetic mean of the adjacent cell values.
// Telescopes exactly over the periodic grid (discrete sum is zero).
Field div_flux(const Field& coef, const Field& g, const Grid& grid);

// Discrete H^k norm: sqrt of sum over fields and 0 <= j <= k of
// ||D^j f||^2 dx, where D is dx_central applied j-fold. k in {0,..,3}.
double sobolev_norm(const std::vector<Field>& fields, int k, const Grid& grid);

// Max over fields and samples of the absolute value. Throws on empty input.
double sup_norm(const std::vector<Field>& fields);

// Quadrature of a sampled field over the periodic domain (midpoint rule,
// which coincides with the trapezoid rule here): sum f_i dx.
double integrate(const Field& f, const Grid& grid);

} // namespace ns1d
