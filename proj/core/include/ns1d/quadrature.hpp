#pragma once

#include <functional>

namespace ns1d {

// Adaptive bisection with a fixed-order Gauss-Legendre rule per panel.
// A panel is accepted when the 7-point value and the sum of the two
// half-panel values agree to the panel's share of the absolute tolerance.
// Throws std::runtime_error if the recursion depth limit is hit before the
// tolerance is met.
double adaptive_gauss(const std::function<double(double)>& f, double a, double b,
                      double abs_tol);

} // namespace ns1d
