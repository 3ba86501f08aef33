#pragma once

#include <cstdint>
#include <string>

#include "ns1d/gas.hpp"
#include "ns1d/grid.hpp"

namespace ns1d {

// Initial-condition families, all specified in (v0, u0, s0) variables and
// compactly supported on [-w, w] with a C^2 cutoff. The temperature field is
// obtained through the entropy-temperature conversion, so the same data can
// be probed across gamma.
enum class IcFamily {
    sine_bump,             // odd velocity bump, v0 = 1, s0 = 0
    gaussian_entropy_bump, // odd Gaussian-derivative entropy bump, v0 = 1, u0 = 0
    custom,                // seeded smooth perturbation of all three fields
};

const char* ic_family_name(IcFamily family);
IcFamily ic_family_from_name(const std::string& name); // throws on unknown family

struct InitialData {
    IcFamily family = IcFamily::sine_bump;
    double amplitude = 0.1;
    double support = 5.0; // half-width w of the perturbation, must be < L/2
    std::uint64_t seed = 42;
};

struct BuiltInitialState {
    State state;

    // Realized extremes of the built data.
    double v0_min = 1.0, v0_max = 1.0;
    double theta0_min = 1.0, theta0_max = 1.0;

    // Hypothesis-style windows the solution is expected to stay inside.
    // For v the local-existence margins [min/2, 2 max]; for theta the
    // doubled log-excursion window exp(-+2 max|ln theta0|), which shrinks
    // with gamma - 1 for entropy data.
    double v_lo = 0.5, v_hi = 2.0;
    double theta_lo = 1.0, theta_hi = 1.0;

    double scaled_theta_norm = 0.0; // ||(theta0 - 1)/sqrt(gamma-1)||_3
    bool flat = false;              // zero amplitude: exact equilibrium
};

// Samples (v0, u0, s0), converts to theta0, validates positivity and the
// support constraints (w < L/2 and w >= 8 dx), and reports the windows.
BuiltInitialState build_initial_state(const InitialData& ic, const Grid& grid,
                                      const GasParams& gas);

} // namespace ns1d
