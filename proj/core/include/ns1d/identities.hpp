#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ns1d/gas.hpp"
#include "ns1d/grid.hpp"

namespace ns1d {

// The expanded differential identities certified by the oracle. Each tag is
// one equality: a compact form evaluated with nested discrete operators
// against its fully expanded chain-rule form with closed-form transport
// derivatives. The third/fourth-order theta expansions are deliberately
// absent to cap the stencil width.
enum class IdentityId {
    i2_1,  // time derivative of mu(theta) v_x / v vs momentum equation
    i2_2,  // temperature equation, conservative vs expanded heat flux
    i2_5,  // (p)_x
    i2_6,  // (p)_xx
    i2_7,  // (p)_xxx
    i2_8,  // (mu v_x / v)_x
    i2_9,  // (mu v_x / v)_xx minus leading term
    i2_10, // (mu u_x^2 / v)_x
    i2_11, // (mu u_x^2 / v)_xx
    i2_12, // (mu u_x / v)_x
    i2_13, // (mu u_x / v)_xx minus leading term
    i2_14, // (mu u_x / v)_xxx minus leading term
    i2_15, // (kappa theta_x / v)_x
    i2_16, // (kappa theta_x / v)_xx minus leading term
};

inline constexpr std::array<IdentityId, 14> all_identities = {
    IdentityId::i2_1,  IdentityId::i2_2,  IdentityId::i2_5,  IdentityId::i2_6,
    IdentityId::i2_7,  IdentityId::i2_8,  IdentityId::i2_9,  IdentityId::i2_10,
    IdentityId::i2_11, IdentityId::i2_12, IdentityId::i2_13, IdentityId::i2_14,
    IdentityId::i2_15, IdentityId::i2_16};

const char* identity_name(IdentityId id);
IdentityId identity_from_name(const std::string& name); // throws on unknown tag

// Seeded truncated Fourier perturbation of the base state (1, 0, 1): mode k
// carries amplitude * c_k / k^2 with c_k in [1/2, 1], so the positivity
// margin is at least 1 - num_modes * amplitude.
struct SmoothFieldSpec {
    std::uint64_t seed = 7;
    int num_modes = 3;
    double amplitude = 0.1;
};

State make_smooth_state(const SmoothFieldSpec& spec, const Grid& grid);

// Pointwise LHS - RHS of the tagged identity. Time derivatives in the first
// two tags come from the solver tendencies, never from time stepping.
// O(dx^2) for smooth fields; identically zero at any constant state.
Field evaluate_identity(IdentityId id, const State& state, const TransportLaw& law,
                        const GasParams& gas, const Grid& grid);

struct OrderReport {
    bool exact = false; // coarsest residual below 1e-13: order undefined
    double order = 0.0; // least-squares slope of log(max residual) vs log(dx)
    std::vector<double> residuals;
};

// Refinement study over at least three levels, each double the last.
OrderReport measure_order(IdentityId id, const SmoothFieldSpec& spec,
                          const std::vector<int>& levels, double half_width = 10.0,
                          const TransportLaw& law = TransportLaw{},
                          const GasParams& gas = GasParams{});

} // namespace ns1d
