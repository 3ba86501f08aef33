#pragma once

#include <cstdint>
#include <string>

#include "ns1d/gas.hpp"
#include "ns1d/grid.hpp"

namespace ns1d {

// Binary checkpoint, all little-endian:
//   magic "NS1D", u32 version = 1, u64 config hash,
//   f64 t, u64 n, f64 L, f64 gamma,
//   transport block: u8 kind (0 = power_law, 1 = constant), 4 x f64
//     (mu0, kappa0, beta_mu, beta_kappa),
//   then 3 n f64: v, u, theta.
// Round trip is bit-exact.
struct LoadedCheckpoint {
    std::uint64_t config_hash = 0;
    std::uint64_t n = 0;
    double half_width = 0.0;
    double gamma = 0.0;
    TransportLaw law;
    State state;
};

void save_checkpoint(const std::string& path, std::uint64_t config_hash, const State& state,
                     const Grid& grid, const GasParams& gas, const TransportLaw& law);

LoadedCheckpoint load_checkpoint(const std::string& path);

} // namespace ns1d
