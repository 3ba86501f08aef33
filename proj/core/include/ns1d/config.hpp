#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ns1d/gas.hpp"
#include "ns1d/grid.hpp"
#include "ns1d/initial_data.hpp"
#include "ns1d/solver.hpp"

namespace ns1d {

// Flat sectioned key = value configuration. Unknown sections or keys are hard
// errors; every numeric constraint of the owning type is re-validated at
// parse time with a message naming the key and the violated bound.
//
// Grammar: lines are blank, '#'-comments, '[section]' headers, or
// 'key = value'. No continuation lines. Lists are comma separated.
struct RunConfig {
    // [gas]
    double gamma = 1.4;
    double R = 1.0;
    double A = 1.0;

    // [transport] - either explicit exponents or 'alpha' (kinetic scaling),
    // never both. kind=constant forces both exponents to zero.
    TransportKind kind = TransportKind::power_law;
    double mu0 = 1.0;
    double kappa0 = 1.0;
    double beta_mu = 1.0;
    double beta_kappa = 1.0;

    // [grid]
    int n = 512;
    double L = 20.0;

    // [ic]
    IcFamily family = IcFamily::sine_bump;
    double amplitude = 0.1;
    double support = 5.0;
    std::uint64_t seed = 42;

    // [control]
    double cfl_hyperbolic = 0.4;
    double cfl_parabolic = 0.4;
    double dt_max = std::numeric_limits<double>::infinity();
    double positivity_floor = 1e-8;
    double t_end = 2.0;
    int record_every = 100;

    // [output]
    std::string dir = "out";
    bool emit_svg = false;

    // [experiment]
    std::vector<int> levels = {128, 256, 512};
    std::vector<double> gamma_list = {1.05, 1.1, 1.4};

    GasParams gas() const { return GasParams{gamma, R, A}; }
    TransportLaw law() const;
    Grid grid() const { return Grid::make(n, L); }
    InitialData ic() const { return InitialData{family, amplitude, support, seed}; }
    StepControl ctl() const {
        return StepControl{cfl_hyperbolic, cfl_parabolic, dt_max, positivity_floor};
    }
};

// Throws ConfigError with the offending key on any problem.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Every key echoed with its effective (possibly defaulted) value, in a fixed
// order with 17-significant-digit floats. This is both the run-header echo
// and the byte stream the config hash covers.
std::string canonical_config_text(const RunConfig& cfg);

// FNV-1a 64 over the canonical text.
std::uint64_t config_hash(const RunConfig& cfg);

// Locale-independent float formatting with 17 significant digits
// (round-trips exactly). Used for every persisted file and for hashing.
std::string format_double(double value);

// Shortest representation that still round-trips; for human-facing output.
std::string format_double_short(double value);

double parse_double(const std::string& text, const std::string& key);

} // namespace ns1d
