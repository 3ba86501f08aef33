#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "ns1d/diagnostics.hpp"
#include "ns1d/gas.hpp"
#include "ns1d/grid.hpp"

namespace ns1d {

struct RhsOutput {
    Field dv_dt;
    Field du_dt;
    Field dtheta_dt;
};

struct StepControl {
    double cfl_hyperbolic = 0.4;
    double cfl_parabolic = 0.4;
    double dt_max = std::numeric_limits<double>::infinity();
    double positivity_floor = 1e-8;
};

// Optional source term: adds the forcing at time t into the three tendency
// fields (used by the manufactured-solution study).
using Forcing = std::function<void(double t, const Grid& grid, Field& fv, Field& fu,
                                   Field& ftheta)>;

// Method-of-lines tendencies for the Lagrangian system in (v, u, theta):
//   dv/dt     = D u
//   du/dt     = -D p + divflux(mu(theta)/v, u)
//   dtheta/dt = [mu(theta) (D u)^2 / v + divflux(kappa(theta)/v, theta) - p D u] / c_v
// with D the periodic central difference. The constant state (1, 0, 1) maps
// to identically zero tendencies. Throws RegimeExit on positivity loss.
RhsOutput rhs(const State& state, const Grid& grid, const GasParams& gas,
              const TransportLaw& law, double positivity_floor = 0.0);

// Explicit stability bound:
//   dt = min(cfl_h dx / c_max, cfl_p dx^2 / (2 D_max), dt_max)
// with c_max the largest Lagrangian sound-like speed sqrt(gamma R theta)/v
// and D_max the largest of mu(theta)/v and kappa(theta)/(c_v v).
double stable_dt(const State& state, const Grid& grid, const GasParams& gas,
                 const TransportLaw& law, const StepControl& ctl);

// One strong-stability-preserving RK3 step (Shu-Osher form). Positivity is
// re-validated after every stage; on violation the entry state is unchanged
// and RegimeExit carries the offending cell.
State step(const State& state, double dt, const Grid& grid, const GasParams& gas,
           const TransportLaw& law, const StepControl& ctl,
           const Forcing& forcing = nullptr);

using RecordHook = std::function<void(const State&, const DiagnosticsRecord&)>;

struct RunOptions {
    double t_end = 1.0;
    StepControl ctl;
    int record_every = 100; // steps between diagnostics records
    Forcing forcing;        // optional manufactured source term
    // Stop at the first record boundary with t >= halt_at_time (simulated
    // interruption; used together with checkpoint resume).
    double halt_at_time = std::numeric_limits<double>::infinity();
};

struct RunResult {
    State final_state;
    std::vector<DiagnosticsRecord> series;
    long steps = 0;
    bool halted = false;
};

// Advances the state with adaptive stable_dt until t_end, integrating the
// dissipation trapezoid every accepted step and recording diagnostics on the
// configured cadence (always at the first and last step). The optional hook
// sees every record together with a read-only state snapshot.
RunResult run(const State& initial, const RunOptions& opts, const Grid& grid,
              const GasParams& gas, const TransportLaw& law, const RecordHook& hook = {});

// Same as run() but with the accumulator preloaded (checkpoint resume).
RunResult run_resumed(const State& initial, DissipationAccumulator acc,
                      const RunOptions& opts, const Grid& grid, const GasParams& gas,
                      const TransportLaw& law, const RecordHook& hook = {});

} // namespace ns1d
