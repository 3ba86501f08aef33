#include "ns1d/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ns1d/errors.hpp"
#include "ns1d/operators.hpp"

namespace ns1d {

namespace {

void validate_positive(const State& state, double floor, double report_time) {
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (!(state.v[i] > floor) || !std::isfinite(state.v[i])) {
            throw RegimeExit(report_time, i, "v", state.v[i]);
        }
        if (!(state.theta[i] > floor) || !std::isfinite(state.theta[i])) {
            throw RegimeExit(report_time, i, "theta", state.theta[i]);
        }
    }
}

// c theta^b with the common exponents short-circuited.
inline double pow_law(double c, double b, double theta) {
    if (b == 0.0) return c;
    if (b == 1.0) return c * theta;
    if (b == 0.5) return c * std::sqrt(theta);
    return c * std::pow(theta, b);
}

void validate_control(const StepControl& ctl) {
    if (!(ctl.cfl_hyperbolic > 0.0 && ctl.cfl_hyperbolic <= 1.0) ||
        !(ctl.cfl_parabolic > 0.0 && ctl.cfl_parabolic <= 1.0)) {
        throw std::invalid_argument("StepControl: safety factors must lie in (0, 1]");
    }
    if (!(ctl.positivity_floor > 0.0) || !(ctl.dt_max > 0.0)) {
        throw std::invalid_argument("StepControl: positivity floor and dt_max must be positive");
    }
}

} // namespace

RhsOutput rhs(const State& state, const Grid& grid, const GasParams& gas,
              const TransportLaw& law, double positivity_floor) {
    validate_positive(state, positivity_floor, state.t);
    const int n = grid.n;
    const double c_v = gas.c_v();

    Field p(n), visc_coef(n), heat_coef(n);
    for (int i = 0; i < n; ++i) {
        const double v = state.v[i];
        const double th = state.theta[i];
        p[i] = gas.R * th / v;
        visc_coef[i] = pow_law(law.mu0, law.beta_mu, th) / v;
        heat_coef[i] = pow_law(law.kappa0, law.beta_kappa, th) / v;
    }

    RhsOutput out;
    out.dv_dt = dx_central(state.u, grid);
    const Field& ux = out.dv_dt;

    out.du_dt = div_flux(visc_coef, state.u, grid);
    const Field px = dx_central(p, grid);
    for (int i = 0; i < n; ++i) {
        out.du_dt[i] -= px[i];
    }

    out.dtheta_dt = div_flux(heat_coef, state.theta, grid);
    for (int i = 0; i < n; ++i) {
        const double heating = visc_coef[i] * ux[i] * ux[i]; // mu(theta) u_x^2 / v
        out.dtheta_dt[i] = (heating + out.dtheta_dt[i] - p[i] * ux[i]) / c_v;
    }
    return out;
}

double stable_dt(const State& state, const Grid& grid, const GasParams& gas,
                 const TransportLaw& law, const StepControl& ctl) {
    validate_control(ctl);
    validate_positive(state, ctl.positivity_floor, state.t);
    const double c_v = gas.c_v();
    double c_max = 0.0;
    double d_max = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const double v = state.v[i];
        const double th = state.theta[i];
        c_max = std::max(c_max, std::sqrt(gas.gamma * gas.R * th) / v);
        const double d_visc = pow_law(law.mu0, law.beta_mu, th) / v;
        const double d_heat = pow_law(law.kappa0, law.beta_kappa, th) / (c_v * v);
        d_max = std::max(d_max, std::max(d_visc, d_heat));
    }
    const double dx = grid.dx();
    const double dt_hyp = ctl.cfl_hyperbolic * dx / c_max;
    const double dt_par = ctl.cfl_parabolic * dx * dx / (2.0 * d_max);
    return std::min({dt_hyp, dt_par, ctl.dt_max});
}

namespace {

State euler_stage(const State& base, const RhsOutput& tendency, double dt, double new_t) {
    State out;
    const std::size_t n = base.size();
    out.v.resize(n);
    out.u.resize(n);
    out.theta.resize(n);
    out.t = new_t;
    for (std::size_t i = 0; i < n; ++i) {
        out.v[i] = base.v[i] + dt * tendency.dv_dt[i];
        out.u[i] = base.u[i] + dt * tendency.du_dt[i];
        out.theta[i] = base.theta[i] + dt * tendency.dtheta_dt[i];
    }
    return out;
}

void blend(State& s, double w_old, const State& old_state, double w_new) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        s.v[i] = w_old * old_state.v[i] + w_new * s.v[i];
        s.u[i] = w_old * old_state.u[i] + w_new * s.u[i];
        s.theta[i] = w_old * old_state.theta[i] + w_new * s.theta[i];
    }
}

} // namespace

State step(const State& state, double dt, const Grid& grid, const GasParams& gas,
           const TransportLaw& law, const StepControl& ctl, const Forcing& forcing) {
    validate_control(ctl);
    const double floor = ctl.positivity_floor;

    auto tendency = [&](const State& s, double stage_t) {
        RhsOutput out = rhs(s, grid, gas, law, floor);
        if (forcing) {
            forcing(stage_t, grid, out.dv_dt, out.du_dt, out.dtheta_dt);
        }
        return out;
    };

    // Shu-Osher SSP-RK3 stages at times t, t + dt, t + dt/2.
    const double t0 = state.t;
    State s1 = euler_stage(state, tendency(state, t0), dt, t0 + dt);
    validate_positive(s1, floor, t0);

    State s2 = euler_stage(s1, tendency(s1, t0 + dt), dt, t0 + dt);
    blend(s2, 0.75, state, 0.25);
    s2.t = t0 + 0.5 * dt;
    validate_positive(s2, floor, t0);

    State out = euler_stage(s2, tendency(s2, t0 + 0.5 * dt), dt, t0 + dt);
    blend(out, 1.0 / 3.0, state, 2.0 / 3.0);
    out.t = t0 + dt;
    validate_positive(out, floor, t0);
    return out;
}

namespace {

RunResult run_loop(State state, DissipationAccumulator acc, const RunOptions& opts,
                   const Grid& grid, const GasParams& gas, const TransportLaw& law,
                   const RecordHook& hook, bool record_initial) {
    RunResult result;
    result.series.reserve(64);

    auto emit = [&](const State& s) {
        DiagnosticsRecord rec = record(s, grid, gas, law, acc);
        result.series.push_back(rec);
        if (hook) {
            hook(s, rec);
        }
    };

    if (record_initial) {
        emit(state);
    }

    const double t_end = opts.t_end;
    const double time_eps = 1e-12 * (1.0 + std::abs(t_end));
    while (t_end - state.t > time_eps) {
        double dt = stable_dt(state, grid, gas, law, opts.ctl);
        bool final_step = false;
        if (dt >= t_end - state.t) {
            dt = t_end - state.t;
            final_step = true;
        }
        state = step(state, dt, grid, gas, law, opts.ctl, opts.forcing);
        if (final_step) {
            state.t = t_end;
        }
        for (const Field* f : {&state.v, &state.u, &state.theta}) {
            for (double x : *f) {
                if (!std::isfinite(x)) {
                    throw std::runtime_error("run: non-finite field at t = " +
                                             std::to_string(state.t));
                }
            }
        }
        acc.advance(dissipation_rate(state, grid, gas, law), dt);
        ++result.steps;

        const bool at_record = (result.steps % opts.record_every == 0) || final_step;
        if (at_record) {
            emit(state);
            if (!final_step && state.t >= opts.halt_at_time) {
                result.halted = true;
                break;
            }
        }
    }

    result.final_state = std::move(state);
    return result;
}

} // namespace

RunResult run(const State& initial, const RunOptions& opts, const Grid& grid,
              const GasParams& gas, const TransportLaw& law, const RecordHook& hook) {
    if (opts.t_end < initial.t) {
        throw std::invalid_argument("run: t_end precedes the initial time");
    }
    if (opts.record_every < 1) {
        throw std::invalid_argument("run: record_every must be >= 1");
    }
    DissipationAccumulator acc = DissipationAccumulator::from_initial(initial, grid, gas, law);
    return run_loop(initial, acc, opts, grid, gas, law, hook, /*record_initial=*/true);
}

RunResult run_resumed(const State& initial, DissipationAccumulator acc,
                      const RunOptions& opts, const Grid& grid, const GasParams& gas,
                      const TransportLaw& law, const RecordHook& hook) {
    if (opts.t_end < initial.t) {
        throw std::invalid_argument("run: t_end precedes the resume time");
    }
    if (opts.record_every < 1) {
        throw std::invalid_argument("run: record_every must be >= 1");
    }
    return run_loop(initial, std::move(acc), opts, grid, gas, law, hook,
                    /*record_initial=*/false);
}

} // namespace ns1d
