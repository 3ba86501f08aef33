#include <cmath>
#include <vector>

#include <doctest.h>

#include "ns1d/errors.hpp"
#include "ns1d/identities.hpp"
#include "ns1d/initial_data.hpp"
#include "ns1d/operators.hpp"
#include "ns1d/solver.hpp"

using namespace ns1d;

namespace {

double max_abs(const Field& f) {
    double m = 0.0;
    for (double x : f) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double sup_dev(const State& s) {
    double m = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        m = std::max({m, std::abs(s.v[i] - 1.0), std::abs(s.u[i]), std::abs(s.theta[i] - 1.0)});
    }
    return m;
}

} // namespace

TEST_CASE("equilibrium is an exact fixed point of rhs") {
    const Grid grid = Grid::make(128, 10.0);
    const State eq = State::uniform(grid);
    const RhsOutput out = rhs(eq, grid, GasParams{}, TransportLaw{});
    CHECK(max_abs(out.dv_dt) == 0.0);
    CHECK(max_abs(out.du_dt) == 0.0);
    CHECK(max_abs(out.dtheta_dt) == 0.0);
}

TEST_CASE("dv_dt reproduces the analytic velocity derivative") {
    const double L = 10.0;
    const double eps = 0.01;
    std::vector<double> errs, dxs;
    for (int n : {128, 256}) {
        const Grid grid = Grid::make(n, L);
        State s = State::uniform(grid);
        for (int i = 0; i < n; ++i) {
            s.u[i] = eps * std::sin(M_PI * grid.x(i) / L);
        }
        const RhsOutput out = rhs(s, grid, GasParams{}, TransportLaw{});
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            err = std::max(err, std::abs(out.dv_dt[i] -
                                         eps * (M_PI / L) * std::cos(M_PI * grid.x(i) / L)));
        }
        errs.push_back(err);
        dxs.push_back(grid.dx());
    }
    const double order = std::log(errs[0] / errs[1]) / std::log(dxs[0] / dxs[1]);
    CHECK(order >= 1.9);
}

TEST_CASE("rhs telescoping: tendencies conserve mass and momentum") {
    const Grid grid = Grid::make(256, 10.0);
    SmoothFieldSpec spec;
    spec.seed = 17;
    const State s = make_smooth_state(spec, grid);
    const RhsOutput out = rhs(s, grid, GasParams{}, TransportLaw{});
    CHECK(std::abs(integrate(out.dv_dt, grid)) <= 1e-12);
    CHECK(std::abs(integrate(out.du_dt, grid)) <= 1e-12);
}

TEST_CASE("rhs is translation equivariant") {
    const Grid grid = Grid::make(128, 10.0);
    SmoothFieldSpec spec;
    spec.seed = 23;
    const State s = make_smooth_state(spec, grid);
    const int offset = 41;
    State shifted;
    shifted.v.resize(grid.n);
    shifted.u.resize(grid.n);
    shifted.theta.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        shifted.v[i] = s.v[(i + offset) % grid.n];
        shifted.u[i] = s.u[(i + offset) % grid.n];
        shifted.theta[i] = s.theta[(i + offset) % grid.n];
    }
    const RhsOutput a = rhs(s, grid, GasParams{}, TransportLaw{});
    const RhsOutput b = rhs(shifted, grid, GasParams{}, TransportLaw{});
    for (int i = 0; i < grid.n; ++i) {
        CHECK(b.du_dt[i] == a.du_dt[(i + offset) % grid.n]);
        CHECK(b.dtheta_dt[i] == a.dtheta_dt[(i + offset) % grid.n]);
    }
}

TEST_CASE("stable_dt formula") {
    const StepControl ctl;
    SUBCASE("pinned equilibrium value") {
        const Grid grid = Grid::make(256, 10.0);
        const State eq = State::uniform(grid);
        const GasParams gas{5.0 / 3.0, 1.0, 1.0};
        const double dt = stable_dt(eq, grid, gas, TransportLaw{}, ctl);
        // Parabolic candidate binds: 0.4 dx^2 / 2 with D_max = 1, dx = 5/64.
        CHECK(dt == doctest::Approx(0.001220703125).epsilon(1e-15));
    }
    SUBCASE("doubling n divides the parabolic candidate by four") {
        const GasParams gas{5.0 / 3.0, 1.0, 1.0};
        const Grid g1 = Grid::make(256, 10.0);
        const Grid g2 = Grid::make(512, 10.0);
        const double dt1 = stable_dt(State::uniform(g1), g1, gas, TransportLaw{}, ctl);
        const double dt2 = stable_dt(State::uniform(g2), g2, gas, TransportLaw{}, ctl);
        CHECK(dt1 / dt2 == doctest::Approx(4.0).epsilon(1e-12));
    }
    SUBCASE("dt_max caps the result") {
        StepControl capped = ctl;
        capped.dt_max = 1e-6;
        const Grid grid = Grid::make(256, 10.0);
        CHECK(stable_dt(State::uniform(grid), grid, GasParams{}, TransportLaw{}, capped) ==
              1e-6);
    }
    SUBCASE("control invariants are enforced") {
        const Grid grid = Grid::make(64, 10.0);
        StepControl bad = ctl;
        bad.cfl_parabolic = 1.5;
        CHECK_THROWS_AS(stable_dt(State::uniform(grid), grid, GasParams{}, TransportLaw{}, bad),
                        std::invalid_argument);
        bad = ctl;
        bad.positivity_floor = 0.0;
        CHECK_THROWS_AS(step(State::uniform(grid), 1e-4, grid, GasParams{}, TransportLaw{}, bad),
                        std::invalid_argument);
    }
}

TEST_CASE("equilibrium survives ten thousand steps bit-stably") {
    const Grid grid = Grid::make(256, 10.0);
    const GasParams gas;
    const TransportLaw law;
    const StepControl ctl;
    State s = State::uniform(grid);
    const double dt = stable_dt(s, grid, gas, law, ctl);
    for (int k = 0; k < 10000; ++k) {
        s = step(s, dt, grid, gas, law, ctl);
    }
    CHECK(sup_dev(s) <= 1e-12);
}

TEST_CASE("step matches a hand-rolled stage combination") {
    // v perturbation with u = 0, theta = 1: verify the Shu-Osher weights by
    // recomputing the three stages independently.
    const Grid grid = Grid::make(64, 10.0);
    const GasParams gas;
    const TransportLaw law;
    const StepControl ctl;
    State s = State::uniform(grid);
    for (int i = 0; i < grid.n; ++i) {
        s.v[i] = 1.0 + 0.05 * std::sin(M_PI * grid.x(i) / 10.0);
    }
    const double dt = 1e-3;

    auto euler = [&](const State& base, double w) {
        const RhsOutput f = rhs(base, grid, gas, law);
        State out = base;
        for (int i = 0; i < grid.n; ++i) {
            out.v[i] = base.v[i] + w * f.dv_dt[i];
            out.u[i] = base.u[i] + w * f.du_dt[i];
            out.theta[i] = base.theta[i] + w * f.dtheta_dt[i];
        }
        return out;
    };
    const State s1 = euler(s, dt);
    State s2 = euler(s1, dt);
    for (int i = 0; i < grid.n; ++i) {
        s2.v[i] = 0.75 * s.v[i] + 0.25 * s2.v[i];
        s2.u[i] = 0.75 * s.u[i] + 0.25 * s2.u[i];
        s2.theta[i] = 0.75 * s.theta[i] + 0.25 * s2.theta[i];
    }
    State expect = euler(s2, dt);
    for (int i = 0; i < grid.n; ++i) {
        expect.v[i] = s.v[i] / 3.0 + 2.0 / 3.0 * expect.v[i];
        expect.u[i] = s.u[i] / 3.0 + 2.0 / 3.0 * expect.u[i];
        expect.theta[i] = s.theta[i] / 3.0 + 2.0 / 3.0 * expect.theta[i];
    }

    const State got = step(s, dt, grid, gas, law, ctl);
    for (int i = 0; i < grid.n; ++i) {
        CHECK(got.v[i] == doctest::Approx(expect.v[i]).epsilon(1e-15));
        CHECK(got.u[i] == doctest::Approx(expect.u[i]).epsilon(1e-15));
        CHECK(got.theta[i] == doctest::Approx(expect.theta[i]).epsilon(1e-15));
    }
    // First-stage consistency: with u = 0 the velocity update is -D(p) dt.
    Field p(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        p[i] = gas.R * s.theta[i] / s.v[i];
    }
    const Field px = dx_central(p, grid);
    for (int i = 0; i < grid.n; ++i) {
        CHECK(s1.u[i] == doctest::Approx(-dt * px[i]).epsilon(1e-14));
    }
}

TEST_CASE("local error scales like dt^4 (Richardson)") {
    const Grid grid = Grid::make(128, 10.0);
    const GasParams gas;
    const TransportLaw law;
    const StepControl ctl;
    SmoothFieldSpec spec;
    spec.seed = 31;
    spec.amplitude = 0.05;
    const State s = make_smooth_state(spec, grid);

    auto defect = [&](double dt) {
        const State full = step(s, dt, grid, gas, law, ctl);
        const State half = step(step(s, dt / 2, grid, gas, law, ctl), dt / 2, grid, gas, law, ctl);
        double m = 0.0;
        for (int i = 0; i < grid.n; ++i) {
            m = std::max({m, std::abs(full.v[i] - half.v[i]), std::abs(full.u[i] - half.u[i]),
                          std::abs(full.theta[i] - half.theta[i])});
        }
        return m;
    };
    const double dt0 = 0.5 * stable_dt(s, grid, gas, law, ctl);
    const double r = defect(dt0) / defect(dt0 / 2);
    CHECK(r >= 10.0);
    CHECK(r <= 22.0);
}

TEST_CASE("positivity loss raises a regime exit carrying the cell") {
    const Grid grid = Grid::make(64, 10.0);
    State s = State::uniform(grid);
    s.v[17] = 1e-9; // below the default floor
    StepControl ctl;
    try {
        (void)rhs(s, grid, GasParams{}, TransportLaw{}, ctl.positivity_floor);
        FAIL("expected RegimeExit");
    } catch (const RegimeExit& e) {
        CHECK(e.index == 17);
        CHECK(e.field == "v");
        CHECK(e.value == doctest::Approx(1e-9));
    }
}

TEST_CASE("run with t_end equal to the initial time is the identity") {
    const Grid grid = Grid::make(64, 10.0);
    SmoothFieldSpec spec;
    spec.seed = 2;
    const State s = make_smooth_state(spec, grid);
    RunOptions opts;
    opts.t_end = 0.0;
    const RunResult result = run(s, opts, grid, GasParams{}, TransportLaw{});
    CHECK(result.steps == 0);
    CHECK(result.final_state.v == s.v);
    CHECK(result.series.size() == 1);
    CHECK(result.series.front().balance_residual == 0.0);
}

TEST_CASE("run conserves mass and momentum to roundoff") {
    const Grid grid = Grid::make(128, 10.0);
    const GasParams gas{1.4, 1.0, 1.0};
    InitialData ic;
    ic.family = IcFamily::sine_bump;
    ic.amplitude = 0.1;
    ic.support = 4.0;
    const BuiltInitialState built = build_initial_state(ic, grid, gas);
    RunOptions opts;
    opts.t_end = 1.0;
    opts.record_every = 20;
    const RunResult result = run(built.state, opts, grid, gas, TransportLaw{});
    const double mass0 = result.series.front().mass;
    for (const DiagnosticsRecord& r : result.series) {
        CHECK(std::abs(r.mass - mass0) / mass0 <= 1e-12);
        CHECK(std::abs(r.momentum - result.series.front().momentum) <= 1e-12 * grid.length());
    }
}

TEST_CASE("perturbations decay and refinements agree") {
    const double L = 10.0;
    const GasParams gas{1.05, 1.0, 1.0};
    InitialData ic;
    ic.family = IcFamily::sine_bump;
    ic.amplitude = 0.05;
    ic.support = 4.0;

    auto final_state = [&](int n, double t_end) {
        const Grid grid = Grid::make(n, L);
        const BuiltInitialState built = build_initial_state(ic, grid, gas);
        RunOptions opts;
        opts.t_end = t_end;
        opts.record_every = 1 << 20;
        return run(built.state, opts, grid, gas, TransportLaw{}).final_state;
    };

    SUBCASE("sup norm at t = 20 sits strictly below the initial value") {
        const Grid grid = Grid::make(128, L);
        const BuiltInitialState built = build_initial_state(ic, grid, gas);
        const double sup0 = sup_dev(built.state);
        const State end = final_state(128, 20.0);
        CHECK(sup_dev(end) < sup0);
    }
    SUBCASE("self-convergence under refinement") {
        const double t_end = 2.0;
        const State coarse = final_state(128, t_end);
        const State mid = final_state(256, t_end);
        const State fine = final_state(512, t_end);
        auto diff = [&](const State& a, const State& b) {
            // b has twice the resolution of a; compare on a's nodes.
            double m = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                m = std::max({m, std::abs(a.v[i] - b.v[2 * i]), std::abs(a.u[i] - b.u[2 * i]),
                              std::abs(a.theta[i] - b.theta[2 * i])});
            }
            return m;
        };
        const double d1 = diff(coarse, mid);
        const double d2 = diff(mid, fine);
        CHECK(d1 / d2 >= 3.0); // about 4 for a second-order scheme
    }
}
