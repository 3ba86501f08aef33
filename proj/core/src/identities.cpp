#include "ns1d/identities.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "ns1d/operators.hpp"
#include "ns1d/random.hpp"
#include "ns1d/solver.hpp"

namespace ns1d {

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::i2_1: return "I2_1";
        case IdentityId::i2_2: return "I2_2";
        case IdentityId::i2_5: return "I2_5";
        case IdentityId::i2_6: return "I2_6";
        case IdentityId::i2_7: return "I2_7";
        case IdentityId::i2_8: return "I2_8";
        case IdentityId::i2_9: return "I2_9";
        case IdentityId::i2_10: return "I2_10";
        case IdentityId::i2_11: return "I2_11";
        case IdentityId::i2_12: return "I2_12";
        case IdentityId::i2_13: return "I2_13";
        case IdentityId::i2_14: return "I2_14";
        case IdentityId::i2_15: return "I2_15";
        case IdentityId::i2_16: return "I2_16";
    }
    throw std::invalid_argument("unknown identity tag");
}

IdentityId identity_from_name(const std::string& name) {
    for (IdentityId id : all_identities) {
        if (name == identity_name(id)) {
            return id;
        }
    }
    throw std::invalid_argument("unknown identity tag: " + name);
}

State make_smooth_state(const SmoothFieldSpec& spec, const Grid& grid) {
    if (spec.num_modes < 0) {
        throw std::invalid_argument("SmoothFieldSpec: num_modes must be >= 0");
    }
    // Mode amplitudes are amplitude / k^2, so sum < amplitude * pi^2 / 6.
    if (!(spec.amplitude >= 0.0) || spec.amplitude * 1.6449340668482264 >= 1.0) {
        throw std::invalid_argument("SmoothFieldSpec: amplitude too large for positivity");
    }
    SeededStream rng(spec.seed);
    const double L = grid.half_width;
    State state = State::uniform(grid);
    Field* fields[3] = {&state.v, &state.u, &state.theta};
    for (Field* f : fields) {
        for (int k = 1; k <= spec.num_modes; ++k) {
            const double amp = spec.amplitude * (0.5 + 0.5 * rng.uniform01()) / (k * k);
            const double phase = 2.0 * M_PI * rng.uniform01();
            for (int i = 0; i < grid.n; ++i) {
                (*f)[i] += amp * std::sin(M_PI * k * grid.x(i) / L + phase);
            }
        }
    }
    return state;
}

namespace {

// Discrete derivatives and closed-form transport coefficients shared by the
// expanded forms.
struct IdentityContext {
    Field vx, vxx, vxxx;
    Field ux, uxx, uxxx;
    Field thx, thxx, thxxx;
    Field mu, mu1, mu2, mu3, ka, ka1, ka2;
    Field p;

    IdentityContext(const State& s, const TransportLaw& law, const GasParams& gas,
                    const Grid& grid) {
        vx = dx_central(s.v, grid);
        vxx = dx_central(vx, grid);
        vxxx = dx_central(vxx, grid);
        ux = dx_central(s.u, grid);
        uxx = dx_central(ux, grid);
        uxxx = dx_central(uxx, grid);
        thx = dx_central(s.theta, grid);
        thxx = dx_central(thx, grid);
        thxxx = dx_central(thxx, grid);
        const int n = grid.n;
        mu.resize(n); mu1.resize(n); mu2.resize(n); mu3.resize(n);
        ka.resize(n); ka1.resize(n); ka2.resize(n);
        p.resize(n);
        for (int i = 0; i < n; ++i) {
            const double th = s.theta[i];
            mu[i] = law.mu(th);
            mu1[i] = law.mu_d1(th);
            mu2[i] = law.mu_d2(th);
            mu3[i] = law.mu_d3(th);
            ka[i] = law.kappa(th);
            ka1[i] = law.kappa_d1(th);
            ka2[i] = law.kappa_d2(th);
            p[i] = gas.R * th / s.v[i];
        }
    }
};

Field pointwise(const Grid& grid, const std::function<double(int)>& f) {
    Field out(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        out[i] = f(i);
    }
    return out;
}

Field subtract(Field lhs, const Field& rhs_field) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        lhs[i] -= rhs_field[i];
    }
    return lhs;
}

} // namespace

Field evaluate_identity(IdentityId id, const State& state, const TransportLaw& law,
                        const GasParams& gas, const Grid& grid) {
    for (const Field* f : {&state.v, &state.u, &state.theta}) {
        for (double x : *f) {
            if (!std::isfinite(x)) {
                throw std::invalid_argument("evaluate_identity: non-finite input field");
            }
        }
    }

    const IdentityContext c(state, law, gas, grid);
    const Field& v = state.v;
    const Field& th = state.theta;

    switch (id) {
        case IdentityId::i2_1: {
            // (mu v_x / v)_t = u_t + p_x + mu'/v (theta_t v_x - u_x theta_x),
            // with the time derivatives supplied by the solver tendencies and
            // the left side chain-ruled through the discrete composite.
            const RhsOutput tend = rhs(state, grid, gas, law);
            const Field vtx = dx_central(tend.dv_dt, grid);
            const Field px = dx_central(c.p, grid);
            Field lhs = pointwise(grid, [&](int i) {
                return c.mu1[i] * tend.dtheta_dt[i] * c.vx[i] / v[i] +
                       c.mu[i] * vtx[i] / v[i] -
                       c.mu[i] * c.vx[i] * tend.dv_dt[i] / (v[i] * v[i]);
            });
            const Field rhs_field = pointwise(grid, [&](int i) {
                return tend.du_dt[i] + px[i] +
                       c.mu1[i] / v[i] *
                           (tend.dtheta_dt[i] * c.vx[i] - c.ux[i] * c.thx[i]);
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_2: {
            // c_v theta_t = (mu u_x^2 + kappa' theta_x^2 + kappa theta_xx
            //                - R theta u_x)/v - kappa theta_x v_x / v^2.
            const RhsOutput tend = rhs(state, grid, gas, law);
            const double c_v = gas.c_v();
            Field lhs = pointwise(grid, [&](int i) { return c_v * tend.dtheta_dt[i]; });
            const Field rhs_field = pointwise(grid, [&](int i) {
                return (c.mu[i] * c.ux[i] * c.ux[i] + c.ka1[i] * c.thx[i] * c.thx[i] +
                        c.ka[i] * c.thxx[i] - gas.R * th[i] * c.ux[i]) /
                           v[i] -
                       c.ka[i] * c.thx[i] * c.vx[i] / (v[i] * v[i]);
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_5: {
            Field lhs = dx_central(c.p, grid);
            const Field rhs_field = pointwise(grid, [&](int i) {
                return gas.R * (c.thx[i] / v[i] - th[i] * c.vx[i] / (v[i] * v[i]));
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_6: {
            Field lhs = dx_central(dx_central(c.p, grid), grid);
            const Field rhs_field = pointwise(grid, [&](int i) {
                const double v2 = v[i] * v[i];
                return gas.R * (c.thxx[i] / v[i] -
                                (2.0 * c.thx[i] * c.vx[i] + th[i] * c.vxx[i]) / v2 +
                                2.0 * th[i] * c.vx[i] * c.vx[i] / (v2 * v[i]));
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_7: {
            Field lhs = dx_central(dx_central(dx_central(c.p, grid), grid), grid);
            const Field rhs_field = pointwise(grid, [&](int i) {
                const double v2 = v[i] * v[i];
                const double v3 = v2 * v[i];
                const double v4 = v3 * v[i];
                return gas.R *
                       (c.thxxx[i] / v[i] -
                        (3.0 * c.thxx[i] * c.vx[i] + 3.0 * c.thx[i] * c.vxx[i] +
                         th[i] * c.vxxx[i]) /
                            v2 +
                        (6.0 * c.thx[i] * c.vx[i] * c.vx[i] +
                         6.0 * th[i] * c.vx[i] * c.vxx[i]) /
                            v3 -
                        6.0 * th[i] * c.vx[i] * c.vx[i] * c.vx[i] / v4);
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_8: {
            const Field w = pointwise(grid, [&](int i) { return c.mu[i] * c.vx[i] / v[i]; });
            Field lhs = dx_central(w, grid);
            const Field rhs_field = pointwise(grid, [&](int i) {
                return (c.mu1[i] * c.thx[i] * c.vx[i] + c.mu[i] * c.vxx[i]) / v[i] -
                       c.mu[i] * c.vx[i] * c.vx[i] / (v[i] * v[i]);
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_9: {
            const Field w = pointwise(grid, [&](int i) { return c.mu[i] * c.vx[i] / v[i]; });
            Field lhs = dx_central(dx_central(w, grid), grid);
            for (int i = 0; i < grid.n; ++i) {
                lhs[i] -= c.mu[i] * c.vxxx[i] / v[i];
            }
            const Field rhs_field = pointwise(grid, [&](int i) {
                const double v2 = v[i] * v[i];
                return (c.mu2[i] * c.thx[i] * c.thx[i] * c.vx[i] +
                        c.mu1[i] * c.thxx[i] * c.vx[i] +
                        2.0 * c.mu1[i] * c.thx[i] * c.vxx[i]) /
                           v[i] -
                       (2.0 * c.mu1[i] * c.thx[i] * c.vx[i] * c.vx[i] +
                        3.0 * c.mu[i] * c.vx[i] * c.vxx[i]) /
                           v2 +
                       2.0 * c.mu[i] * c.vx[i] * c.vx[i] * c.vx[i] / (v2 * v[i]);
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_10: {
            const Field w =
                pointwise(grid, [&](int i) { return c.mu[i] * c.ux[i] * c.ux[i] / v[i]; });
            Field lhs = dx_central(w, grid);
            const Field rhs_field = pointwise(grid, [&](int i) {
                return (c.mu1[i] * c.thx[i] * c.ux[i] * c.ux[i] +
                        2.0 * c.mu[i] * c.ux[i] * c.uxx[i]) /
                           v[i] -
                       c.mu[i] * c.ux[i] * c.ux[i] * c.vx[i] / (v[i] * v[i]);
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_11: {
            const Field w =
                pointwise(grid, [&](int i) { return c.mu[i] * c.ux[i] * c.ux[i] / v[i]; });
            Field lhs = dx_central(dx_central(w, grid), grid);
            const Field rhs_field = pointwise(grid, [&](int i) {
                const double v2 = v[i] * v[i];
                const double ux2 = c.ux[i] * c.ux[i];
                return (c.mu2[i] * c.thx[i] * c.thx[i] * ux2 + c.mu1[i] * c.thxx[i] * ux2 +
                        4.0 * c.mu1[i] * c.thx[i] * c.ux[i] * c.uxx[i] +
                        2.0 * c.mu[i] * c.uxx[i] * c.uxx[i] +
                        2.0 * c.mu[i] * c.ux[i] * c.uxxx[i]) /
                           v[i] -
                       (2.0 * c.mu1[i] * c.thx[i] * ux2 * c.vx[i] +
                        4.0 * c.mu[i] * c.ux[i] * c.uxx[i] * c.vx[i] +
                        c.mu[i] * ux2 * c.vxx[i]) /
                           v2 +
                       2.0 * c.mu[i] * ux2 * c.vx[i] * c.vx[i] / (v2 * v[i]);
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_12: {
            const Field w = pointwise(grid, [&](int i) { return c.mu[i] * c.ux[i] / v[i]; });
            Field lhs = dx_central(w, grid);
            const Field rhs_field = pointwise(grid, [&](int i) {
                return (c.mu1[i] * c.thx[i] * c.ux[i] + c.mu[i] * c.uxx[i]) / v[i] -
                       c.mu[i] * c.ux[i] * c.vx[i] / (v[i] * v[i]);
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_13: {
            const Field w = pointwise(grid, [&](int i) { return c.mu[i] * c.ux[i] / v[i]; });
            Field lhs = dx_central(dx_central(w, grid), grid);
            for (int i = 0; i < grid.n; ++i) {
                lhs[i] -= c.mu[i] * c.uxxx[i] / v[i];
            }
            const Field rhs_field = pointwise(grid, [&](int i) {
                const double v2 = v[i] * v[i];
                return (c.mu2[i] * c.thx[i] * c.thx[i] * c.ux[i] +
                        c.mu1[i] * c.thxx[i] * c.ux[i] +
                        2.0 * c.mu1[i] * c.thx[i] * c.uxx[i]) /
                           v[i] -
                       (2.0 * c.mu1[i] * c.thx[i] * c.vx[i] * c.ux[i] +
                        2.0 * c.mu[i] * c.uxx[i] * c.vx[i] + c.mu[i] * c.ux[i] * c.vxx[i]) /
                           v2 +
                       2.0 * c.mu[i] * c.ux[i] * c.vx[i] * c.vx[i] / (v2 * v[i]);
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_14: {
            // Third derivative of the viscous flux minus its leading term.
            // The cubic transport term is mu'''(theta) theta_x^3 u_x, as the
            // chain rule gives; see the project notes on the expanded forms.
            const Field w = pointwise(grid, [&](int i) { return c.mu[i] * c.ux[i] / v[i]; });
            const Field uxxxx = dx_central(c.uxxx, grid);
            Field lhs = dx_central(dx_central(dx_central(w, grid), grid), grid);
            for (int i = 0; i < grid.n; ++i) {
                lhs[i] -= c.mu[i] * uxxxx[i] / v[i];
            }
            const Field rhs_field = pointwise(grid, [&](int i) {
                const double v2 = v[i] * v[i];
                const double v3 = v2 * v[i];
                const double v4 = v3 * v[i];
                const double tx = c.thx[i];
                const double vx = c.vx[i];
                return (c.mu3[i] * tx * tx * tx * c.ux[i] +
                        3.0 * c.mu2[i] * tx * tx * c.uxx[i] +
                        3.0 * c.mu2[i] * c.ux[i] * tx * c.thxx[i] +
                        3.0 * c.mu1[i] * tx * c.uxxx[i] + c.mu1[i] * c.thxxx[i] * c.ux[i] +
                        3.0 * c.mu1[i] * c.thxx[i] * c.uxx[i]) /
                           v[i] -
                       (3.0 * c.mu2[i] * tx * tx * c.ux[i] * vx +
                        3.0 * c.mu1[i] * c.thxx[i] * c.ux[i] * vx +
                        6.0 * c.mu1[i] * c.uxx[i] * tx * vx +
                        3.0 * c.mu1[i] * tx * c.ux[i] * c.vxx[i] +
                        3.0 * c.mu[i] * c.uxxx[i] * vx + 3.0 * c.mu[i] * c.vxx[i] * c.uxx[i] +
                        c.mu[i] * c.ux[i] * c.vxxx[i]) /
                           v2 +
                       (6.0 * c.mu1[i] * tx * c.ux[i] * vx * vx +
                        6.0 * c.mu[i] * c.uxx[i] * vx * vx +
                        6.0 * c.mu[i] * c.vxx[i] * c.ux[i] * vx) /
                           v3 -
                       6.0 * c.mu[i] * c.ux[i] * vx * vx * vx / v4;
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_15: {
            const Field w = pointwise(grid, [&](int i) { return c.ka[i] * c.thx[i] / v[i]; });
            Field lhs = dx_central(w, grid);
            const Field rhs_field = pointwise(grid, [&](int i) {
                return (c.ka1[i] * c.thx[i] * c.thx[i] + c.ka[i] * c.thxx[i]) / v[i] -
                       c.ka[i] * c.thx[i] * c.vx[i] / (v[i] * v[i]);
            });
            return subtract(std::move(lhs), rhs_field);
        }
        case IdentityId::i2_16: {
            const Field w = pointwise(grid, [&](int i) { return c.ka[i] * c.thx[i] / v[i]; });
            Field lhs = dx_central(dx_central(w, grid), grid);
            for (int i = 0; i < grid.n; ++i) {
                lhs[i] -= c.ka[i] * c.thxxx[i] / v[i];
            }
            const Field rhs_field = pointwise(grid, [&](int i) {
                const double v2 = v[i] * v[i];
                const double tx = c.thx[i];
                return (c.ka2[i] * tx * tx * tx + 3.0 * c.ka1[i] * tx * c.thxx[i]) / v[i] -
                       (2.0 * c.ka[i] * c.thxx[i] * c.vx[i] + 2.0 * c.ka1[i] * tx * tx * c.vx[i] +
                        c.ka[i] * tx * c.vxx[i]) /
                           v2 +
                       2.0 * c.ka[i] * tx * c.vx[i] * c.vx[i] / (v2 * v[i]);
            });
            return subtract(std::move(lhs), rhs_field);
        }
    }
    throw std::invalid_argument("unknown identity tag");
}

OrderReport measure_order(IdentityId id, const SmoothFieldSpec& spec,
                          const std::vector<int>& levels, double half_width,
                          const TransportLaw& law, const GasParams& gas) {
    if (levels.size() < 3) {
        throw std::invalid_argument("measure_order: need at least 3 refinement levels");
    }
    for (std::size_t l = 1; l < levels.size(); ++l) {
        if (levels[l] != 2 * levels[l - 1]) {
            throw std::invalid_argument("measure_order: each level must double the last");
        }
    }

    OrderReport report;
    std::vector<double> log_dx, log_res;
    for (int n : levels) {
        const Grid grid = Grid::make(n, half_width);
        const State state = make_smooth_state(spec, grid);
        const Field res = evaluate_identity(id, state, law, gas, grid);
        double worst = 0.0;
        for (double r : res) {
            worst = std::max(worst, std::abs(r));
        }
        report.residuals.push_back(worst);
        log_dx.push_back(std::log(grid.dx()));
        log_res.push_back(std::log(std::max(worst, 1e-300)));
    }

    if (report.residuals.front() < 1e-13) {
        report.exact = true;
        return report;
    }

    const std::size_t m = log_dx.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t l = 0; l < m; ++l) {
        sx += log_dx[l];
        sy += log_res[l];
        sxx += log_dx[l] * log_dx[l];
        sxy += log_dx[l] * log_res[l];
    }
    report.order = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return report;
}

} // namespace ns1d
