#include "ns1d/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ns1d/errors.hpp"
#include "ns1d/operators.hpp"
#include "ns1d/random.hpp"

namespace ns1d {

const char* ic_family_name(IcFamily family) {
    switch (family) {
        case IcFamily::sine_bump: return "sine_bump";
        case IcFamily::gaussian_entropy_bump: return "gaussian_entropy_bump";
        case IcFamily::custom: return "custom";
    }
    throw std::invalid_argument("unknown ic family");
}

IcFamily ic_family_from_name(const std::string& name) {
    for (IcFamily f : {IcFamily::sine_bump, IcFamily::gaussian_entropy_bump, IcFamily::custom}) {
        if (name == ic_family_name(f)) {
            return f;
        }
    }
    throw ConfigError("family: unknown initial-condition family '" + name + "'");
}

namespace {

// C^2 compactly supported cutoff: (1 - r^2)^3 on |r| < 1, zero outside.
double cutoff(double r) {
    if (std::abs(r) >= 1.0) {
        return 0.0;
    }
    const double s = 1.0 - r * r;
    return s * s * s;
}

struct Profiles {
    Field v0, u0, s0;
};

Profiles sample_profiles(const InitialData& ic, const Grid& grid) {
    const double a = ic.amplitude;
    const double w = ic.support;
    Profiles p;
    p.v0.assign(grid.n, 1.0);
    p.u0.assign(grid.n, 0.0);
    p.s0.assign(grid.n, 0.0);

    switch (ic.family) {
        case IcFamily::sine_bump:
            for (int i = 0; i < grid.n; ++i) {
                const double x = grid.x(i);
                p.u0[i] = a * std::sin(M_PI * x / w) * cutoff(x / w);
            }
            break;
        case IcFamily::gaussian_entropy_bump: {
            // Odd Gaussian-derivative profile, peak amplitude a at x = sigma.
            // Zero mean, so the periodic truncation relaxes back to (1,0,1).
            const double sigma = w / 4.0;
            for (int i = 0; i < grid.n; ++i) {
                const double x = grid.x(i);
                const double r = x / sigma;
                p.s0[i] = a * r * std::exp(0.5 - 0.5 * r * r) * cutoff(x / w);
            }
            break;
        }
        case IcFamily::custom: {
            SeededStream rng(ic.seed);
            Field* fields[3] = {&p.v0, &p.u0, &p.s0};
            for (Field* f : fields) {
                for (int k = 1; k <= 3; ++k) {
                    const double amp = a * (0.5 + 0.5 * rng.uniform01()) / (k * k);
                    const double phase = 2.0 * M_PI * rng.uniform01();
                    for (int i = 0; i < grid.n; ++i) {
                        const double x = grid.x(i);
                        (*f)[i] += amp * std::sin(M_PI * k * x / w + phase) * cutoff(x / w);
                    }
                }
            }
            break;
        }
    }
    return p;
}

} // namespace

BuiltInitialState build_initial_state(const InitialData& ic, const Grid& grid,
                                      const GasParams& gas) {
    if (!(ic.amplitude >= 0.0)) {
        throw ConfigError("amplitude: must be >= 0, got " + std::to_string(ic.amplitude));
    }
    if (!(ic.support > 0.0) || !(ic.support < 0.5 * grid.half_width)) {
        throw ConfigError("support: must satisfy 0 < w < L/2, got w = " +
                          std::to_string(ic.support) + " with L = " +
                          std::to_string(grid.half_width));
    }
    if (ic.support < 8.0 * grid.dx()) {
        throw ConfigError("support: grid too coarse, need w >= 8 dx (w = " +
                          std::to_string(ic.support) + ", dx = " +
                          std::to_string(grid.dx()) + ")");
    }

    const Profiles p = sample_profiles(ic, grid);

    BuiltInitialState built;
    built.state.v = p.v0;
    built.state.u = p.u0;
    built.state.theta.resize(grid.n);
    built.state.t = 0.0;
    built.flat = ic.amplitude == 0.0;

    for (int i = 0; i < grid.n; ++i) {
        if (!(p.v0[i] > positive_domain_floor)) {
            throw ConfigError("initial data produced nonpositive v0 at x = " +
                              std::to_string(grid.x(i)));
        }
        built.state.theta[i] = temperature_from_entropy(p.v0[i], p.s0[i], gas);
        if (!(built.state.theta[i] > positive_domain_floor)) {
            throw ConfigError("initial data produced nonpositive theta0 at x = " +
                              std::to_string(grid.x(i)));
        }
    }

    const auto [v_lo_it, v_hi_it] = std::minmax_element(p.v0.begin(), p.v0.end());
    built.v0_min = *v_lo_it;
    built.v0_max = *v_hi_it;
    const auto [t_lo_it, t_hi_it] =
        std::minmax_element(built.state.theta.begin(), built.state.theta.end());
    built.theta0_min = *t_lo_it;
    built.theta0_max = *t_hi_it;

    built.v_lo = 0.5 * built.v0_min;
    built.v_hi = 2.0 * built.v0_max;
    const double log_dev = std::max(std::abs(std::log(built.theta0_min)),
                                    std::abs(std::log(built.theta0_max)));
    built.theta_lo = std::exp(-2.0 * log_dev);
    built.theta_hi = std::exp(2.0 * log_dev);

    Field scaled(grid.n);
    const double gm1 = gas.gamma - 1.0;
    for (int i = 0; i < grid.n; ++i) {
        scaled[i] = (built.state.theta[i] - 1.0) / std::sqrt(gm1);
    }
    built.scaled_theta_norm = sobolev_norm({scaled}, 3, grid);
    return built;
}

} // namespace ns1d
