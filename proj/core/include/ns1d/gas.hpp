#pragma once

#include <cstdint>

namespace ns1d {

// Values at or below this are treated as domain errors rather than clamped:
// leaving the non-vacuum regime is a meaningful failure signal.
inline constexpr double positive_domain_floor = 1e-12;

// Thermodynamic constants of an ideal polytropic gas:
//   p = R theta / v,  e = c_v theta,  c_v = R / (gamma - 1).
// Defaults normalize A = R = 1 so the far-field entropy is zero.
struct GasParams {
    double gamma = 1.4;
    double R = 1.0;
    double A = 1.0;

    double c_v() const { return R / (gamma - 1.0); }

    // Throws ConfigError unless gamma > 1, R > 0, A > 0.
    static GasParams validated(double gamma, double R = 1.0, double A = 1.0);
};

enum class TransportKind : std::uint8_t { power_law = 0, constant = 1 };

// Temperature-dependent viscosity and heat conductivity,
//   mu(theta) = mu0 theta^beta_mu,  kappa(theta) = kappa0 theta^beta_kappa,
// both strictly positive for theta > 0. The constant kind is the power law
// with both exponents zero. Closed-form derivatives up to third order for mu
// and second order for kappa are part of the contract (the expanded-identity
// cross checks consume them).
struct TransportLaw {
    TransportKind kind = TransportKind::power_law;
    double mu0 = 1.0;
    double kappa0 = 1.0;
    double beta_mu = 1.0;
    double beta_kappa = 1.0;

    static TransportLaw power(double mu0, double kappa0, double beta_mu, double beta_kappa);
    static TransportLaw constant_coefficients(double mu0 = 1.0, double kappa0 = 1.0);
    // Kinetic-theory scaling for an inverse power potential r^-alpha:
    // both exponents equal transport_exponent(alpha).
    static TransportLaw from_alpha(double alpha, double mu0 = 1.0, double kappa0 = 1.0);

    double mu(double theta) const;
    double mu_d1(double theta) const;
    double mu_d2(double theta) const;
    double mu_d3(double theta) const;
    double kappa(double theta) const;
    double kappa_d1(double theta) const;
    double kappa_d2(double theta) const;
};

// (alpha + 4) / (2 alpha): 1 for Maxwellian molecules (alpha = 4),
// tends to 1/2 for elastic spheres (alpha -> infinity).
double transport_exponent(double alpha);

double pressure(double v, double theta, const GasParams& gas);
double internal_energy(double theta, const GasParams& gas);

// s(v, theta) = (R/(gamma-1)) ln(R theta v^(gamma-1) / A).
double entropy(double v, double theta, const GasParams& gas);

// theta(v, s) = (A/R) v^(1-gamma) exp((gamma-1) s / R); exact inverse of
// entropy() in its second argument. Throws std::overflow_error when the
// exponent leaves floating-point range.
double temperature_from_entropy(double v, double s, const GasParams& gas);

} // namespace ns1d
