#include "ns1d/gas.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ns1d/errors.hpp"

namespace ns1d {

namespace {

void require_positive(double x, const char* name) {
    if (!(x > positive_domain_floor)) {
        throw std::domain_error(std::string(name) + " must be positive, got " +
                                std::to_string(x));
    }
}

} // namespace

GasParams GasParams::validated(double gamma, double R, double A) {
    if (!(gamma > 1.0)) {
        throw ConfigError("gamma: must be > 1, got " + std::to_string(gamma));
    }
    if (!(R > 0.0)) {
        throw ConfigError("R: must be > 0, got " + std::to_string(R));
    }
    if (!(A > 0.0)) {
        throw ConfigError("A: must be > 0, got " + std::to_string(A));
    }
    return GasParams{gamma, R, A};
}

TransportLaw TransportLaw::power(double mu0, double kappa0, double beta_mu, double beta_kappa) {
    if (!(mu0 > 0.0)) {
        throw ConfigError("mu0: must be > 0, got " + std::to_string(mu0));
    }
    if (!(kappa0 > 0.0)) {
        throw ConfigError("kappa0: must be > 0, got " + std::to_string(kappa0));
    }
    return TransportLaw{TransportKind::power_law, mu0, kappa0, beta_mu, beta_kappa};
}

TransportLaw TransportLaw::constant_coefficients(double mu0, double kappa0) {
    TransportLaw law = power(mu0, kappa0, 0.0, 0.0);
    law.kind = TransportKind::constant;
    return law;
}

TransportLaw TransportLaw::from_alpha(double alpha, double mu0, double kappa0) {
    const double beta = transport_exponent(alpha);
    return power(mu0, kappa0, beta, beta);
}

namespace {

// d^k/dtheta^k of c theta^b in closed form.
double power_deriv(double c, double b, double theta, int order) {
    double factor = c;
    for (int j = 0; j < order; ++j) {
        factor *= (b - j);
    }
    if (factor == 0.0) {
        return 0.0;
    }
    return factor * std::pow(theta, b - order);
}

} // namespace

double TransportLaw::mu(double theta) const {
    require_positive(theta, "theta");
    return power_deriv(mu0, beta_mu, theta, 0);
}

double TransportLaw::mu_d1(double theta) const {
    require_positive(theta, "theta");
    return power_deriv(mu0, beta_mu, theta, 1);
}

double TransportLaw::mu_d2(double theta) const {
    require_positive(theta, "theta");
    return power_deriv(mu0, beta_mu, theta, 2);
}

double TransportLaw::mu_d3(double theta) const {
    require_positive(theta, "theta");
    return power_deriv(mu0, beta_mu, theta, 3);
}

double TransportLaw::kappa(double theta) const {
    require_positive(theta, "theta");
    return power_deriv(kappa0, beta_kappa, theta, 0);
}

double TransportLaw::kappa_d1(double theta) const {
    require_positive(theta, "theta");
    return power_deriv(kappa0, beta_kappa, theta, 1);
}

double TransportLaw::kappa_d2(double theta) const {
    require_positive(theta, "theta");
    return power_deriv(kappa0, beta_kappa, theta, 2);
}

double transport_exponent(double alpha) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("alpha must be positive, got " + std::to_string(alpha));
    }
    return (alpha + 4.0) / (2.0 * alpha);
}

double pressure(double v, double theta, const GasParams& gas) {
    require_positive(v, "v");
    require_positive(theta, "theta");
    return gas.R * theta / v;
}

double internal_energy(double theta, const GasParams& gas) {
    require_positive(theta, "theta");
    return gas.c_v() * theta;
}

double entropy(double v, double theta, const GasParams& gas) {
    require_positive(v, "v");
    require_positive(theta, "theta");
    return gas.c_v() * std::log(gas.R * theta * std::pow(v, gas.gamma - 1.0) / gas.A);
}

double temperature_from_entropy(double v, double s, const GasParams& gas) {
    require_positive(v, "v");
    const double exponent = (1.0 - gas.gamma) * std::log(v) + (gas.gamma - 1.0) * s / gas.R;
    const double theta = (gas.A / gas.R) * std::exp(exponent);
    if (!std::isfinite(theta)) {
        throw std::overflow_error("temperature_from_entropy: exponent " +
                                  std::to_string(exponent) + " leaves floating-point range");
    }
    return theta;
}

} // namespace ns1d
