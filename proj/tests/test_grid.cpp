#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "ns1d/errors.hpp"
#include "ns1d/grid.hpp"
#include "ns1d/operators.hpp"
#include "ns1d/random.hpp"

using namespace ns1d;

namespace {

Field random_field(int n, SeededStream& rng, double lo, double hi) {
    Field f(n);
    for (double& x : f) {
        x = lo + (hi - lo) * rng.uniform01();
    }
    return f;
}

double ls_slope(const std::vector<double>& dxs, const std::vector<double>& errs) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(dxs.size());
    for (std::size_t i = 0; i < dxs.size(); ++i) {
        const double x = std::log(dxs[i]);
        const double y = std::log(errs[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

} // namespace

TEST_CASE("grid construction") {
    CHECK_THROWS_AS(Grid::make(15, 10.0), ConfigError);
    CHECK_THROWS_AS(Grid::make(17, 10.0), ConfigError);
    CHECK_THROWS_AS(Grid::make(256, 0.0), ConfigError);
    const Grid g = Grid::make(256, 10.0);
    CHECK(g.dx() == 2.0 * 10.0 / 256);
    CHECK(g.x(0) == -10.0);
    CHECK(g.x(128) == doctest::Approx(0.0));
}

TEST_CASE("dx_central basics") {
    const Grid g = Grid::make(64, 10.0);
    SUBCASE("constants map to exact zero") {
        const Field f(64, 3.7);
        for (double d : dx_central(f, g)) {
            CHECK(d == 0.0);
        }
    }
    SUBCASE("single spike gives the antisymmetric two-point stencil") {
        Field f(64, 0.0);
        f[10] = 1.0;
        const Field d = dx_central(f, g);
        const double w = 1.0 / (2.0 * g.dx());
        for (int i = 0; i < 64; ++i) {
            if (i == 9) CHECK(d[i] == doctest::Approx(w));
            else if (i == 11) CHECK(d[i] == doctest::Approx(-w));
            else CHECK(d[i] == 0.0);
        }
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(dx_central(Field(63, 0.0), g), std::invalid_argument);
    }
}

TEST_CASE("dx_central converges at second order on a sine mode") {
    const double L = 10.0;
    std::vector<double> dxs, errs;
    for (int n : {128, 256, 512}) {
        const Grid g = Grid::make(n, L);
        Field f(n);
        for (int i = 0; i < n; ++i) {
            f[i] = std::sin(M_PI * g.x(i) / L);
        }
        const Field d = dx_central(f, g);
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            err = std::max(err, std::abs(d[i] - (M_PI / L) * std::cos(M_PI * g.x(i) / L)));
        }
        dxs.push_back(g.dx());
        errs.push_back(err);
    }
    CHECK(ls_slope(dxs, errs) >= 1.9);
}

TEST_CASE("div_flux telescoping, exactness, convergence") {
    const double L = 10.0;
    SUBCASE("constant g with unit coefficient is exactly zero") {
        const Grid g = Grid::make(128, L);
        const Field out = div_flux(Field(128, 1.0), Field(128, 2.5), g);
        for (double x : out) {
            CHECK(x == 0.0);
        }
    }
    SUBCASE("discrete sum telescopes to roundoff for random fields") {
        const Grid g = Grid::make(256, L);
        SeededStream rng(11);
        for (int trial = 0; trial < 5; ++trial) {
            const Field coef = random_field(256, rng, 0.2, 2.0);
            const Field f = random_field(256, rng, -1.0, 1.0);
            const Field out = div_flux(coef, f, g);
            double sum = 0.0, coef_norm = 0.0, f_norm = 0.0;
            for (int i = 0; i < 256; ++i) {
                sum += out[i];
                coef_norm += coef[i] * coef[i];
                f_norm += f[i] * f[i];
            }
            coef_norm = std::sqrt(coef_norm * g.dx());
            f_norm = std::sqrt(f_norm * g.dx());
            CHECK(std::abs(sum * g.dx()) <= 1e-13 * coef_norm * f_norm);
        }
    }
    SUBCASE("unit coefficient sine mode converges to the second derivative") {
        std::vector<double> dxs, errs;
        for (int n : {128, 256, 512}) {
            const Grid g = Grid::make(n, L);
            Field f(n);
            for (int i = 0; i < n; ++i) {
                f[i] = std::sin(M_PI * g.x(i) / L);
            }
            const Field out = div_flux(Field(n, 1.0), f, g);
            const double k2 = (M_PI / L) * (M_PI / L);
            double err = 0.0;
            for (int i = 0; i < n; ++i) {
                err = std::max(err, std::abs(out[i] + k2 * std::sin(M_PI * g.x(i) / L)));
            }
            dxs.push_back(g.dx());
            errs.push_back(err);
        }
        CHECK(ls_slope(dxs, errs) >= 1.9);
    }
}

TEST_CASE("operators are linear") {
    const Grid g = Grid::make(128, 7.0);
    SeededStream rng(5);
    const Field f1 = random_field(128, rng, -1.0, 1.0);
    const Field f2 = random_field(128, rng, -1.0, 1.0);
    const Field coef = random_field(128, rng, 0.5, 1.5);
    const double a = 1.7, b = -0.3;
    Field combo(128);
    for (int i = 0; i < 128; ++i) {
        combo[i] = a * f1[i] + b * f2[i];
    }
    const Field d_combo = dx_central(combo, g);
    const Field d1 = dx_central(f1, g);
    const Field d2 = dx_central(f2, g);
    const Field fx_combo = div_flux(coef, combo, g);
    const Field fx1 = div_flux(coef, f1, g);
    const Field fx2 = div_flux(coef, f2, g);
    for (int i = 0; i < 128; ++i) {
        CHECK(d_combo[i] == doctest::Approx(a * d1[i] + b * d2[i]).epsilon(1e-12));
        CHECK(fx_combo[i] == doctest::Approx(a * fx1[i] + b * fx2[i]).epsilon(1e-12));
    }
}

TEST_CASE("sobolev norm") {
    const double L = 10.0;
    const Grid g = Grid::make(512, L);
    SUBCASE("zero fields give zero") {
        CHECK(sobolev_norm({Field(512, 0.0), Field(512, 0.0)}, 3, g) == 0.0);
    }
    SUBCASE("constant field, order zero") {
        CHECK(sobolev_norm({Field(512, -2.0)}, 0, g) ==
              doctest::Approx(2.0 * std::sqrt(2.0 * L)));
    }
    SUBCASE("Parseval ratio for one sine mode") {
        Field f(512);
        for (int i = 0; i < 512; ++i) {
            f[i] = std::sin(M_PI * g.x(i) / L);
        }
        const double n0 = sobolev_norm({f}, 0, g);
        const double n1 = sobolev_norm({f}, 1, g);
        const double ratio = (n1 * n1) / (n0 * n0);
        const double expected = 1.0 + (M_PI / L) * (M_PI / L);
        CHECK(std::abs(ratio - expected) / expected < 0.01);
    }
    SUBCASE("monotone in the order") {
        SeededStream rng(3);
        const Field f = random_field(512, rng, -1.0, 1.0);
        double prev = sobolev_norm({f}, 0, g);
        for (int k = 1; k <= 3; ++k) {
            const double cur = sobolev_norm({f}, k, g);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
    SUBCASE("unsupported order") {
        CHECK_THROWS_AS(sobolev_norm({Field(512, 0.0)}, 4, g), std::invalid_argument);
    }
}

TEST_CASE("sup norm") {
    CHECK(sup_norm({Field(8, 0.0)}) == 0.0);
    Field f(8, 0.0);
    f[3] = -3.0;
    CHECK(sup_norm({f}) == 3.0);
    const Grid g = Grid::make(32, 1.0);
    const State eq = State::uniform(g);
    Field dv(32), du = eq.u, dth(32);
    for (int i = 0; i < 32; ++i) {
        dv[i] = eq.v[i] - 1.0;
        dth[i] = eq.theta[i] - 1.0;
    }
    CHECK(sup_norm({dv, du, dth}) == 0.0);
    CHECK_THROWS_AS(sup_norm({}), std::invalid_argument);
}
