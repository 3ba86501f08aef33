#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include <doctest.h>

#include "ns1d/checkpoint.hpp"
#include "ns1d/config.hpp"
#include "ns1d/csv.hpp"
#include "ns1d/errors.hpp"
#include "ns1d/random.hpp"
#include "ns1d/svg.hpp"

using namespace ns1d;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("ns1d_io_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("config defaults from a minimal file") {
    const RunConfig cfg = parse_config("[gas]\ngamma = 1.4\n");
    CHECK(cfg.gamma == 1.4);
    CHECK(cfg.R == 1.0);
    CHECK(cfg.n == 512);
    CHECK(cfg.L == 20.0);
    CHECK(cfg.record_every == 100);
    CHECK(cfg.dir == "out");
    // Echo contains every defaulted key.
    const std::string echo = canonical_config_text(cfg);
    for (const char* key : {"gamma", "R", "A", "kind", "mu0", "kappa0", "beta_mu",
                            "beta_kappa", "n", "L", "family", "amplitude", "support", "seed",
                            "cfl_hyperbolic", "cfl_parabolic", "dt_max", "positivity_floor",
                            "t_end", "record_every", "dir", "emit_svg", "levels",
                            "gamma_list"}) {
        INFO(key);
        CHECK(echo.find(key) != std::string::npos);
    }
}

TEST_CASE("config constraint errors name the key and the bound") {
    try {
        parse_config("[gas]\ngamma = 0.9\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        CHECK(what.find("gamma") != std::string::npos);
        CHECK(what.find("> 1") != std::string::npos);
    }
}

TEST_CASE("unknown keys and sections are hard errors") {
    try {
        parse_config("[gas]\ngama = 1.4\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("gama") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("[gass]\ngamma = 1.4\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("gamma = 1.4\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[control]\nrecord_every = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[grid]\nn = 13\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[output]\nemit_svg = maybe\n"), ConfigError);
}

TEST_CASE("transport alpha resolves both exponents") {
    const RunConfig cfg = parse_config("[transport]\nalpha = 4\n");
    CHECK(cfg.beta_mu == doctest::Approx(1.0));
    CHECK(cfg.beta_kappa == doctest::Approx(1.0));
    CHECK_THROWS_AS(parse_config("[transport]\nalpha = 4\nbeta_mu = 0.5\n"), ConfigError);
    const RunConfig constant = parse_config("[transport]\nkind = constant\nbeta_mu = 2\n");
    CHECK(constant.beta_mu == 0.0);
    CHECK(constant.beta_kappa == 0.0);
}

TEST_CASE("config lists, comments, and inf values") {
    const RunConfig cfg = parse_config(
        "# comment line\n"
        "[experiment]\n"
        "levels = 64, 128, 256\n"
        "gamma_list = 1.05,1.4\n"
        "[control]\n"
        "dt_max = inf\n");
    CHECK(cfg.levels == std::vector<int>{64, 128, 256});
    CHECK(cfg.gamma_list == std::vector<double>{1.05, 1.4});
    CHECK(std::isinf(cfg.dt_max));
}

TEST_CASE("canonical text parses back to the same hash") {
    RunConfig cfg = parse_config("[gas]\ngamma = 1.05\n[ic]\nseed = 7\n");
    const std::string text = canonical_config_text(cfg);
    const RunConfig reparsed = parse_config(text);
    CHECK(config_hash(cfg) == config_hash(reparsed));
    // Any semantic change moves the hash.
    cfg.seed = 8;
    CHECK(config_hash(cfg) != config_hash(reparsed));
}

TEST_CASE("series csv golden header and round trip") {
    CHECK(std::string(series_csv_header) ==
          "t,eta_total,dissipation_cum,balance_residual,mass,momentum,total_energy,"
          "v_min,v_max,theta_min,theta_max,psi_min,psi_max,h3_norm,sup_perturbation");

    TempDir tmp;
    DiagnosticsRecord eq;
    eq.t = 0.0;
    eq.mass = 20.0;
    eq.v_min = eq.v_max = eq.theta_min = eq.theta_max = 1.0;
    eq.total_energy = 50.0;
    DiagnosticsRecord tricky;
    tricky.t = 0.1;
    tricky.eta_total = 1.0 / 3.0;
    tricky.dissipation_cum = 1e-17;
    tricky.balance_residual = -2.2250738585072014e-308;
    tricky.mass = 19.999999999999996;
    tricky.momentum = -0.0;
    tricky.total_energy = 1e300;
    tricky.v_min = 0.1;
    tricky.v_max = 9.9;
    tricky.theta_min = 0.5;
    tricky.theta_max = 2.0;
    tricky.psi_min = -1.5;
    tricky.psi_max = 3.25;
    tricky.h3_norm = 1.2345678901234567;
    tricky.sup_perturbation = 7e-9;

    const std::string path = tmp.file("series.csv");
    write_series({eq, tricky}, path);

    const std::string text = slurp(path);
    // Every row has exactly 15 columns.
    std::size_t line_start = text.find('\n') + 1;
    int rows = 0;
    while (line_start < text.size()) {
        const std::size_t line_end = text.find('\n', line_start);
        const std::string line = text.substr(line_start, line_end - line_start);
        CHECK(std::count(line.begin(), line.end(), ',') == 14);
        line_start = line_end + 1;
        ++rows;
    }
    CHECK(rows == 2);

    const auto back = read_series(path);
    REQUIRE(back.size() == 2);
    CHECK(back[0].mass == eq.mass);
    CHECK(back[0].sup_perturbation == 0.0);
    CHECK(back[1].eta_total == tricky.eta_total);
    CHECK(back[1].balance_residual == tricky.balance_residual);
    CHECK(back[1].total_energy == tricky.total_energy);
    CHECK(back[1].h3_norm == tricky.h3_norm);

    // Re-serialization is byte-identical (17 significant digits round trip).
    const std::string path2 = tmp.file("series2.csv");
    write_series(back, path2);
    CHECK(slurp(path) == slurp(path2));

    CHECK_THROWS_AS(write_series({}, tmp.file("empty.csv")), std::invalid_argument);
}

TEST_CASE("checkpoint round trip is bit-exact") {
    TempDir tmp;
    const Grid grid = Grid::make(64, 10.0);
    const GasParams gas{1.23, 1.0, 1.0};
    const TransportLaw law = TransportLaw::power(0.9, 1.1, 0.77, -0.3);
    State s = State::uniform(grid);
    SeededStream rng(1234);
    for (int i = 0; i < grid.n; ++i) {
        s.v[i] = 0.5 + rng.uniform01();
        s.u[i] = rng.uniform01() - 0.5;
        s.theta[i] = 0.5 + rng.uniform01();
    }
    s.t = 0.7071067811865476;

    const std::string path = tmp.file("state.ns1c");
    save_checkpoint(path, 0xDEADBEEFCAFEF00Dull, s, grid, gas, law);
    const LoadedCheckpoint cp = load_checkpoint(path);
    CHECK(cp.config_hash == 0xDEADBEEFCAFEF00Dull);
    CHECK(cp.n == 64);
    CHECK(cp.half_width == 10.0);
    CHECK(cp.gamma == 1.23);
    CHECK(cp.law.beta_mu == 0.77);
    CHECK(cp.state.t == s.t);
    CHECK(cp.state.v == s.v);
    CHECK(cp.state.u == s.u);
    CHECK(cp.state.theta == s.theta);

    // Save again: byte-identical file.
    const std::string path2 = tmp.file("state2.ns1c");
    save_checkpoint(path2, 0xDEADBEEFCAFEF00Dull, cp.state, grid, gas, law);
    CHECK(slurp(path) == slurp(path2));

    SUBCASE("garbage and truncation are rejected") {
        const std::string bad = tmp.file("bad.ns1c");
        std::ofstream(bad, std::ios::binary) << "not a checkpoint";
        CHECK_THROWS(load_checkpoint(bad));
        const std::string trunc = tmp.file("trunc.ns1c");
        const std::string full = slurp(path);
        std::ofstream(trunc, std::ios::binary) << full.substr(0, full.size() / 2);
        CHECK_THROWS(load_checkpoint(trunc));
    }
}

TEST_CASE("svg emission") {
    TempDir tmp;
    const std::string path = tmp.file("plot.svg");
    write_polyline_svg(path, "decay", {0.0, 1.0, 2.0}, {1.0, 0.5, 0.25});
    const std::string text = slurp(path);
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("<polyline") != std::string::npos);
    CHECK(text.find("decay") != std::string::npos);
    CHECK_THROWS(write_polyline_svg(tmp.file("bad.svg"), "x", {}, {}));
}
