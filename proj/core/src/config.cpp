#include "ns1d/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "ns1d/errors.hpp"

namespace ns1d {

TransportLaw RunConfig::law() const {
    if (kind == TransportKind::constant) {
        return TransportLaw::constant_coefficients(mu0, kappa0);
    }
    return TransportLaw::power(mu0, kappa0, beta_mu, beta_kappa);
}

std::string format_double(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_double_short(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text, const std::string& key) {
    std::string t = text;
    if (t == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    double value = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
        throw ConfigError(key + ": not a number: '" + text + "'");
    }
    return value;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long parse_long(const std::string& text, const std::string& key) {
    long value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw ConfigError(key + ": not an integer: '" + text + "'");
    }
    return value;
}

std::uint64_t parse_u64(const std::string& text, const std::string& key) {
    std::uint64_t value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw ConfigError(key + ": not an unsigned integer: '" + text + "'");
    }
    return value;
}

bool parse_bool(const std::string& text, const std::string& key) {
    if (text == "true") return true;
    if (text == "false") return false;
    throw ConfigError(key + ": expected true or false, got '" + text + "'");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        items.push_back(trim(item));
    }
    return items;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    bool saw_alpha = false;
    bool saw_beta = false;
    double alpha = 0.0;

    std::string section;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("line " + std::to_string(line_no) +
                                  ": malformed section header '" + line + "'");
            }
            section = line.substr(1, line.size() - 2);
            if (section != "gas" && section != "transport" && section != "grid" &&
                section != "ic" && section != "control" && section != "output" &&
                section != "experiment") {
                throw ConfigError("unknown section [" + section + "]");
            }
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value, got '" +
                              line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string qual = section.empty() ? key : section + "." + key;

        if (section == "gas") {
            if (key == "gamma") cfg.gamma = parse_double(value, qual);
            else if (key == "R") cfg.R = parse_double(value, qual);
            else if (key == "A") cfg.A = parse_double(value, qual);
            else throw ConfigError("unknown key '" + key + "' in section [gas]");
        } else if (section == "transport") {
            if (key == "kind") {
                if (value == "power_law") cfg.kind = TransportKind::power_law;
                else if (value == "constant") cfg.kind = TransportKind::constant;
                else throw ConfigError(qual + ": expected power_law or constant, got '" + value + "'");
            } else if (key == "mu0") cfg.mu0 = parse_double(value, qual);
            else if (key == "kappa0") cfg.kappa0 = parse_double(value, qual);
            else if (key == "beta_mu") { cfg.beta_mu = parse_double(value, qual); saw_beta = true; }
            else if (key == "beta_kappa") { cfg.beta_kappa = parse_double(value, qual); saw_beta = true; }
            else if (key == "alpha") { alpha = parse_double(value, qual); saw_alpha = true; }
            else throw ConfigError("unknown key '" + key + "' in section [transport]");
        } else if (section == "grid") {
            if (key == "n") cfg.n = static_cast<int>(parse_long(value, qual));
            else if (key == "L") cfg.L = parse_double(value, qual);
            else throw ConfigError("unknown key '" + key + "' in section [grid]");
        } else if (section == "ic") {
            if (key == "family") cfg.family = ic_family_from_name(value);
            else if (key == "amplitude") cfg.amplitude = parse_double(value, qual);
            else if (key == "support") cfg.support = parse_double(value, qual);
            else if (key == "seed") cfg.seed = parse_u64(value, qual);
            else throw ConfigError("unknown key '" + key + "' in section [ic]");
        } else if (section == "control") {
            if (key == "cfl_hyperbolic") cfg.cfl_hyperbolic = parse_double(value, qual);
            else if (key == "cfl_parabolic") cfg.cfl_parabolic = parse_double(value, qual);
            else if (key == "dt_max") cfg.dt_max = parse_double(value, qual);
            else if (key == "positivity_floor") cfg.positivity_floor = parse_double(value, qual);
            else if (key == "t_end") cfg.t_end = parse_double(value, qual);
            else if (key == "record_every") cfg.record_every = static_cast<int>(parse_long(value, qual));
            else throw ConfigError("unknown key '" + key + "' in section [control]");
        } else if (section == "output") {
            if (key == "dir") cfg.dir = value;
            else if (key == "emit_svg") cfg.emit_svg = parse_bool(value, qual);
            else throw ConfigError("unknown key '" + key + "' in section [output]");
        } else if (section == "experiment") {
            if (key == "levels") {
                cfg.levels.clear();
                for (const std::string& item : split_list(value)) {
                    cfg.levels.push_back(static_cast<int>(parse_long(item, qual)));
                }
            } else if (key == "gamma_list") {
                cfg.gamma_list.clear();
                for (const std::string& item : split_list(value)) {
                    cfg.gamma_list.push_back(parse_double(item, qual));
                }
            } else throw ConfigError("unknown key '" + key + "' in section [experiment]");
        } else {
            throw ConfigError("key '" + key + "' outside of any section");
        }
    }

    if (saw_alpha && saw_beta) {
        throw ConfigError("transport.alpha conflicts with explicit beta_mu/beta_kappa");
    }
    if (saw_alpha) {
        const double beta = transport_exponent(alpha);
        cfg.beta_mu = beta;
        cfg.beta_kappa = beta;
    }
    if (cfg.kind == TransportKind::constant) {
        cfg.beta_mu = 0.0;
        cfg.beta_kappa = 0.0;
    }

    // Re-validate every numeric constraint of the owning types.
    if (!(cfg.gamma > 1.0)) throw ConfigError("gamma: must be > 1, got " + format_double(cfg.gamma));
    if (!(cfg.R > 0.0)) throw ConfigError("R: must be > 0, got " + format_double(cfg.R));
    if (!(cfg.A > 0.0)) throw ConfigError("A: must be > 0, got " + format_double(cfg.A));
    if (!(cfg.mu0 > 0.0)) throw ConfigError("mu0: must be > 0, got " + format_double(cfg.mu0));
    if (!(cfg.kappa0 > 0.0)) throw ConfigError("kappa0: must be > 0, got " + format_double(cfg.kappa0));
    if (cfg.n < 16 || cfg.n % 2 != 0) throw ConfigError("n: must be even and >= 16, got " + std::to_string(cfg.n));
    if (!(cfg.L > 0.0)) throw ConfigError("L: must be > 0, got " + format_double(cfg.L));
    if (!(cfg.amplitude >= 0.0)) throw ConfigError("amplitude: must be >= 0, got " + format_double(cfg.amplitude));
    if (!(cfg.support > 0.0)) throw ConfigError("support: must be > 0, got " + format_double(cfg.support));
    if (!(cfg.cfl_hyperbolic > 0.0 && cfg.cfl_hyperbolic <= 1.0))
        throw ConfigError("cfl_hyperbolic: must be in (0, 1], got " + format_double(cfg.cfl_hyperbolic));
    if (!(cfg.cfl_parabolic > 0.0 && cfg.cfl_parabolic <= 1.0))
        throw ConfigError("cfl_parabolic: must be in (0, 1], got " + format_double(cfg.cfl_parabolic));
    if (!(cfg.dt_max > 0.0)) throw ConfigError("dt_max: must be > 0, got " + format_double(cfg.dt_max));
    if (!(cfg.positivity_floor > 0.0))
        throw ConfigError("positivity_floor: must be > 0, got " + format_double(cfg.positivity_floor));
    if (!(cfg.t_end >= 0.0)) throw ConfigError("t_end: must be >= 0, got " + format_double(cfg.t_end));
    if (cfg.record_every < 1) throw ConfigError("record_every: must be >= 1, got " + std::to_string(cfg.record_every));
    if (cfg.dir.empty()) throw ConfigError("dir: must not be empty");
    for (int n : cfg.levels) {
        if (n < 16 || n % 2 != 0) throw ConfigError("levels: entries must be even and >= 16, got " + std::to_string(n));
    }
    for (double g : cfg.gamma_list) {
        if (!(g > 1.0)) throw ConfigError("gamma_list: entries must be > 1, got " + format_double(g));
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string canonical_config_text(const RunConfig& cfg) {
    std::ostringstream out;
    out << "[gas]\n";
    out << "gamma = " << format_double(cfg.gamma) << "\n";
    out << "R = " << format_double(cfg.R) << "\n";
    out << "A = " << format_double(cfg.A) << "\n";
    out << "[transport]\n";
    out << "kind = " << (cfg.kind == TransportKind::constant ? "constant" : "power_law") << "\n";
    out << "mu0 = " << format_double(cfg.mu0) << "\n";
    out << "kappa0 = " << format_double(cfg.kappa0) << "\n";
    out << "beta_mu = " << format_double(cfg.beta_mu) << "\n";
    out << "beta_kappa = " << format_double(cfg.beta_kappa) << "\n";
    out << "[grid]\n";
    out << "n = " << cfg.n << "\n";
    out << "L = " << format_double(cfg.L) << "\n";
    out << "[ic]\n";
    out << "family = " << ic_family_name(cfg.family) << "\n";
    out << "amplitude = " << format_double(cfg.amplitude) << "\n";
    out << "support = " << format_double(cfg.support) << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "[control]\n";
    out << "cfl_hyperbolic = " << format_double(cfg.cfl_hyperbolic) << "\n";
    out << "cfl_parabolic = " << format_double(cfg.cfl_parabolic) << "\n";
    out << "dt_max = " << format_double(cfg.dt_max) << "\n";
    out << "positivity_floor = " << format_double(cfg.positivity_floor) << "\n";
    out << "t_end = " << format_double(cfg.t_end) << "\n";
    out << "record_every = " << cfg.record_every << "\n";
    out << "[output]\n";
    out << "dir = " << cfg.dir << "\n";
    out << "emit_svg = " << (cfg.emit_svg ? "true" : "false") << "\n";
    out << "[experiment]\n";
    out << "levels = ";
    for (std::size_t i = 0; i < cfg.levels.size(); ++i) {
        out << (i ? "," : "") << cfg.levels[i];
    }
    out << "\n";
    out << "gamma_list = ";
    for (std::size_t i = 0; i < cfg.gamma_list.size(); ++i) {
        out << (i ? "," : "") << format_double(cfg.gamma_list[i]);
    }
    out << "\n";
    return out.str();
}

std::uint64_t config_hash(const RunConfig& cfg) {
    const std::string text = canonical_config_text(cfg);
    std::uint64_t hash = 0xCBF29CE484222325ull;
    for (unsigned char byte : text) {
        hash ^= byte;
        hash *= 0x100000001B3ull;
    }
    return hash;
}

} // namespace ns1d
