#include "ns1d/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace ns1d {

static_assert(std::endian::native == std::endian::little,
              "checkpoint layout assumes a little-endian host");

namespace {

template <typename T>
void put(std::ofstream& out, T value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::ifstream& in, const std::string& path) {
    T value;
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!in) {
        throw std::runtime_error("checkpoint truncated: " + path);
    }
    return value;
}

void put_field(std::ofstream& out, const Field& f) {
    out.write(reinterpret_cast<const char*>(f.data()),
              static_cast<std::streamsize>(f.size() * sizeof(double)));
}

void get_field(std::ifstream& in, Field& f, std::size_t n, const std::string& path) {
    f.resize(n);
    in.read(reinterpret_cast<char*>(f.data()), static_cast<std::streamsize>(n * sizeof(double)));
    if (!in) {
        throw std::runtime_error("checkpoint truncated: " + path);
    }
}

} // namespace

void save_checkpoint(const std::string& path, std::uint64_t config_hash, const State& state,
                     const Grid& grid, const GasParams& gas, const TransportLaw& law) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open checkpoint for writing: " + path);
    }
    out.write("NS1D", 4);
    put<std::uint32_t>(out, 1);
    put<std::uint64_t>(out, config_hash);
    put<double>(out, state.t);
    put<std::uint64_t>(out, static_cast<std::uint64_t>(grid.n));
    put<double>(out, grid.half_width);
    put<double>(out, gas.gamma);
    put<std::uint8_t>(out, static_cast<std::uint8_t>(law.kind));
    put<double>(out, law.mu0);
    put<double>(out, law.kappa0);
    put<double>(out, law.beta_mu);
    put<double>(out, law.beta_kappa);
    put_field(out, state.v);
    put_field(out, state.u);
    put_field(out, state.theta);
    out.flush();
    if (!out) {
        throw std::runtime_error("write failure on checkpoint: " + path);
    }
}

LoadedCheckpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open checkpoint: " + path);
    }
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "NS1D", 4) != 0) {
        throw std::runtime_error("not a checkpoint file: " + path);
    }
    const auto version = get<std::uint32_t>(in, path);
    if (version != 1) {
        throw std::runtime_error("unsupported checkpoint version " + std::to_string(version));
    }
    LoadedCheckpoint cp;
    cp.config_hash = get<std::uint64_t>(in, path);
    cp.state.t = get<double>(in, path);
    cp.n = get<std::uint64_t>(in, path);
    cp.half_width = get<double>(in, path);
    cp.gamma = get<double>(in, path);
    const auto kind = get<std::uint8_t>(in, path);
    if (kind > 1) {
        throw std::runtime_error("bad transport kind in checkpoint: " + path);
    }
    cp.law.kind = static_cast<TransportKind>(kind);
    cp.law.mu0 = get<double>(in, path);
    cp.law.kappa0 = get<double>(in, path);
    cp.law.beta_mu = get<double>(in, path);
    cp.law.beta_kappa = get<double>(in, path);
    get_field(in, cp.state.v, cp.n, path);
    get_field(in, cp.state.u, cp.n, path);
    get_field(in, cp.state.theta, cp.n, path);
    return cp;
}

} // namespace ns1d
