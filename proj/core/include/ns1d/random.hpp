#pragma once

#include <cstdint>

namespace ns1d {

// splitmix64 stream: portable and deterministic, independent of standard
// library distribution internals.
struct SeededStream {
    std::uint64_t s;

    explicit SeededStream(std::uint64_t seed) : s(seed) {}

    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace ns1d
