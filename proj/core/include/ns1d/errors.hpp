#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ns1d {

// Thrown when a run leaves the non-vacuum regime: v or theta at some cell
// dropped to or below the positivity floor. Callers are expected to treat
// this as a physics outcome (exit code 2 in the CLI), not a tooling bug.
class RegimeExit : public std::runtime_error {
public:
    RegimeExit(double time, std::size_t index, std::string field, double value)
        : std::runtime_error("regime exit: " + field + "[" + std::to_string(index) +
                             "] = " + std::to_string(value) + " at t = " + std::to_string(time)),
          time(time), index(index), field(std::move(field)), value(value) {}

    double time;
    std::size_t index;
    std::string field;
    double value;
};

// Configuration problems: unknown key, malformed value, violated bound.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ns1d
