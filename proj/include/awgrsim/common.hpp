#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace awgrsim {

// Racks, ports, positions and wavelengths are 1-indexed everywhere.
using RackId = int;
using Wavelength = int;

// Invalid experiment description (bad dimensions, unreadable config, ...).
// Distinct from std::invalid_argument, which flags bad call arguments.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kSchemaVersion = 1;

} // namespace awgrsim
