#pragma once

#include <stdexcept>
#include <string>

namespace dpc {

/// Base class for all simulator errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration, parameters, or domain values. CLI exit code 1.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Runtime simulation violation (e.g. a threshold crossing outside its
/// allowed window in strict mode). CLI exit code 2.
class SimulationError : public Error {
public:
    explicit SimulationError(const std::string& msg) : Error(msg) {}
};

/// Filesystem / stream failure. CLI exit code 3.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace dpc
