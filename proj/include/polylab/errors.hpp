#pragma once

#include <stdexcept>
#include <string>

namespace polylab {

// Invalid user-supplied configuration (bad distribution parameters, bad
// dimensions, malformed config file). CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// The LP solver could not make progress within its tolerances. CLI exit code 3.
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// A declared invariant failed at runtime. CLI exit code 4.
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds the configured memory cap.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polylab
