#pragma once

#include <stdexcept>
#include <string>

namespace hillgap {

/// Bad user input: malformed spec files, out-of-range parameters, unknown
/// names. Maps to process exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure: eigensolver did not converge, oracle bracketing failed.
/// Maps to process exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A structural invariant of the computed spectrum failed (eigenvalue
/// interlacing). Maps to process exit code 4.
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hillgap
