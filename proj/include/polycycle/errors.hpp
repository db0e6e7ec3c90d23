#pragma once

#include <stdexcept>
#include <string>

namespace polycycle {

/// Input data violates a documented invariant (non-simple polygon, point on
/// the boundary, duplicate points, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed text in an instance or solution stream. Carries the 1-based
/// line number the parser choked on.
struct FormatError : std::runtime_error {
    FormatError(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
    int line;
};

/// Random generation could not satisfy its postcondition within the retry
/// budget (e.g. polygon untangling kept failing, or the polygon interior is
/// too small for the requested number of distinct grid points).
struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid solver or generator configuration (operator rates not summing to
/// one, version/rate mismatch, out-of-range sizes).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace polycycle
