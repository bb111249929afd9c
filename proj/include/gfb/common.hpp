#pragma once

#include <stdexcept>
#include <string>

namespace gfb {

// Input/domain violations: caller passed something outside the documented
// contract (maps to CLI exit code 2).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failures: non-convergence, loss of a valid branch (exit code 3).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr double kPi = 3.14159265358979323846;

} // namespace gfb
