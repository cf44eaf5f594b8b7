#pragma once

#include <stdexcept>
#include <string>

namespace linelab {

// Thrown when an input file (geometry, sensors, faces, config) is malformed.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an algorithm fails numerically (non-convergence, no witness,
// insufficient scales). Distinct from precondition violations, which use
// std::domain_error / std::invalid_argument.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

} // namespace linelab
