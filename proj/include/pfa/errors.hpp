#pragma once

#include <stdexcept>
#include <string>

namespace pfa {

// Invalid construction parameters or malformed input data.
struct ParameterError : std::runtime_error {
    explicit ParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested computation exceeds the configured size budget.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// An extension problem whose realizability obstruction does not vanish.
struct ObstructionError : std::runtime_error {
    explicit ObstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Floating-point classification fell between the identity and nontrivial
// thresholds; carries a condition report in the message.
struct AmbiguityError : std::runtime_error {
    explicit AmbiguityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pfa
