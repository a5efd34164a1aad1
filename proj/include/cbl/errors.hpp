#pragma once

#include <stdexcept>
#include <string>

namespace cbl {

// Invalid argument or malformed input document.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a guarded exhaustive-enumeration budget.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Operation requires a flat system but kappa > 0.
struct curvature_error : std::runtime_error {
    explicit curvature_error(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal invariant; unreachable under documented preconditions.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cbl
