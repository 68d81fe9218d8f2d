#pragma once

#include <stdexcept>
#include <string>

namespace termcut {

// Bad arguments, malformed input files, violated preconditions.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a configured enumeration limit (not a wrong answer).
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// Minimum terminal cut is zero; the counting theorem does not apply.
struct DegenerateInstance : std::runtime_error {
    explicit DegenerateInstance(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace termcut
