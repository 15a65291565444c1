#pragma once

#include <stdexcept>
#include <string>

namespace hyperwalk {

// Requested problem size exceeds what this build is allowed to allocate.
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// Iteration failed to converge or input failed numeric validation.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// No avoided crossing exists for the requested mode.
struct no_crossing_error : std::runtime_error {
    explicit no_crossing_error(const std::string& what) : std::runtime_error(what) {}
};

// Root bracket shows no sign change.
struct branch_error : std::runtime_error {
    explicit branch_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested too close to a pole of the secular function.
struct pole_error : std::runtime_error {
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperwalk
