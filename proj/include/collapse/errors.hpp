#pragma once

#include <stdexcept>
#include <string>

namespace collapse {

/// Violation of a mathematical domain constraint (curvature/length admissibility,
/// conjugate-point limits, size gates). The message states the violated inequality.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally invalid input (dimension mismatch, non-metric matrix, bad rule string).
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace collapse
