#pragma once

#include <stdexcept>
#include <string>

namespace sml {

// Argument outside the mathematical domain of an operation
// (gamma pole, negative radius, p <= 1, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A numerical routine failed to reach its accuracy target: series truncation
// budget exhausted, quadrature refinement mismatch, rejected regression fit.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sml
