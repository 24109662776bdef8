#pragma once

#include <stdexcept>
#include <string>

namespace futaki {

/// Broad failure class; the CLI maps each one to an exit status.
enum class ErrorCategory {
    usage,        // caller passed incompatible operands or options
    parse,        // malformed scenario text
    validation,   // well-formed input violating a data invariant
    computation,  // pole, degeneracy, division by zero
    mismatch,     // cross-validation disagreement
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(ErrorCategory::usage, what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorCategory::parse, what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(ErrorCategory::validation, what) {}
};

/// Arithmetic domain violation: zero divisor, gcd(0, 0), and similar.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorCategory::computation, what) {}
};

/// Evaluation of a rational function at a root of its denominator.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

/// Fixed-point datum whose equivariant Euler class has zero scalar part.
struct DegenerateError : DomainError {
    using DomainError::DomainError;
};

/// Residue sums that fail to cancel to a polynomial.
struct InconsistentResidueError : Error {
    explicit InconsistentResidueError(const std::string& what)
        : Error(ErrorCategory::validation, what) {}
};

/// Unbounded, empty or lower-dimensional polytope realization.
struct GeometryError : Error {
    explicit GeometryError(const std::string& what) : Error(ErrorCategory::computation, what) {}
};

}  // namespace futaki
