#pragma once

#include <stdexcept>
#include <string>

namespace acs {

/// Input data failed a mathematical invariant (not-Lagrangian image,
/// dimension identity violation, malformed phase table, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or dense-matrix cap would be exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or unsupported serialized document.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation is not defined for the given input (e.g. closed-form entropy
/// on a state with a nontrivial phase).
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

/// A quantity that is provably constant/exact came out otherwise; always a bug
/// in the input model or in this library, never an expected runtime condition.
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

/// Random generation failed to hit a full-rank draw within the retry budget.
class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure in the spectral path (eigensolver non-convergence).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace acs
