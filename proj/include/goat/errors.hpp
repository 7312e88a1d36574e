#pragma once

#include <stdexcept>
#include <string>

namespace goat {

/// Argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Base for failures of a numerical procedure on valid input.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature did not reach its tolerance within the subdivision limit.
class ConvergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Root bracket endpoints do not straddle zero.
class BracketError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Contour integral too small to divide by, or a non-finite sample on the contour.
class DegenerateError : public NumericError {
public:
    using NumericError::NumericError;
};

/// A computed result failed a post-condition check (realness, zero count).
class ValidationError : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace goat
