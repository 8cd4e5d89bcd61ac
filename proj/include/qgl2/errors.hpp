#pragma once

#include <stdexcept>
#include <string>

namespace qgl2 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (non-dominant weight,
/// weight outside a region, invalid modular parameters, negative integer).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Exact 64-bit arithmetic would have overflowed.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A character passed to chi_decompose is not invariant under e1 <-> e2.
class NotSymmetricError : public Error {
public:
    using Error::Error;
};

/// Leading-term subtraction reached a non-dominant leading monomial.
class NotRepresentableError : public Error {
public:
    using Error::Error;
};

/// Greedy tilting subtraction drove a coefficient below zero.
class NegativeCoefficientError : public Error {
public:
    using Error::Error;
};

/// A weight fell outside the saturated region for the modulus in use.
class RegionError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace qgl2
