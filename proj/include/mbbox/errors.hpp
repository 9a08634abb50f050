#pragma once

#include <stdexcept>
#include <string>

namespace mbbox {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input errors: the caller asked for something outside the admissible domain.
class InputError : public Error {
public:
    using Error::Error;
};

class PoleError : public InputError {
public:
    using InputError::InputError;
};

class DomainError : public InputError {
public:
    using InputError::InputError;
};

class DivisionByZeroSeries : public DomainError {
public:
    using DomainError::DomainError;
};

class EuclideanRegionViolation : public InputError {
public:
    using InputError::InputError;
};

class DegenerateKinematics : public InputError {
public:
    using InputError::InputError;
};

class InfeasibleContour : public InputError {
public:
    using InputError::InputError;
};

// Numerical errors: the input was fine but an algorithm failed to reach tolerance.
class NumericalError : public Error {
public:
    using Error::Error;
};

class NonConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Raised by quadrature drivers when refinement does not settle.
class NotConverged : public NonConvergence {
public:
    using NonConvergence::NonConvergence;
};

class OverflowError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace mbbox
