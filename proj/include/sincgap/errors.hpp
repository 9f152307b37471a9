#pragma once

#include <stdexcept>
#include <string>

namespace sincgap {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input: bad parameter values, empty intervals, exhausted budgets.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Input outside the domain where an operation is defined (poles, integers, y = 0).
class DomainError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// A numerical procedure failed to converge or produced an inconsistent value.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Argument-principle contour kept passing too close to a zero.
class ContourError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Monte Carlo estimator degenerated (no hits to condition on, ESS collapse).
class SamplingError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace sincgap
