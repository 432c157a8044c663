#pragma once

#include <stdexcept>

namespace gaussent {

/// Invalid argument (non-finite input, negative time, model mismatch, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Matrix does not match the sparse two-mode standard form.
struct NotStandardFormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Second moments violate the uncertainty principle where a physical state
/// is required.
struct UnphysicalStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Covariance matrix is singular or not positive definite where an inverse
/// is required.
struct SingularCovarianceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numeric routine lost accuracy beyond its tolerance.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fixed-step integration produced non-finite values.
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gaussent
