#pragma once

#include <stdexcept>
#include <string>

namespace evst {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain (rho <= 0, off-boundary trace, ...).
struct DomainError : Error {
  using Error::Error;
};

/// |d2Phi| fell below kappa0.
struct NondegeneracyError : Error {
  using Error::Error;
};

/// Frequency sits on a pole of the reduced symbol; names the vanishing factor.
struct PoleSingularity : Error {
  PoleSingularity(const std::string& msg, std::string factor_)
      : Error(msg), factor(std::move(factor_)) {}
  std::string factor;
};

/// omega = 0: the reduced symbol is not diagonalizable there.
struct GlancingDegeneracy : Error {
  using Error::Error;
};

/// det(Q0) too small for the symmetrizer construction.
struct NearGlancing : Error {
  using Error::Error;
};

/// A defining linear system of the triangularization failed its residual check.
struct ConstructionError : Error {
  using Error::Error;
};

struct UnsupportedRegime : Error {
  using Error::Error;
};

/// Sampling grid too coarse for the requested estimate.
struct ResolutionError : Error {
  using Error::Error;
};

struct AdmissibilityViolation : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace evst
