#pragma once

#include "selman/error.hpp"

namespace selman {

/// Numeric slack shared by every validator.
///   eq_tol          observer/value equality
///   deriv_tol       derivative and commutation agreement
///   unit_circle_tol eigenvalue modulus vs 1
struct TolerancePolicy {
  double eq_tol = 1e-9;
  double deriv_tol = 1e-6;
  double unit_circle_tol = 1e-8;

  void validate() const {
    if (!(eq_tol > 0) || !(deriv_tol > 0) || !(unit_circle_tol > 0))
      raise(ErrorKind::InvalidArgument, "tolerances must be strictly positive");
  }
};

}  // namespace selman
