#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selman/expr.hpp"
#include "selman/matrix.hpp"
#include "selman/tolerance.hpp"

namespace selman {

/// Axis-aligned open box in R^k. Membership is strict on every face.
struct Box {
  std::vector<double> lo, hi;

  Box() = default;
  Box(std::vector<double> l, std::vector<double> h);
  static Box cube(size_t dim, double l, double h);

  size_t dim() const { return lo.size(); }
  double width(size_t j) const { return hi[j] - lo[j]; }
  bool contains(const std::vector<double>& x) const;
  bool operator==(const Box& other) const { return lo == other.lo && hi == other.hi; }
};

/// Concatenates boxes (product domain).
Box box_product(const Box& a, const Box& b);

/// Deterministic interior sample grid: per_axis points per axis at fractions
/// (i+1)/(per_axis+1). Row-major over axes.
std::vector<std::vector<double>> grid_points(const Box& box, int per_axis = 5);

struct ProbeReport {
  bool passes = false;
  int estimated_order = 0;  // consecutive derivative orders that verified
  std::string detail;
};

/// Analytic map R^k -> R^n: one expression per output component, evaluated
/// over an open domain box.
class VecMap {
 public:
  VecMap() = default;
  VecMap(size_t in_dim, size_t out_dim, std::vector<Expr> components, Box box);

  static VecMap identity(size_t dim, Box box);
  static VecMap constant(std::vector<double> value, Box box);

  size_t in_dim() const { return in_dim_; }
  size_t out_dim() const { return out_dim_; }
  const Box& box() const { return box_; }
  const Expr& component(size_t i) const { return comps_[i]; }
  const std::vector<Expr>& components() const { return comps_; }
  bool contains_abs() const;

  /// Raises DomainViolation outside the box, NonFinite on guarded ops.
  std::vector<double> eval(const std::vector<double>& x) const;

  /// n x k matrix of symbolic partials at x. Raises NonDifferentiable when
  /// an abs node is differentiated at a zero argument.
  Matrix jacobian_symbolic(const std::vector<double>& x) const;

  std::string to_string() const;
};

/// Central-difference Jacobian. order_of_accuracy 2 uses one step h,
/// 4 adds Richardson extrapolation from steps h and h/2. Base step is
/// 1e-3 of the box width per axis; raises DomainViolation when the stencil
/// leaves the box.
Matrix jacobian_fd(const VecMap& m, const std::vector<double>& x,
                   int order_of_accuracy = 4);

/// Verifies C^r behaviour at x: for each derivative order 1..r, one-sided
/// divided differences from both sides must converge (log2 error ratio
/// >= 0.75 across steps h, h/2, h/4, or drop below the rounding floor) and
/// agree with each other. abs-free maps short-circuit: symbolic
/// differentiability certifies every order.
ProbeReport smoothness_probe(const VecMap& m, const std::vector<double>& x,
                             int r, const TolerancePolicy& tol = {});

/// outer after inner, as expression substitution; domain is inner's box.
VecMap compose_maps(const VecMap& outer, const VecMap& inner);

/// Componentwise product map (a x b)(u, v) = (a(u), b(v)) on the product box.
VecMap pair_map(const VecMap& a, const VecMap& b);

/// Newton iteration for h(y) = target from start y0, clamped to h's box.
/// Returns the solution when the residual drops below tol, nullopt otherwise.
std::optional<std::vector<double>> newton_preimage(const VecMap& h,
                                                   const std::vector<double>& target,
                                                   std::vector<double> y0,
                                                   double tol, int max_iter = 32);

}  // namespace selman
