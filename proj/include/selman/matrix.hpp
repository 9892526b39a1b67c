#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "selman/error.hpp"

namespace selman {

/// Dense row-major matrix with 64-bit float entries. Sized for desk-scale
/// work; the eigenvalue path additionally caps the dimension at 8.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  double at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(double c) const;
  Matrix transpose() const;

  std::vector<double> apply(const std::vector<double>& x) const;

  double det() const;  // LU with partial pivoting
  /// Solves A x = b for square A; raises NonFinite on a singular pivot.
  std::vector<double> solve(std::vector<double> b) const;

  double norm_max() const;
  double norm_fro() const;

  double max_abs_diff(const Matrix& rhs) const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

/// All eigenvalues with multiplicity via Hessenberg reduction followed by
/// shifted QR iteration. Requires a square matrix of dimension <= 8; raises
/// NoConvergence past the iteration cap. Output is sorted by (re, im).
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

/// |det(A - lambda I)| / max(||A||_F, eps)^n — the normalized residual the
/// acceptance gate bounds by 1e-7.
double eigen_residual(const Matrix& a, std::complex<double> lambda);

}  // namespace selman
