#include "selman/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace selman {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  size_t r = rows.size();
  size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c);
  size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c)
      raise(ErrorKind::InvalidArgument, "ragged matrix initializer");
    size_t j = 0;
    for (double v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    raise(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      double v = at(i, k);
      if (v == 0.0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    raise(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    raise(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
  return out;
}

Matrix Matrix::scaled(double c) const {
  Matrix out = *this;
  for (double& v : out.a_) v *= c;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::vector<double> Matrix::apply(const std::vector<double>& x) const {
  if (x.size() != cols_)
    raise(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<double> y(rows_, 0.0);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

namespace {

// LU factorization with partial pivoting, in place. Returns the parity sign,
// 0 when a pivot vanishes.
int lu_decompose(Matrix& m, std::vector<size_t>& perm) {
  size_t n = m.rows();
  perm.resize(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  int sign = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    double best = std::fabs(m.at(k, k));
    for (size_t i = k + 1; i < n; ++i) {
      double v = std::fabs(m.at(i, k));
      if (v > best) { best = v; piv = i; }
    }
    if (best == 0.0) return 0;
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      std::swap(perm[k], perm[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      double f = m.at(i, k) / m.at(k, k);
      m.at(i, k) = f;
      for (size_t j = k + 1; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return sign;
}

}  // namespace

double Matrix::det() const {
  if (!square()) raise(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  Matrix lu = *this;
  std::vector<size_t> perm;
  int sign = lu_decompose(lu, perm);
  if (sign == 0) return 0.0;
  double d = sign;
  for (size_t i = 0; i < rows_; ++i) d *= lu.at(i, i);
  return d;
}

std::vector<double> Matrix::solve(std::vector<double> b) const {
  if (!square() || b.size() != rows_)
    raise(ErrorKind::DimensionMismatch, "solve shape mismatch");
  Matrix lu = *this;
  std::vector<size_t> perm;
  if (lu_decompose(lu, perm) == 0)
    raise(ErrorKind::NonFinite, "singular system in solve");
  size_t n = rows_;
  std::vector<double> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[perm[i]];
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j) x[i] -= lu.at(i, j) * x[j];
  for (size_t i = n; i-- > 0;) {
    for (size_t j = i + 1; j < n; ++j) x[i] -= lu.at(i, j) * x[j];
    x[i] /= lu.at(i, i);
  }
  return x;
}

double Matrix::norm_max() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::fabs(v));
  return m;
}

double Matrix::norm_fro() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double Matrix::max_abs_diff(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    raise(ErrorKind::DimensionMismatch, "matrix comparison shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a_.size(); ++i)
    m = std::max(m, std::fabs(a_[i] - rhs.a_[i]));
  return m;
}

// ---------------------------------------------------------------------------
// Eigenvalues: Householder reduction to upper Hessenberg form, then complex
// single-shift (Wilkinson) QR with Givens rotations and bottom-up deflation.

namespace {

using cplx = std::complex<double>;

void hessenberg_reduce(Matrix& h) {
  size_t n = h.rows();
  for (size_t k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (size_t i = k + 1; i < n; ++i) scale += std::fabs(h.at(i, k));
    if (scale == 0.0) continue;
    std::vector<double> v(n, 0.0);
    double sigma = 0.0;
    for (size_t i = k + 1; i < n; ++i) {
      v[i] = h.at(i, k) / scale;
      sigma += v[i] * v[i];
    }
    double alpha = std::sqrt(sigma);
    if (v[k + 1] > 0) alpha = -alpha;
    double beta = sigma - v[k + 1] * alpha;
    if (beta == 0.0) continue;
    v[k + 1] -= alpha;
    // H := P H P with P = I - v v^T / beta
    for (size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (size_t i = k + 1; i < n; ++i) s += v[i] * h.at(i, j);
      s /= beta;
      for (size_t i = k + 1; i < n; ++i) h.at(i, j) -= s * v[i];
    }
    for (size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (size_t j = k + 1; j < n; ++j) s += h.at(i, j) * v[j];
      s /= beta;
      for (size_t j = k + 1; j < n; ++j) h.at(i, j) -= s * v[j];
    }
    h.at(k + 1, k) = alpha * scale;
    for (size_t i = k + 2; i < n; ++i) h.at(i, k) = 0.0;
  }
}

// Eigenvalue of the trailing 2x2 block closest to its bottom-right entry.
cplx wilkinson_shift(const std::vector<cplx>& h, size_t n, size_t hi) {
  cplx a = h[(hi - 1) * n + (hi - 1)], b = h[(hi - 1) * n + hi];
  cplx c = h[hi * n + (hi - 1)], d = h[hi * n + hi];
  cplx tr2 = (a + d) * 0.5;
  cplx disc = std::sqrt(tr2 * tr2 - (a * d - b * c));
  cplx l1 = tr2 + disc, l2 = tr2 - disc;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

}  // namespace

std::vector<cplx> eigenvalues(const Matrix& a) {
  if (!a.square()) raise(ErrorKind::InvalidArgument, "eigenvalues of non-square matrix");
  size_t n = a.rows();
  if (n == 0 || n > 8)
    raise(ErrorKind::InvalidArgument, "eigenvalue kernel handles 1 <= dim <= 8");

  Matrix hr = a;
  hessenberg_reduce(hr);
  std::vector<cplx> h(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) h[i * n + j] = hr.at(i, j);

  const double eps = 1e-15;
  double anorm = std::max(a.norm_fro(), 1e-300);
  std::vector<cplx> eig(n);

  size_t hi = n - 1;
  int its = 0;
  while (true) {
    // Deflate all converged subdiagonals at the bottom of the active block.
    while (hi > 0) {
      double sub = std::abs(h[hi * n + (hi - 1)]);
      double diag = std::abs(h[(hi - 1) * n + (hi - 1)]) + std::abs(h[hi * n + hi]);
      if (diag == 0.0) diag = anorm;
      if (sub <= eps * diag) {
        h[hi * n + (hi - 1)] = 0.0;
        eig[hi] = h[hi * n + hi];
        --hi;
        its = 0;
      } else {
        break;
      }
    }
    if (hi == 0) {
      eig[0] = h[0];
      break;
    }
    // Active block [lo, hi]: lowest index whose subdiagonal is negligible.
    size_t lo = hi;
    while (lo > 0) {
      double sub = std::abs(h[lo * n + (lo - 1)]);
      double diag = std::abs(h[(lo - 1) * n + (lo - 1)]) + std::abs(h[lo * n + lo]);
      if (diag == 0.0) diag = anorm;
      if (sub <= eps * diag) {
        h[lo * n + (lo - 1)] = 0.0;
        break;
      }
      --lo;
    }

    if (++its > 60)
      raise(ErrorKind::NoConvergence, "shifted QR iteration cap exceeded");
    cplx mu = wilkinson_shift(h, n, hi);
    if (its % 14 == 13) {
      // Exceptional shift to break rotational cycles (permutation-like blocks).
      mu = h[hi * n + hi] + cplx(0.75 * std::abs(h[hi * n + (hi - 1)]), 0.0);
    }

    // One shifted QR sweep on the active block via Givens rotations:
    // H - mu I = Q R, then H := R Q + mu I.
    for (size_t i = lo; i <= hi; ++i) h[i * n + i] -= mu;
    std::vector<cplx> cs(hi), sn(hi);
    for (size_t k = lo; k < hi; ++k) {
      cplx f = h[k * n + k], g = h[(k + 1) * n + k];
      double r = std::hypot(std::abs(f), std::abs(g));
      if (r == 0.0) { cs[k] = 1.0; sn[k] = 0.0; continue; }
      cs[k] = f / r;  // note: complex "cosine" carries f's phase
      sn[k] = g / r;
      for (size_t j = k; j <= hi; ++j) {
        cplx t1 = h[k * n + j], t2 = h[(k + 1) * n + j];
        h[k * n + j] = std::conj(cs[k]) * t1 + std::conj(sn[k]) * t2;
        h[(k + 1) * n + j] = -sn[k] * t1 + cs[k] * t2;
      }
    }
    for (size_t k = lo; k < hi; ++k) {
      size_t top = std::min(hi, k + 1);
      for (size_t i = lo; i <= top; ++i) {
        cplx t1 = h[i * n + k], t2 = h[i * n + (k + 1)];
        h[i * n + k] = t1 * cs[k] + t2 * sn[k];
        h[i * n + (k + 1)] = -t1 * std::conj(sn[k]) + t2 * std::conj(cs[k]);
      }
    }
    for (size_t i = lo; i <= hi; ++i) h[i * n + i] += mu;
  }

  // Real input: scrub rounding fuzz off real eigenvalues so conjugate pairs
  // and sorting stay stable.
  for (auto& l : eig)
    if (std::fabs(l.imag()) <= 1e-13 * (1.0 + std::abs(l))) l = cplx(l.real(), 0.0);

  std::sort(eig.begin(), eig.end(), [](const cplx& x, const cplx& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return eig;
}

double eigen_residual(const Matrix& a, cplx lambda) {
  size_t n = a.rows();
  std::vector<cplx> m(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i * n + j] = cplx(a.at(i, j), 0.0) - (i == j ? lambda : cplx(0.0));
  // Complex LU with partial pivoting; determinant accumulates pivots.
  cplx d(1.0, 0.0);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    double best = std::abs(m[k * n + k]);
    for (size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i * n + k]) > best) { best = std::abs(m[i * n + k]); piv = i; }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      d = -d;
    }
    d *= m[k * n + k];
    for (size_t i = k + 1; i < n; ++i) {
      cplx f = m[i * n + k] / m[k * n + k];
      for (size_t j = k + 1; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
    }
  }
  double denom = std::max(a.norm_fro(), 1e-30);
  return std::abs(d) / std::pow(denom, static_cast<double>(n));
}

}  // namespace selman
