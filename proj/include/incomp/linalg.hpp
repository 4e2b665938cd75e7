// Copyright 2026 The incomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex linear algebra for the small (<= 12 dimensional) objects used
// throughout the library: kets, operators, reduced density matrices, and two
// Hermitian eigenvalue routines that never share code paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "incomp/errors.hpp"

namespace incomp {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kNormTol = 1e-12;

/// Sorts in nonincreasing order; equal values keep their original order.
inline void sort_descending(std::vector<double>& v) {
  std::stable_sort(v.begin(), v.end(), [](double a, double b) { return a > b; });
}

/// Row-major dense complex matrix.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw PreconditionError("Matrix: dimensions must be positive");
    }
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
      throw PreconditionError("Matrix: dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
      throw PreconditionError("Matrix: entry count must equal rows * cols");
    }
  }

  Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) {
      throw PreconditionError("Matrix: dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw PreconditionError("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(std::span<const double> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return data_; }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  bool is_hermitian(double tol = kHermitianTol) const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i; j < cols_; ++j) {
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
      }
    }
    return true;
  }

  /// Largest entrywise modulus of (*this - other).
  double max_abs_diff(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw PreconditionError("Matrix::max_abs_diff: shape mismatch");
    }
    double d = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      d = std::max(d, std::abs(data_[k] - other.data_[k]));
    }
    return d;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("Matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend Matrix operator*(Complex s, Matrix m) {
    for (auto& e : m.data_) e *= s;
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw PreconditionError("Matrix sum: shape mismatch");
    }
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

/// Conjugate transpose.
inline Matrix dagger(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  }
  return out;
}

/// Normalized pure state vector in the computational basis.
class Ket {
 public:
  explicit Ket(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) throw PreconditionError("Ket: dimension must be positive");
    const double n2 = squared_norm(amps_);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTol) {
      throw PreconditionError("Ket: amplitudes are not normalized (|psi|^2 = " +
                              std::to_string(n2) + ")");
    }
  }

  Ket(std::initializer_list<Complex> amplitudes)
      : Ket(std::vector<Complex>(amplitudes)) {}

  /// Rescales an arbitrary nonzero vector to unit norm.
  static Ket normalized(std::vector<Complex> v) {
    const double n = std::sqrt(squared_norm(v));
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw PreconditionError("Ket::normalized: zero or non-finite vector");
    }
    for (auto& a : v) a /= n;
    return Ket(std::move(v));
  }

  static Ket basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw PreconditionError("Ket::basis: index out of range");
    std::vector<Complex> v(dim);
    v[index] = 1.0;
    return Ket(std::move(v));
  }

  std::size_t dim() const { return amps_.size(); }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  std::span<const Complex> amplitudes() const { return amps_; }

  double norm() const { return std::sqrt(squared_norm(amps_)); }

  /// Multiplies by a unit-modulus scalar.
  Ket phase(Complex c) const {
    std::vector<Complex> v = amps_;
    for (auto& a : v) a *= c;
    return Ket(std::move(v));
  }

  Ket conjugated() const {
    std::vector<Complex> v = amps_;
    for (auto& a : v) a = std::conj(a);
    return Ket(std::move(v));
  }

  double max_abs_diff(const Ket& other) const {
    if (dim() != other.dim()) throw PreconditionError("Ket::max_abs_diff: dim mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) d = std::max(d, std::abs(amps_[i] - other[i]));
    return d;
  }

  friend bool operator==(const Ket&, const Ket&) = default;

 private:
  static double squared_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& a : v) s += std::norm(a);
    return s;
  }

  std::vector<Complex> amps_;
};

/// <a|b>, antilinear in the first argument.
inline Complex inner(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) throw PreconditionError("inner: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// Kronecker product; amplitude (i * dim(b) + j) is a_i * b_j.
inline Ket tensor_product(const Ket& a, const Ket& b) {
  std::vector<Complex> v;
  v.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) v.push_back(a[i] * b[j]);
  }
  return Ket(std::move(v));
}

/// Applies a (unitary) matrix; throws if the image is not normalized.
inline Ket apply(const Matrix& m, const Ket& k) {
  if (m.cols() != k.dim()) throw PreconditionError("apply: dimension mismatch");
  std::vector<Complex> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) v[i] += m(i, j) * k[j];
  }
  return Ket(std::move(v));
}

// ---------------------------------------------------------------------------
// Closed-form 3x3 route.

/// Roots of the depressed cubic x^3 - 3 A x + B = 0 in trigonometric form,
/// x_k = 2 sqrt(A) cos(angle + 2 pi k / 3), with cos(3 angle) = -B / (2 A^{3/2})
/// and angle in [0, pi/3].
struct DepressedCubicRoots {
  double angle = 0.0;
  std::array<double, 3> roots{};  // k = 0, 1, 2
};

inline DepressedCubicRoots solve_depressed_cubic(double big_a, double big_b) {
  const double sqrt_a = std::sqrt(big_a);
  // Clamped: rounding can push the ratio just outside [-1, 1] when B^2 = 4A^3.
  const double c = std::clamp(-big_b / (2.0 * big_a * sqrt_a), -1.0, 1.0);
  DepressedCubicRoots r;
  r.angle = std::acos(c) / 3.0;
  for (int k = 0; k < 3; ++k) {
    r.roots[k] = 2.0 * sqrt_a * std::cos(r.angle + 2.0 * std::numbers::pi * k / 3.0);
  }
  return r;
}

inline constexpr double kDegenerateA = 1e-15;
inline constexpr double kCloseRootRatio = 1e-4;

namespace detail {

inline std::array<Complex, 3> cross(std::span<const Complex> a, std::span<const Complex> b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Eigenvalues of Hermitian 3x3 m given its simple eigenvalue mu: the null
// vector of m - mu I is the largest cross product of two rows, and the other
// pair comes from the 2x2 compression of m onto its orthogonal complement.
inline std::vector<double> split_close_pair(const Matrix& m, double mu) {
  std::array<std::array<Complex, 3>, 3> rows{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) rows[i][j] = m(i, j) - (i == j ? mu : 0.0);
  }
  std::array<Complex, 3> v{};
  double best = -1.0;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const auto c = cross(rows[i], rows[j]);
    const double n = std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]);
    if (n > best) {
      best = n;
      v = c;
    }
  }
  const double nv = std::sqrt(best);
  for (auto& e : v) e /= nv;

  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::abs(v[i]) < std::abs(v[k])) k = i;
  }
  std::array<Complex, 3> u1{};
  for (std::size_t i = 0; i < 3; ++i) u1[i] = (i == k ? 1.0 : 0.0) - v[i] * std::conj(v[k]);
  const double nu = std::sqrt(std::norm(u1[0]) + std::norm(u1[1]) + std::norm(u1[2]));
  for (auto& e : u1) e /= nu;
  auto u2 = cross(v, u1);
  for (auto& e : u2) e = std::conj(e);

  auto form = [&](const std::array<Complex, 3>& x, const std::array<Complex, 3>& y) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) s += std::conj(x[i]) * m(i, j) * y[j];
    }
    return s;
  };
  const double h11 = form(u1, u1).real();
  const double h22 = form(u2, u2).real();
  const double mid = 0.5 * (h11 + h22);
  const double rad = std::hypot(0.5 * (h11 - h22), std::abs(form(u1, u2)));
  std::vector<double> out{mu, mid + rad, mid - rad};
  sort_descending(out);
  return out;
}

}  // namespace detail

struct TrigEigenvalues {
  std::array<double, 3> values{};  // descending
  double angle = 0.0;
  /// Set when the traceless part vanished; values are then the common
  /// diagonal entry.
  bool degenerate = false;
};

/// Eigenvalues of a 3x3 Hermitian matrix from its characteristic cubic.
///
/// Writing M = (tr M / 3) I + K, the eigenvalues are tr M / 3 - x with x a
/// root of x^3 - 3 A x + B = 0, A = tr(K^2) / 6, B = det K. For a density
/// matrix with unit diagonal 1/3 this is the substitution x = 1 - 3 lambda
/// up to the scale factor 3.
inline TrigEigenvalues eigenvalues_hermitian_trig(const Matrix& m) {
  if (m.rows() != 3 || m.cols() != 3) {
    throw PreconditionError("eigenvalues_hermitian_trig: matrix must be 3x3");
  }
  if (!m.is_hermitian()) {
    throw PreconditionError("eigenvalues_hermitian_trig: matrix is not Hermitian");
  }
  const double shift = m.trace().real() / 3.0;
  Matrix k = m;
  for (std::size_t i = 0; i < 3; ++i) k(i, i) -= shift;

  double tr_k2 = 0.0;
  for (auto e : k.entries()) tr_k2 += std::norm(e);
  const double big_a = tr_k2 / 6.0;

  TrigEigenvalues out;
  if (big_a < kDegenerateA) {
    out.values = {shift, shift, shift};
    out.degenerate = true;
    return out;
  }
  const Complex det = k(0, 0) * (k(1, 1) * k(2, 2) - k(1, 2) * k(2, 1)) -
                      k(0, 1) * (k(1, 0) * k(2, 2) - k(1, 2) * k(2, 0)) +
                      k(0, 2) * (k(1, 0) * k(2, 1) - k(1, 1) * k(2, 0));
  // det(K - mu I) = -(mu^3 - 3 A mu - det K); with x = -mu this is
  // x^3 - 3 A x + det K.
  const auto roots = solve_depressed_cubic(big_a, det.real());
  std::vector<double> v{shift - roots.roots[0], shift - roots.roots[1],
                        shift - roots.roots[2]};
  sort_descending(v);
  // Near a double root the cubic only resolves the pair to ~sqrt(eps); the
  // isolated root is still accurate, so split the pair on its complement.
  const double scale = std::sqrt(big_a);
  if (v[0] - v[1] < kCloseRootRatio * scale) {
    v = detail::split_close_pair(m, v[2]);
  } else if (v[1] - v[2] < kCloseRootRatio * scale) {
    v = detail::split_close_pair(m, v[0]);
  }
  std::copy(v.begin(), v.end(), out.values.begin());
  out.angle = roots.angle;
  return out;
}

// ---------------------------------------------------------------------------
// Iterative route: cyclic complex Jacobi rotations.

struct JacobiOptions {
  int max_sweeps = 100;
  double off_diagonal_tol = 1e-14;  // Frobenius norm of the strict off-diagonal
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// a <- G^dagger a G for the unitary G acting on the (p, q) plane.
inline void rotate(Matrix& a, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex ph = apq / g;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // G: G_pp = c, G_pq = s, G_qp = -s e^{-i phi}, G_qq = c e^{-i phi}.
  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(ph);
  const Complex gqq = c * std::conj(ph);

  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {  // columns: a <- a G
    const Complex aip = a(i, p);
    const Complex aiq = a(i, q);
    a(i, p) = aip * gpp + aiq * gqp;
    a(i, q) = aip * gpq + aiq * gqq;
  }
  for (std::size_t j = 0; j < n; ++j) {  // rows: a <- G^dagger a
    const Complex apj = a(p, j);
    const Complex aqj = a(q, j);
    a(p, j) = std::conj(gpp) * apj + std::conj(gqp) * aqj;
    a(q, j) = std::conj(gpq) * apj + std::conj(gqq) * aqj;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix of any size, descending.
inline std::vector<double> eigenvalues_hermitian_jacobi(const Matrix& m,
                                                        JacobiOptions opts = {}) {
  if (!m.is_square()) throw PreconditionError("eigenvalues_hermitian_jacobi: not square");
  if (!m.is_hermitian()) {
    throw PreconditionError("eigenvalues_hermitian_jacobi: matrix is not Hermitian");
  }
  Matrix a = m;
  const std::size_t n = a.rows();
  int sweep = 0;
  while (detail::off_diagonal_norm(a) >= opts.off_diagonal_tol) {
    if (sweep++ >= opts.max_sweeps) {
      throw ConvergenceError("eigenvalues_hermitian_jacobi: no convergence after " +
                             std::to_string(opts.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) detail::rotate(a, p, q);
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
  sort_descending(ev);
  return ev;
}

}  // namespace incomp
