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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "incomp/errors.hpp"
#include "incomp/linalg.hpp"

namespace incomp {

/// Pure state of a dimA x dimB system; amplitude (i, j) at index i * dimB + j.
class BipartiteState {
 public:
  BipartiteState(std::size_t dim_a, std::size_t dim_b, Ket ket)
      : dim_a_(dim_a), dim_b_(dim_b), ket_(std::move(ket)) {
    if (dim_a == 0 || dim_b == 0) {
      throw PreconditionError("BipartiteState: dimensions must be positive");
    }
    if (ket_.dim() != dim_a * dim_b) {
      throw PreconditionError("BipartiteState: amplitude count != dimA * dimB");
    }
  }

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const Ket& ket() const { return ket_; }
  const Complex& amp(std::size_t i, std::size_t j) const { return ket_[i * dim_b_ + j]; }

 private:
  std::size_t dim_a_;
  std::size_t dim_b_;
  Ket ket_;
};

/// Nonincreasing probability vector.
class SchmidtVector {
 public:
  static constexpr double kSumTol = 1e-10;
  /// Entries in (-kClampTol, 0) are rounding noise and are set to zero.
  static constexpr double kClampTol = 1e-12;

  explicit SchmidtVector(std::vector<double> coefficients)
      : c_(std::move(coefficients)) {
    if (c_.empty()) throw PreconditionError("SchmidtVector: empty");
    double sum = 0.0;
    for (auto& x : c_) {
      if (!std::isfinite(x) || x < -kClampTol) {
        throw PreconditionError("SchmidtVector: coefficients must be nonnegative");
      }
      if (x < 0.0) x = 0.0;
      sum += x;
    }
    if (std::abs(sum - 1.0) > kSumTol) {
      throw PreconditionError("SchmidtVector: coefficients sum to " + std::to_string(sum));
    }
    if (!std::is_sorted(c_.begin(), c_.end(), std::greater<>{})) {
      throw PreconditionError("SchmidtVector: coefficients must be nonincreasing");
    }
  }

  /// Sorts (descending) before validating.
  static SchmidtVector from_unsorted(std::vector<double> v) {
    sort_descending(v);
    return SchmidtVector(std::move(v));
  }

  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  std::span<const double> coefficients() const { return c_; }

  /// Copy extended with trailing zeros to length n (n >= size()).
  SchmidtVector padded(std::size_t n) const {
    std::vector<double> v = c_;
    if (n > v.size()) v.resize(n, 0.0);
    return SchmidtVector(std::move(v));
  }

  double max_abs_diff(const SchmidtVector& other) const {
    const std::size_t n = std::max(size(), other.size());
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = i < size() ? c_[i] : 0.0;
      const double b = i < other.size() ? other[i] : 0.0;
      d = std::max(d, std::abs(a - b));
    }
    return d;
  }

  friend bool operator==(const SchmidtVector&, const SchmidtVector&) = default;

 private:
  std::vector<double> c_;
};

/// Partial trace over B: rho(i, k) = sum_j amp(i, j) conj(amp(k, j)).
inline Matrix reduced_density_A(const BipartiteState& s) {
  const std::size_t da = s.dim_a();
  const std::size_t db = s.dim_b();
  Matrix rho(da, da);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t k = i; k < da; ++k) {
      Complex e = 0.0;
      for (std::size_t j = 0; j < db; ++j) e += s.amp(i, j) * std::conj(s.amp(k, j));
      rho(i, k) = e;
      rho(k, i) = std::conj(e);
    }
  }
  for (std::size_t i = 0; i < da; ++i) rho(i, i) = rho(i, i).real();
  return rho;
}

/// Descending eigenvalues of rho_A, truncated to the Schmidt rank bound.
inline SchmidtVector schmidt_vector(const BipartiteState& s) {
  std::vector<double> ev = eigenvalues_hermitian_jacobi(reduced_density_A(s));
  ev.resize(std::min(s.dim_a(), s.dim_b()));
  // Jacobi may leave -1e-17 style noise; sort is already descending.
  for (auto& x : ev) x = std::max(x, 0.0);
  return SchmidtVector(std::move(ev));
}

inline constexpr double kEntropyClamp = 1e-13;

/// Entropy of entanglement in bits; coefficients below 1e-13 contribute 0.
inline double entropy_of_entanglement(const SchmidtVector& v) {
  double h = 0.0;
  for (double x : v.coefficients()) {
    if (x < kEntropyClamp) continue;
    h -= x * std::log2(x);
  }
  return h;
}

}  // namespace incomp
