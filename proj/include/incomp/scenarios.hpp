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

// The two 3 x 4 test states (Alice: qutrit, Bob: two qubits), the candidate
// operation acting on Bob's second qubit, and the closed-form spectral data
// of the resulting reduced density matrices.
//
//   chi_i = (|0>|0_z 0_z> + |1>|0_x 0_y> + |2>|0_y 0_x>) / sqrt 3
//   pi_i  = (|0>|0_z 0_z> + |1>|0_x 0_x> + |2>|0_y 0_y>) / sqrt 3
//
// For pi_i under the inner-product preserving map, rho_A has unit diagonal
// (times 1/3) and off-diagonals p, q, r; its eigenvalues are (1 - x) / 3 with
// x^3 - 3 A x + B = 0, A = (|p|^2 + |q|^2 + |r|^2) / 3, B = 2 Re(p r conj q).

#include <algorithm>
#include <limits>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "incomp/errors.hpp"
#include "incomp/linalg.hpp"
#include "incomp/qubit_ops.hpp"
#include "incomp/state.hpp"

namespace incomp {

inline constexpr std::size_t kAliceDim = 3;
inline constexpr std::size_t kBobDim = 4;

/// (1/3 + 1/(2 sqrt 3), 1/3, 1/3 - 1/(2 sqrt 3)): Schmidt vector of pi_i and
/// of chi_i after any anti-unitary on Bob's second qubit.
inline SchmidtVector interleaved_spectrum() {
  const double h = 1.0 / (2.0 * std::numbers::sqrt3);
  return SchmidtVector({1.0 / 3.0 + h, 1.0 / 3.0, 1.0 / 3.0 - h});
}

/// (|0>|b0> + |1>|b1> + |2>|b2>) / sqrt 3 with |bk> = first_k (x) second_k.
inline BipartiteState three_branch_state(const std::array<std::pair<Ket, Ket>, 3>& branches) {
  std::vector<Complex> amps;
  amps.reserve(kAliceDim * kBobDim);
  const double w = 1.0 / std::numbers::sqrt3;
  for (const auto& [first, second] : branches) {
    const Ket bob = tensor_product(first, second);
    if (bob.dim() != kBobDim) throw PreconditionError("three_branch_state: qubits expected");
    for (auto a : bob.amplitudes()) amps.push_back(w * a);
  }
  return BipartiteState(kAliceDim, kBobDim, Ket(std::move(amps)));
}

namespace detail {

inline Ket z0() { return named_ket(SpinAxis::Z, 0); }
inline Ket x0() { return named_ket(SpinAxis::X, 0); }
inline Ket y0() { return named_ket(SpinAxis::Y, 0); }

}  // namespace detail

inline BipartiteState build_chi_initial() {
  using namespace detail;
  return three_branch_state({{{z0(), z0()}, {x0(), y0()}, {y0(), x0()}}});
}

/// chi_i with Gamma = C U applied to Bob's second qubit.
inline BipartiteState chi_final(const UnitaryParams& p) {
  using namespace detail;
  return three_branch_state({{{z0(), apply_antiunitary(p, z0())},
                              {x0(), apply_antiunitary(p, y0())},
                              {y0(), apply_antiunitary(p, x0())}}});
}

/// chi_i with U alone applied to Bob's second qubit.
inline BipartiteState chi_final_unitary_only(const UnitaryParams& p) {
  using namespace detail;
  return three_branch_state({{{z0(), apply_unitary(p, z0())},
                              {x0(), apply_unitary(p, y0())},
                              {y0(), apply_unitary(p, x0())}}});
}

inline BipartiteState build_pi_initial() {
  using namespace detail;
  return three_branch_state({{{z0(), z0()}, {x0(), x0()}, {y0(), y0()}}});
}

/// pi_i with the inner-product preserving map applied to Bob's second qubit.
inline BipartiteState pi_final(const IppParams& p) {
  using namespace detail;
  return three_branch_state({{{z0(), ipp_image(SpinAxis::Z, p)},
                              {x0(), ipp_image(SpinAxis::X, p)},
                              {y0(), ipp_image(SpinAxis::Y, p)}}});
}

/// Off-diagonal entries of 3 rho_A for pi_final: p at (0,1), q at (0,2),
/// r at (1,2).
struct PqrCoefficients {
  Complex p;
  Complex q;
  Complex r;
};

inline PqrCoefficients pqr(const IppParams& params) {
  const Complex a = params.alpha();
  const Complex b = params.beta();
  const Complex ab = a * std::conj(b);
  const Complex ba = b * std::conj(a);
  const Complex i(0.0, 1.0);
  return {0.5 * (std::norm(a) - std::norm(b) + ab + ba),
          0.5 * (std::norm(a) + i * std::norm(b) + ab - i * ba),
          0.5 * (ab + ba - i)};
}

struct CubicCoefficients {
  double big_a = 0.0;
  double big_b = 0.0;
};

inline CubicCoefficients cubic_coefficients(const PqrCoefficients& c) {
  const double a = (std::norm(c.p) + std::norm(c.q) + std::norm(c.r)) / 3.0;
  const Complex prq = c.p * c.r * std::conj(c.q);
  return {a, (prq + std::conj(prq)).real()};
}

/// (A, B) for real normalized (alpha, beta), without going through p, q, r.
inline CubicCoefficients real_AB(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) ||
      std::abs(alpha * alpha + beta * beta - 1.0) > kNormTol) {
    throw PreconditionError("real_AB: alpha^2 + beta^2 must equal 1");
  }
  const double a2 = alpha * alpha;
  const double b2 = beta * beta;
  const double ab = alpha * beta;
  const double big_a = 0.25 + (2.0 * a2 * b2 + 3.0 * ab * (a2 - b2)) / 6.0;
  const double big_b = beta / 4.0 * (a2 - b2 + 2.0 * ab) *
                       (alpha * (2.0 * a2 + 1.0) + beta * (a2 - b2));
  return {big_a, big_b};
}

struct CubicSpectrum {
  double big_a = 0.0;
  double big_b = 0.0;
  double eigen_angle = 0.0;           // in [0, pi/3]
  std::array<double, 3> eigenvalues{};  // descending
  bool degenerate = false;            // A below threshold; all eigenvalues 1/3

  SchmidtVector schmidt() const {
    return SchmidtVector(std::vector<double>(eigenvalues.begin(), eigenvalues.end()));
  }
};

inline constexpr double kRealRootTol = 1e-12;

/// Eigenvalues (1 - x_k) / 3 of the unit-trace matrix whose shifted
/// characteristic cubic is x^3 - 3 A x + B.
inline CubicSpectrum spectrum_from_AB(double big_a, double big_b) {
  if (!std::isfinite(big_a) || !std::isfinite(big_b) || big_a < 0.0) {
    throw DomainViolationError("spectrum_from_AB: A must be finite and nonnegative");
  }
  if (big_b * big_b > 4.0 * big_a * big_a * big_a + kRealRootTol) {
    throw DomainViolationError("spectrum_from_AB: B^2 > 4 A^3, cubic has complex roots");
  }
  CubicSpectrum s;
  s.big_a = big_a;
  s.big_b = big_b;
  if (big_a < kDegenerateA) {
    s.degenerate = true;
    s.eigenvalues = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    return s;
  }
  const auto roots = solve_depressed_cubic(big_a, big_b);
  s.eigen_angle = roots.angle;
  std::vector<double> v;
  for (double x : roots.roots) v.push_back((1.0 - x) / 3.0);
  sort_descending(v);
  std::copy(v.begin(), v.end(), s.eigenvalues.begin());
  return s;
}

/// Worst-case eigenvalue error of spectrum_from_AB caused by rounding in A
/// and B. Negligible for well-separated roots; grows like sqrt(eps) as the
/// cubic approaches a double root, where no (A, B)-only formula does better.
inline double closed_form_rounding_bound(double big_a, double big_b) {
  if (big_a < kDegenerateA) return 0.0;
  constexpr double dc = 64.0 * std::numeric_limits<double>::epsilon();
  const double c = std::clamp(-big_b / (2.0 * big_a * std::sqrt(big_a)), -1.0, 1.0);
  const double s = std::sqrt(1.0 - c * c);
  // Linearized acos error, capped by its square-root behaviour at |c| = 1.
  const double sqrt_regime = std::sqrt(2.0 * dc) / 3.0;
  const double dt = s > 0.0 ? std::min(2.0 * dc / (3.0 * s), sqrt_regime) : sqrt_regime;
  return 2.0 / 3.0 * std::sqrt(big_a) * dt;
}

inline CubicSpectrum ipp_spectrum(const IppParams& p) {
  const auto ab = cubic_coefficients(pqr(p));
  return spectrum_from_AB(ab.big_a, ab.big_b);
}

}  // namespace incomp
