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

// Single-qubit operations: the general U(theta, phi_a, phi_b), the
// anti-unitary C U, the six spin kets along x, y, z and the inner-product
// preserving map defined on |0_x>, |0_y>, |0_z> only.

#include <cmath>
#include <complex>
#include <numbers>
#include <string_view>

#include "incomp/errors.hpp"
#include "incomp/linalg.hpp"

namespace incomp {

struct UnitaryParams {
  double theta = 0.0;
  double phi_a = 0.0;
  double phi_b = 0.0;

  /// Angles reduced to [0, 2 pi). Throws on non-finite input.
  UnitaryParams canonical() const {
    auto reduce = [](double x) {
      if (!std::isfinite(x)) throw PreconditionError("UnitaryParams: non-finite angle");
      constexpr double two_pi = 2.0 * std::numbers::pi;
      double r = std::fmod(x, two_pi);
      if (r < 0.0) r += two_pi;
      return r >= two_pi ? 0.0 : r;
    };
    return {reduce(theta), reduce(phi_a), reduce(phi_b)};
  }
};

class IppParams {
 public:
  IppParams(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
    const double n2 = std::norm(alpha) + std::norm(beta);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTol) {
      throw PreconditionError("IppParams: |alpha|^2 + |beta|^2 must equal 1");
    }
  }

  /// alpha = cos(phi), beta = e^{i delta} sin(phi).
  static IppParams from_angles(double phi, double delta = 0.0) {
    return {std::cos(phi), std::polar(1.0, delta) * std::sin(phi)};
  }

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }

 private:
  Complex alpha_;
  Complex beta_;
};

enum class SpinAxis { X, Y, Z };

inline std::string_view to_string(SpinAxis a) {
  switch (a) {
    case SpinAxis::X: return "x";
    case SpinAxis::Y: return "y";
    case SpinAxis::Z: return "z";
  }
  return "?";
}

/// [[cos t, e^{i a} sin t], [-e^{i b} sin t, e^{i(a+b)} cos t]]
inline Matrix general_unitary(const UnitaryParams& p) {
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  return Matrix{{c, std::polar(s, p.phi_a)},
                {-std::polar(s, p.phi_b), std::polar(c, p.phi_a + p.phi_b)}};
}

inline Ket apply_unitary(const UnitaryParams& p, const Ket& k) {
  if (k.dim() != 2) throw PreconditionError("apply_unitary: qubit expected");
  return apply(general_unitary(p), k);
}

/// Gamma = C U: U first, then complex conjugation in the computational basis.
inline Ket apply_antiunitary(const UnitaryParams& p, const Ket& k) {
  return apply_unitary(p, k).conjugated();
}

/// |0_n> (which == 0) or its orthogonal partner |1_n> (which == 1), with
/// |1_n> the -1 eigenvector of the Pauli operator along n.
inline Ket named_ket(SpinAxis axis, int which) {
  if (which != 0 && which != 1) throw PreconditionError("named_ket: which must be 0 or 1");
  const double r = std::numbers::sqrt2 / 2.0;
  const double sign = which == 0 ? 1.0 : -1.0;
  switch (axis) {
    case SpinAxis::X: return Ket{r, sign * r};
    case SpinAxis::Y: return Ket{r, Complex(0.0, sign * r)};
    case SpinAxis::Z: return which == 0 ? Ket{1.0, 0.0} : Ket{0.0, 1.0};
  }
  throw PreconditionError("named_ket: unknown axis");
}

/// Image of |0_n> under the inner-product preserving map:
/// alpha |0_n> + beta |1_n>. Defined on the three labels only; there is no
/// matrix form.
inline Ket ipp_image(SpinAxis axis, const IppParams& p) {
  const Ket zero = named_ket(axis, 0);
  const Ket one = named_ket(axis, 1);
  return Ket{p.alpha() * zero[0] + p.beta() * one[0],
             p.alpha() * zero[1] + p.beta() * one[1]};
}

}  // namespace incomp
