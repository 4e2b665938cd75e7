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

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "incomp/incomp.hpp"
#include "support/oracles.hpp"

namespace {

using namespace incomp;
using incomp::testing::Rng;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double max_diff(std::span<const double> a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

void criterion_1(Outcome& o) {
  const auto v = schmidt_vector(build_chi_initial());
  const double d = max_diff(v.coefficients(), incomp::testing::chi_initial_expected());
  o.detail << "max deviation from (2/3, 1/6, 1/6) = " << d;
  o.require(d <= 1e-12, "deviation <= 1e-12");
}

void criterion_2(Outcome& o) {
  Rng rng(20261018);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto v = schmidt_vector(chi_final(rng.unitary_params()));
    worst = std::max(worst, max_diff(v.coefficients(), incomp::testing::interleaved_expected()));
  }
  o.detail << "100 random (theta, phi_a, phi_b), max deviation = " << worst;
  o.require(worst <= 1e-10, "deviation <= 1e-10");
}

void criterion_3(Outcome& o) {
  const auto initial = schmidt_vector(build_chi_initial());
  const auto final_v = schmidt_vector(chi_final({0.7, 1.9, 4.4}));
  const auto label = classify_pair(initial, final_v).label;
  o.detail << "verdict " << to_string(label);
  o.require(label == Convertibility::Incomparable, "INCOMPARABLE");
  const bool chain = initial[0] > final_v[0] && final_v[0] > final_v[1] &&
                     final_v[1] > initial[1] && initial[1] > final_v[2];
  o.detail << ", chain " << initial[0] << " > " << final_v[0] << " > " << final_v[1] << " > "
           << initial[1] << " > " << final_v[2];
  o.require(chain, "interleaving chain");
}

void criterion_4(Outcome& o) {
  Rng rng(4);
  double worst = 0.0;
  const Matrix expected = incomp::testing::rho_chi_initial_closed();
  for (int t = 0; t < 100; ++t) {
    worst = std::max(worst, reduced_density_A(chi_final_unitary_only(rng.unitary_params()))
                                .max_abs_diff(expected));
  }
  o.detail << "100 random U, max |rho_A - rho_A^initial| = " << worst;
  o.require(worst <= 1e-12, "deviation <= 1e-12");
}

void criterion_5(Outcome& o) {
  const auto initial = schmidt_vector(build_pi_initial());
  // Frozen from hand substitution into the real-parameter (A, B) formulas.
  const auto flip_ab = real_AB(0.0, 1.0);
  const auto flip_spec = spectrum_from_AB(flip_ab.big_a, flip_ab.big_b);
  const auto flip_label = classify_pair(initial, schmidt_vector(pi_final({0.0, 1.0}))).label;
  o.detail << "flipping (A, B) = (" << flip_ab.big_a << ", " << flip_ab.big_b << ") "
           << to_string(flip_label);
  o.require(std::abs(flip_ab.big_a - 0.25) <= 1e-12 && std::abs(flip_ab.big_b - 0.25) <= 1e-12,
            "flipping (A, B) = (1/4, 1/4)");
  o.require(max_diff(flip_spec.eigenvalues, incomp::testing::chi_initial_expected()) <= 1e-12,
            "flipping spectrum (2/3, 1/6, 1/6)");
  o.require(flip_label == Convertibility::Incomparable, "flipping INCOMPARABLE");

  const double r = 1.0 / std::numbers::sqrt2;
  const auto had_ab = real_AB(r, r);
  const auto had_label = classify_pair(initial, schmidt_vector(pi_final({r, r}))).label;
  o.detail << "; Hadamard (A, B) = (" << had_ab.big_a << ", " << had_ab.big_b << ") "
           << to_string(had_label);
  o.require(std::abs(had_ab.big_a - 1.0 / 3.0) <= 1e-12 && std::abs(had_ab.big_b - 0.25) <= 1e-12,
            "Hadamard (A, B) = (1/3, 1/4)");
  o.require(had_label == Convertibility::Incomparable, "Hadamard INCOMPARABLE");
}

void criterion_6(Outcome& o) {
  const auto initial = schmidt_vector(build_pi_initial());
  const auto spec = ipp_spectrum({1.0, 0.0});
  const double d = spec.schmidt().max_abs_diff(initial);
  const auto label = classify_pair(initial, schmidt_vector(pi_final({1.0, 0.0}))).label;
  o.detail << "identity: spectrum deviation " << d << ", verdict " << to_string(label);
  o.require(d <= 1e-12, "spectrum equals initial within 1e-12");
  o.require(label == Convertibility::Equal, "EQUAL");
}

void criterion_7(Outcome& o) {
  for (double deg : {67.5, -22.5}) {
    const auto rec = verify_prediction(IppParams::from_angles(deg * kPi / 180.0));
    const bool strictly_majorized = majorizes(rec.initial, rec.final_state) &&
                                    !majorizes(rec.final_state, rec.initial);
    o.detail << "phi=" << deg << " deg: B=" << rec.spectrum.big_b << ", "
             << to_string(rec.observed.label) << ", dE=" << rec.entropy_delta << "; ";
    o.require(strictly_majorized, "final strictly majorized by initial");
    o.require(rec.entropy_delta > 0.0, "entropy increases");
  }
}

void criterion_8(Outcome& o) {
  Rng rng(8);
  double trig_vs_jacobi = 0.0;
  double closed_vs_jacobi = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const IppParams p = rng.complex_ipp();
    const Matrix rho = reduced_density_A(pi_final(p));
    const auto jac = eigenvalues_hermitian_jacobi(rho);
    trig_vs_jacobi = std::max(trig_vs_jacobi, max_diff(eigenvalues_hermitian_trig(rho).values, jac));
    closed_vs_jacobi = std::max(closed_vs_jacobi, max_diff(ipp_spectrum(p).eigenvalues, jac));
  }
  double ab_gap = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto [a, b] = rng.real_ipp();
    const auto lhs = real_AB(a, b);
    const auto rhs = cubic_coefficients(pqr({a, b}));
    ab_gap = std::max({ab_gap, std::abs(lhs.big_a - rhs.big_a), std::abs(lhs.big_b - rhs.big_b)});
  }
  o.detail << "trig vs Jacobi " << trig_vs_jacobi << ", (A,B) spectrum vs Jacobi "
           << closed_vs_jacobi << ", real (A,B) vs p,q,r route " << ab_gap;
  o.require(trig_vs_jacobi <= 1e-10 && closed_vs_jacobi <= 1e-10, "spectra within 1e-10");
  o.require(ab_gap <= 1e-12, "(A, B) within 1e-12");
}

void criterion_9(Outcome& o) {
  const auto records = sweep_real(3600);
  std::size_t predicted_inc = 0;
  std::size_t predicted_inc_missed = 0;
  std::size_t a_above = 0;
  std::size_t a_above_b_nonpositive = 0;
  for (const auto& r : records) {
    if (r.predicted == Prediction::Incomparable) {
      ++predicted_inc;
      if (r.observed != Convertibility::Incomparable) ++predicted_inc_missed;
    }
    if (r.big_a > 0.25 + kCaseBand) {
      ++a_above;
      if (!(r.big_b > 0.0)) ++a_above_b_nonpositive;
    }
  }
  const auto s = summarize(records);
  const double fraction = s.fraction(s.incomparable);
  o.detail << predicted_inc << " predicted-INCOMPARABLE points, " << predicted_inc_missed
           << " missed; " << a_above << " points with A > 1/4, " << a_above_b_nonpositive
           << " with B <= 0; incomparable fraction " << fraction;
  o.require(predicted_inc_missed == 0, "predicted INCOMPARABLE observed INCOMPARABLE");
  o.require(a_above_b_nonpositive == 0, "A > 1/4 implies B > 0");
  o.require(fraction > 0.5, "incomparable fraction > 0.5");
}

void criterion_10(Outcome& o) {
  Rng rng(10);
  int incomparable = 0;
  for (int t = 0; t < 10000; ++t) {
    if (classify_pair(rng.schmidt(2), rng.schmidt(2)).label == Convertibility::Incomparable) {
      ++incomparable;
    }
  }
  o.detail << "10000 random 2-entry pairs, incomparable: " << incomparable;
  o.require(incomparable == 0, "no incomparable pair");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"AC1  Schmidt vector of chi_i", criterion_1},
      {"AC2  chi_final spectrum parameter-free", criterion_2},
      {"AC3  chi pair incomparable, interleaving chain", criterion_3},
      {"AC4  unitary-only leaves rho_A unchanged", criterion_4},
      {"AC5  flipping and Hadamard incomparable", criterion_5},
      {"AC6  identity map gives EQUAL", criterion_6},
      {"AC7  B = 0 family increases entanglement", criterion_7},
      {"AC8  solver and (A, B) route equivalence", criterion_8},
      {"AC9  real sweep n = 3600", criterion_9},
      {"AC10 qubit pairs never incomparable", criterion_10},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::printf("%s  %-48s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
