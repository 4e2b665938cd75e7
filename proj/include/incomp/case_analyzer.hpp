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

// Case-by-case prediction of the relation between pi_i and pi_final from the
// cubic data (A, B) alone, plus a harness that checks each prediction against
// direct classification of the constructed states.
//
// With the eigen-angle t in [0, pi/3] the sorted final spectrum is
//   lam_max = (1 - 2 sqrt A cos(2 pi / 3 + t)) / 3
//   lam_min = (1 - 2 sqrt A cos t) / 3
// and the initial spectrum is (1 +- sqrt 3 / 2) / 3 around 1/3. Two boundary
// expressions decide incomparability once A > 1/4:
//   max boundary: 2 sqrt A cos(2 pi / 3 + t) > -sqrt 3 / 2  (lam_max decreases)
//   min boundary: 2 sqrt A cos t             <  sqrt 3 / 2  (lam_min increases)
// For B > 0 and A > 1/4 lam_max always increases, so the min boundary decides;
// for B < 0 and A > 1/4 lam_min always decreases, so the max boundary decides.
// The opposite pairing is available as BoundaryAssignment::Swapped so the two
// can be compared against observations (see validate_boundary_assignment).

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "incomp/errors.hpp"
#include "incomp/majorization.hpp"
#include "incomp/qubit_ops.hpp"
#include "incomp/scenarios.hpp"
#include "incomp/state.hpp"

namespace incomp {

inline constexpr double kCaseBand = 1e-12;
/// Margin on a boundary expression equivalent to the majorization tolerance
/// (eigenvalue = (1 - expression) / 3).
inline constexpr double kBoundaryBand = 3.0 * kMajorizationTol;
/// Direct and closed-form spectra must agree to this.
inline constexpr double kSpectrumAgreementTol = 1e-10;

enum class BSign { Negative, Zero, Positive };
enum class ASubcase { BelowQuarter, Quarter, AboveQuarter };
enum class Prediction {
  Incomparable,
  EntanglementIncrease,
  IncomparableOrIncrease,
  NotIncomparable,
  Conditional,
};
enum class BoundaryAssignment {
  Validated,  // B < 0: max boundary, B > 0: min boundary
  Swapped,    // B < 0: min boundary, B > 0: max boundary
};

inline std::string_view to_string(BSign s) {
  switch (s) {
    case BSign::Negative: return "B_NEG";
    case BSign::Zero: return "B_ZERO";
    case BSign::Positive: return "B_POS";
  }
  return "?";
}

inline std::string_view to_string(ASubcase s) {
  switch (s) {
    case ASubcase::BelowQuarter: return "A_LT_QUARTER";
    case ASubcase::Quarter: return "A_EQ_QUARTER";
    case ASubcase::AboveQuarter: return "A_GT_QUARTER";
  }
  return "?";
}

inline std::string_view to_string(Prediction p) {
  switch (p) {
    case Prediction::Incomparable: return "INCOMPARABLE";
    case Prediction::EntanglementIncrease: return "ENTANGLEMENT_INCREASE";
    case Prediction::IncomparableOrIncrease: return "INCOMPARABLE_OR_INCREASE";
    case Prediction::NotIncomparable: return "NOT_INCOMPARABLE";
    case Prediction::Conditional: return "CONDITIONAL";
  }
  return "?";
}

struct BoundaryValues {
  double max_boundary = 0.0;  // 2 sqrt A cos(2 pi / 3 + t)
  double min_boundary = 0.0;  // 2 sqrt A cos t
};

inline BoundaryValues boundary_values(const CubicSpectrum& s) {
  const double two_root_a = 2.0 * std::sqrt(s.big_a);
  return {two_root_a * std::cos(2.0 * std::numbers::pi / 3.0 + s.eigen_angle),
          two_root_a * std::cos(s.eigen_angle)};
}

inline bool max_boundary_holds(double v) {
  return v > -std::numbers::sqrt3 / 2.0 + kBoundaryBand;
}
inline bool min_boundary_holds(double v) {
  return v < std::numbers::sqrt3 / 2.0 - kBoundaryBand;
}

struct CaseVerdict {
  BSign case_id = BSign::Zero;
  ASubcase subcase = ASubcase::Quarter;
  Prediction predicted = Prediction::NotIncomparable;
  /// Boundary expression used for a Conditional prediction.
  std::optional<double> condition_value;
  /// The competing expression, recorded alongside for comparison.
  std::optional<double> alternate_condition_value;
  /// Whether the used expression predicts incomparability.
  std::optional<bool> condition_holds;
};

inline CaseVerdict predict_case(double big_a, double big_b,
                                BoundaryAssignment assignment = BoundaryAssignment::Validated) {
  CaseVerdict v;
  v.case_id = std::abs(big_b) < kCaseBand ? BSign::Zero
              : big_b < 0.0               ? BSign::Negative
                                          : BSign::Positive;
  v.subcase = std::abs(big_a - 0.25) < kCaseBand ? ASubcase::Quarter
              : big_a < 0.25                     ? ASubcase::BelowQuarter
                                                 : ASubcase::AboveQuarter;

  if (v.case_id == BSign::Zero) {
    v.predicted = v.subcase == ASubcase::BelowQuarter ? Prediction::EntanglementIncrease
                                                      : Prediction::NotIncomparable;
    return v;
  }
  switch (v.subcase) {
    case ASubcase::Quarter:
      v.predicted = Prediction::Incomparable;
      return v;
    case ASubcase::BelowQuarter:
      v.predicted = Prediction::IncomparableOrIncrease;
      return v;
    case ASubcase::AboveQuarter:
      break;
  }

  const auto bv = boundary_values(spectrum_from_AB(big_a, big_b));
  const bool use_max = (v.case_id == BSign::Negative) ==
                       (assignment == BoundaryAssignment::Validated);
  v.predicted = Prediction::Conditional;
  v.condition_value = use_max ? bv.max_boundary : bv.min_boundary;
  v.alternate_condition_value = use_max ? bv.min_boundary : bv.max_boundary;
  v.condition_holds =
      use_max ? max_boundary_holds(bv.max_boundary) : min_boundary_holds(bv.min_boundary);
  return v;
}

/// Whether an observed classification of (pi_i, pi_final) is what the
/// verdict predicts. Entanglement increase means pi_final is strictly
/// majorized by pi_i, i.e. CONVERTIBLE_BACKWARD.
inline bool consistent(const CaseVerdict& v, Convertibility observed) {
  switch (v.predicted) {
    case Prediction::Incomparable:
      return observed == Convertibility::Incomparable;
    case Prediction::EntanglementIncrease:
      return observed == Convertibility::ConvertibleBackward;
    case Prediction::IncomparableOrIncrease:
      return observed == Convertibility::Incomparable ||
             observed == Convertibility::ConvertibleBackward;
    case Prediction::NotIncomparable:
      return observed != Convertibility::Incomparable;
    case Prediction::Conditional:
      return v.condition_holds.value_or(false) == (observed == Convertibility::Incomparable);
  }
  return false;
}

struct VerificationRecord {
  CaseVerdict predicted;
  PairVerdict observed;
  CubicSpectrum spectrum;     // closed-form route
  SchmidtVector initial;      // direct route
  SchmidtVector final_state;  // direct route
  double entropy_initial = 0.0;
  double entropy_final = 0.0;
  double entropy_delta = 0.0;  // final - initial
  bool agree = false;
};

/// Builds pi_i and pi_final(p), classifies them directly and compares with
/// predict_case. Throws ContractViolation if the closed-form spectrum and the
/// Jacobi spectrum of the constructed rho_A differ by more than 1e-10.
inline VerificationRecord verify_prediction(
    const IppParams& p, BoundaryAssignment assignment = BoundaryAssignment::Validated) {
  SchmidtVector initial = schmidt_vector(build_pi_initial());
  SchmidtVector final_state = schmidt_vector(pi_final(p));
  CubicSpectrum spectrum = ipp_spectrum(p);

  const double gap = spectrum.schmidt().max_abs_diff(final_state);
  const double tol =
      kSpectrumAgreementTol + closed_form_rounding_bound(spectrum.big_a, spectrum.big_b);
  if (!(gap <= tol)) {
    throw ContractViolation("verify_prediction: closed-form and Jacobi spectra differ by " +
                            std::to_string(gap));
  }

  CaseVerdict predicted = predict_case(spectrum.big_a, spectrum.big_b, assignment);
  PairVerdict observed = classify_pair(initial, final_state);
  const double e_i = entropy_of_entanglement(initial);
  const double e_f = entropy_of_entanglement(final_state);
  const bool agree = consistent(predicted, observed.label);
  return {std::move(predicted), std::move(observed), spectrum, std::move(initial),
          std::move(final_state), e_i, e_f, e_f - e_i, agree};
}

/// Agreement tallies of each boundary assignment on Conditional points.
struct BoundaryValidation {
  struct Tally {
    int points = 0;
    int validated_agree = 0;
    int swapped_agree = 0;
  };
  Tally negative_b;
  Tally positive_b;
};

inline BoundaryValidation validate_boundary_assignment(std::span<const IppParams> points) {
  BoundaryValidation out;
  for (const auto& p : points) {
    const auto rec = verify_prediction(p);
    if (rec.predicted.predicted != Prediction::Conditional) continue;
    const auto swapped = predict_case(rec.spectrum.big_a, rec.spectrum.big_b,
                                      BoundaryAssignment::Swapped);
    auto& t = rec.predicted.case_id == BSign::Negative ? out.negative_b : out.positive_b;
    ++t.points;
    t.validated_agree += rec.agree ? 1 : 0;
    t.swapped_agree += consistent(swapped, rec.observed.label) ? 1 : 0;
  }
  return out;
}

}  // namespace incomp
