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

// LOCC convertibility of bipartite pure states via majorization of their
// Schmidt vectors.

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <vector>

#include "incomp/errors.hpp"
#include "incomp/state.hpp"

namespace incomp {

inline constexpr double kMajorizationTol = 1e-10;

enum class Convertibility {
  ConvertibleForward,   // src -> dst by deterministic LOCC only
  ConvertibleBackward,  // dst -> src only
  Equal,                // both directions
  Incomparable,         // neither
};

inline std::string_view to_string(Convertibility c) {
  switch (c) {
    case Convertibility::ConvertibleForward: return "CONVERTIBLE_FORWARD";
    case Convertibility::ConvertibleBackward: return "CONVERTIBLE_BACKWARD";
    case Convertibility::Equal: return "EQUAL";
    case Convertibility::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

inline Convertibility mirror(Convertibility c) {
  switch (c) {
    case Convertibility::ConvertibleForward: return Convertibility::ConvertibleBackward;
    case Convertibility::ConvertibleBackward: return Convertibility::ConvertibleForward;
    default: return c;
  }
}

struct PairVerdict {
  Convertibility label;
  std::vector<double> partial_sums_src;
  std::vector<double> partial_sums_dst;
};

namespace detail {

inline std::vector<double> partial_sums(const SchmidtVector& v, std::size_t n) {
  std::vector<double> out(n, 0.0);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k < v.size()) acc += v[k];
    out[k] = acc;
  }
  return out;
}

inline bool dominated(const std::vector<double>& lower, const std::vector<double>& upper,
                      double tol) {
  for (std::size_t k = 0; k < lower.size(); ++k) {
    if (lower[k] > upper[k] + tol) return false;
  }
  return true;
}

}  // namespace detail

/// True iff a is majorized by b (a < b), i.e. the state with Schmidt vector a
/// converts to the one with b. Ties within tol count as satisfied.
inline bool majorizes(const SchmidtVector& b, const SchmidtVector& a,
                      double tol = kMajorizationTol) {
  const std::size_t n = std::max(a.size(), b.size());
  return detail::dominated(detail::partial_sums(a, n), detail::partial_sums(b, n), tol);
}

inline PairVerdict classify_pair(const SchmidtVector& src, const SchmidtVector& dst,
                                 double tol = kMajorizationTol) {
  const std::size_t n = std::max(src.size(), dst.size());
  PairVerdict v{Convertibility::Incomparable, detail::partial_sums(src, n),
                detail::partial_sums(dst, n)};
  const bool fwd = detail::dominated(v.partial_sums_src, v.partial_sums_dst, tol);
  const bool bwd = detail::dominated(v.partial_sums_dst, v.partial_sums_src, tol);
  if (fwd && bwd) {
    v.label = Convertibility::Equal;
  } else if (fwd) {
    v.label = Convertibility::ConvertibleForward;
  } else if (bwd) {
    v.label = Convertibility::ConvertibleBackward;
  }
  return v;
}

/// Two-clause incomparability test for strictly decreasing 3-entry vectors:
/// (a1 > b1 and a3 > b3) or (a1 < b1 and a3 < b3).
inline bool incomparable_strict3(const SchmidtVector& a, const SchmidtVector& b) {
  auto strict = [](const SchmidtVector& v) {
    return v.size() == 3 && v[0] > v[1] && v[1] > v[2];
  };
  if (!strict(a) || !strict(b)) {
    throw PreconditionError(
        "incomparable_strict3: both vectors must have 3 strictly decreasing entries");
  }
  return (a[0] > b[0] && a[2] > b[2]) || (a[0] < b[0] && a[2] < b[2]);
}

}  // namespace incomp
