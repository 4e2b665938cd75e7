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

// Grid sweeps over the inner-product preserving map parameters and over the
// anti-unitary parameters. Points are independent; results always come back
// in grid order whatever the thread count.

#include <algorithm>
#include <array>
#include <cstddef>
#include <exception>
#include <functional>
#include <numbers>
#include <optional>
#include <thread>
#include <vector>

#include "incomp/case_analyzer.hpp"
#include "incomp/errors.hpp"
#include "incomp/majorization.hpp"
#include "incomp/qubit_ops.hpp"
#include "incomp/scenarios.hpp"
#include "incomp/state.hpp"

namespace incomp {

struct SweepRecord {
  double phi = 0.0;                // alpha = cos phi
  std::optional<double> delta;     // beta = e^{i delta} sin phi; absent for real sweeps
  double big_a = 0.0;
  double big_b = 0.0;
  std::array<double, 3> lam{};     // closed-form spectrum of rho_A(pi_final)
  double entropy_initial = 0.0;
  double entropy_final = 0.0;
  Convertibility observed = Convertibility::Equal;
  Prediction predicted = Prediction::NotIncomparable;
  bool agree = false;
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t incomparable = 0;
  std::size_t increase = 0;     // CONVERTIBLE_BACKWARD: final strictly majorized by initial
  std::size_t equal = 0;
  std::size_t convertible = 0;  // CONVERTIBLE_FORWARD
  std::size_t agree = 0;

  double fraction(std::size_t n) const {
    return total == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(total);
  }
};

namespace detail {

/// Runs fn(i) for i in [0, n) on up to `threads` workers; rethrows the first
/// exception (lowest index) after all workers finish.
inline void parallel_for(std::size_t n, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n ? n : 1)));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < n; i += threads) fn(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline SweepRecord make_record(double phi, std::optional<double> delta) {
  const auto rec = verify_prediction(IppParams::from_angles(phi, delta.value_or(0.0)));
  SweepRecord r;
  r.phi = phi;
  r.delta = delta;
  r.big_a = rec.spectrum.big_a;
  r.big_b = rec.spectrum.big_b;
  // Measured spectrum; the closed form agrees except near double roots.
  std::copy_n(rec.final_state.coefficients().begin(), 3, r.lam.begin());
  r.entropy_initial = rec.entropy_initial;
  r.entropy_final = rec.entropy_final;
  r.observed = rec.observed.label;
  r.predicted = rec.predicted.predicted;
  r.agree = rec.agree;
  return r;
}

inline double grid_angle(std::size_t i, std::size_t n) {
  return 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
}

}  // namespace detail

/// n equally spaced phi in [0, 2 pi), real alpha = cos phi, beta = sin phi.
inline std::vector<SweepRecord> sweep_real(std::size_t n, unsigned threads = 1) {
  if (n < 2) throw PreconditionError("sweep_real: n must be at least 2");
  std::vector<SweepRecord> out(n);
  detail::parallel_for(n, threads, [&](std::size_t i) {
    out[i] = detail::make_record(detail::grid_angle(i, n), std::nullopt);
  });
  return out;
}

/// phi-major grid over [0, 2 pi) x [0, 2 pi); beta = e^{i delta} sin phi.
inline std::vector<SweepRecord> sweep_complex(std::size_t n_phi, std::size_t n_delta,
                                              unsigned threads = 1) {
  if (n_phi < 2 || n_delta < 1) {
    throw PreconditionError("sweep_complex: need n_phi >= 2 and n_delta >= 1");
  }
  std::vector<SweepRecord> out(n_phi * n_delta);
  detail::parallel_for(out.size(), threads, [&](std::size_t k) {
    const std::size_t i = k / n_delta;
    const std::size_t j = k % n_delta;
    out[k] = detail::make_record(detail::grid_angle(i, n_phi), detail::grid_angle(j, n_delta));
  });
  return out;
}

inline SweepSummary summarize(const std::vector<SweepRecord>& records) {
  SweepSummary s;
  s.total = records.size();
  for (const auto& r : records) {
    switch (r.observed) {
      case Convertibility::Incomparable: ++s.incomparable; break;
      case Convertibility::ConvertibleBackward: ++s.increase; break;
      case Convertibility::Equal: ++s.equal; break;
      case Convertibility::ConvertibleForward: ++s.convertible; break;
    }
    if (r.agree) ++s.agree;
  }
  return s;
}

struct GammaGrid {
  std::size_t n_theta = 1;
  std::size_t n_a = 1;
  std::size_t n_b = 1;
  UnitaryParams origin{};  // grid starts here; steps are 2 pi / n per axis
};

struct GammaSummary {
  std::size_t points = 0;
  double max_deviation = 0.0;  // from interleaved_spectrum()
  UnitaryParams worst{};
};

/// Largest componentwise deviation of the Schmidt vector of chi_final over
/// the (theta, phi_a, phi_b) grid from the parameter-free expected spectrum.
inline GammaSummary sweep_gamma(const GammaGrid& grid, unsigned threads = 1) {
  if (grid.n_theta < 1 || grid.n_a < 1 || grid.n_b < 1) {
    throw PreconditionError("sweep_gamma: grid sizes must be positive");
  }
  const SchmidtVector expected = interleaved_spectrum();
  const std::size_t n = grid.n_theta * grid.n_a * grid.n_b;
  std::vector<double> dev(n);
  std::vector<UnitaryParams> params(n);
  detail::parallel_for(n, threads, [&](std::size_t k) {
    const std::size_t it = k / (grid.n_a * grid.n_b);
    const std::size_t ia = (k / grid.n_b) % grid.n_a;
    const std::size_t ib = k % grid.n_b;
    params[k] = {grid.origin.theta + detail::grid_angle(it, grid.n_theta),
                 grid.origin.phi_a + detail::grid_angle(ia, grid.n_a),
                 grid.origin.phi_b + detail::grid_angle(ib, grid.n_b)};
    dev[k] = schmidt_vector(chi_final(params[k])).max_abs_diff(expected);
  });
  GammaSummary s;
  s.points = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (dev[k] > s.max_deviation || k == 0) {
      s.max_deviation = dev[k];
      s.worst = params[k];
    }
  }
  return s;
}

}  // namespace incomp
