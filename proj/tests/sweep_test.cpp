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

#include "incomp/sweep.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "incomp/io.hpp"
#include "support/oracles.hpp"

namespace incomp {
namespace {

constexpr double kPi = std::numbers::pi;

const SweepRecord& at_phi(const std::vector<SweepRecord>& records, double phi) {
  for (const auto& r : records) {
    if (std::abs(r.phi - phi) < 1e-12) return r;
  }
  throw std::runtime_error("grid point missing");
}

TEST(SweepReal, NamedGridPoints) {
  const auto four = sweep_real(4);
  ASSERT_EQ(four.size(), 4u);
  EXPECT_EQ(at_phi(four, 0.0).observed, Convertibility::Equal);
  EXPECT_EQ(at_phi(four, kPi / 2.0).observed, Convertibility::Incomparable);  // flipping
  const auto eight = sweep_real(8);
  EXPECT_EQ(at_phi(eight, kPi / 4.0).observed, Convertibility::Incomparable);  // Hadamard
  EXPECT_THROW(sweep_real(1), PreconditionError);
}

TEST(SweepReal, RecordsAreOrderedAndNormalized) {
  const auto records = sweep_real(360);
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) {
      EXPECT_GT(records[i].phi, records[i - 1].phi);
    }
    EXPECT_FALSE(records[i].delta.has_value());
    EXPECT_NEAR(records[i].lam[0] + records[i].lam[1] + records[i].lam[2], 1.0, 1e-10);
  }
}

TEST(SweepComplex, ZeroDeltaRowsMatchRealSweep) {
  const auto real = sweep_real(4);
  const auto complex = sweep_complex(4, 1);
  ASSERT_EQ(real.size(), complex.size());
  for (std::size_t i = 0; i < real.size(); ++i) {
    EXPECT_EQ(real[i].phi, complex[i].phi);
    EXPECT_EQ(complex[i].delta.value(), 0.0);
    EXPECT_NEAR(real[i].big_a, complex[i].big_a, 1e-12);
    EXPECT_NEAR(real[i].big_b, complex[i].big_b, 1e-12);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(real[i].lam[k], complex[i].lam[k], 1e-12);
    EXPECT_EQ(real[i].observed, complex[i].observed);
    EXPECT_EQ(real[i].predicted, complex[i].predicted);
  }

  const auto wide = sweep_complex(24, 6);
  for (std::size_t i = 0; i < wide.size(); i += 6) {
    const auto& row = wide[i];
    EXPECT_EQ(row.delta.value(), 0.0);
    const auto ref = sweep_real(24)[i / 6];
    EXPECT_NEAR(ref.big_b, row.big_b, 1e-12);
  }
}

TEST(SweepComplex, GridOrderAndJacobiAgreement) {
  const std::size_t n_phi = 30;
  const std::size_t n_delta = 12;
  const auto records = sweep_complex(n_phi, n_delta);
  ASSERT_EQ(records.size(), n_phi * n_delta);
  for (std::size_t k = 1; k < records.size(); ++k) {
    const auto& a = records[k - 1];
    const auto& b = records[k];
    EXPECT_TRUE(b.phi > a.phi || (b.phi == a.phi && *b.delta > *a.delta));
  }
  for (const auto& r : records) {
    const auto p = IppParams::from_angles(r.phi, *r.delta);
    const auto jac = eigenvalues_hermitian_jacobi(reduced_density_A(pi_final(p)));
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(r.lam[k], jac[k], 1e-10);
    // Schur concavity: backward conversion never lowers entropy.
    if (r.observed == Convertibility::ConvertibleBackward) {
      EXPECT_GE(r.entropy_final, r.entropy_initial - 1e-10);
    }
  }
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  const auto serial = sweep_complex(40, 9, 1);
  const auto parallel = sweep_complex(40, 9, 4);
  std::ostringstream a;
  std::ostringstream b;
  io::write_sweep(a, serial, io::Format::Csv);
  io::write_sweep(b, parallel, io::Format::Csv);
  EXPECT_EQ(a.str(), b.str());
  std::ostringstream c;
  io::write_sweep(c, sweep_complex(40, 9, 1), io::Format::Csv);
  EXPECT_EQ(a.str(), c.str());
}

TEST(Summarize, CountsPartitionRecords) {
  const auto records = sweep_complex(36, 8);
  const auto s = summarize(records);
  EXPECT_EQ(s.total, records.size());
  EXPECT_EQ(s.incomparable + s.increase + s.equal + s.convertible, s.total);
  EXPECT_EQ(s.fraction(s.incomparable) + s.fraction(s.increase) + s.fraction(s.equal) +
                s.fraction(s.convertible),
            1.0);
}

TEST(SweepGamma, Origin) {
  EXPECT_LT(sweep_gamma({1, 1, 1, {}}).max_deviation, 1e-10);
}

TEST(SweepGamma, Flipper) {
  const auto s = sweep_gamma({1, 1, 1, {kPi / 2.0, 0.0, 0.0}});
  EXPECT_EQ(s.points, 1u);
  EXPECT_LT(s.max_deviation, 1e-10);
  EXPECT_DOUBLE_EQ(s.worst.theta, kPi / 2.0);
}

TEST(SweepGamma, FullGrid) {
  const auto s = sweep_gamma({8, 8, 8, {}}, 2);
  EXPECT_EQ(s.points, 512u);
  EXPECT_LT(s.max_deviation, 1e-10);
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(detail::parallel_for(100, 4,
                                    [](std::size_t i) {
                                      if (i == 57) throw ContractViolation("boom");
                                    }),
               ContractViolation);
}

}  // namespace
}  // namespace incomp
