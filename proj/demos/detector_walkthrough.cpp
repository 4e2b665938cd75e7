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

// Walks through the two detector constructions: an anti-unitary and the
// flipping / Hadamard instances of the inner-product preserving map, each
// turning a state into an LOCC-incomparable partner.

#include <cstdio>
#include <numbers>

#include "incomp/incomp.hpp"

namespace {

void print_vector(const char* name, const incomp::SchmidtVector& v) {
  std::printf("  %-12s (", name);
  for (std::size_t i = 0; i < v.size(); ++i) std::printf(i ? ", %.6f" : "%.6f", v[i]);
  std::printf(")  E = %.6f bits\n", incomp::entropy_of_entanglement(v));
}

}  // namespace

int main() {
  using namespace incomp;

  std::printf("Anti-unitary C U on Bob's second qubit (theta = pi/2: universal flipper)\n");
  const auto chi_i = schmidt_vector(build_chi_initial());
  const auto chi_f = schmidt_vector(chi_final({std::numbers::pi / 2.0, 0.0, 0.0}));
  print_vector("initial", chi_i);
  print_vector("final", chi_f);
  std::printf("  verdict      %s\n\n", to_string(classify_pair(chi_i, chi_f).label).data());

  const double r = std::numbers::sqrt2 / 2.0;
  const struct {
    const char* name;
    IppParams params;
  } maps[] = {{"flipping", IppParams(0.0, 1.0)}, {"Hadamard", IppParams(r, r)}};
  for (const auto& m : maps) {
    const auto rec = verify_prediction(m.params);
    std::printf("Inner-product preserving map: %s (A = %.6f, B = %.6f)\n", m.name,
                rec.spectrum.big_a, rec.spectrum.big_b);
    print_vector("initial", rec.initial);
    print_vector("final", rec.final_state);
    std::printf("  predicted    %s\n  observed     %s\n\n",
                to_string(rec.predicted.predicted).data(),
                to_string(rec.observed.label).data());
  }
  return 0;
}
