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

// incomp: command-line front end.
//
// Exit codes: 0 success, 2 malformed input, 3 internal contract violation.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "incomp/incomp.hpp"
#include "incomp/io.hpp"

namespace {

using incomp::Complex;
using incomp::io::format_complex;
using incomp::io::format_double;
using incomp::io::Format;
using incomp::io::round15;
using Json = nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitContract = 3;

/// Ordered field list rendered as "field,value" CSV rows or one JSON object.
class Report {
 public:
  void add(const std::string& key, double v) { fields_.emplace_back(key, round15(v)); }
  void add(const std::string& key, const std::string& v) { fields_.emplace_back(key, v); }
  void add(const std::string& key, bool v) { fields_.emplace_back(key, v); }
  void add(const std::string& key, Complex c) { add(key, format_complex(c)); }
  void add_vector(const std::string& prefix, std::span<const double> v) {
    for (std::size_t i = 0; i < v.size(); ++i) add(prefix + std::to_string(i + 1), v[i]);
  }

  void write(std::ostream& out, Format format) const {
    if (format == Format::Json) {
      Json j = Json::object();
      for (const auto& [k, v] : fields_) j[k] = v;
      out << j.dump(2) << '\n';
      return;
    }
    out << "field,value\n";
    for (const auto& [k, v] : fields_) {
      out << k << ',';
      if (v.is_number()) {
        out << format_double(v.get<double>());
      } else if (v.is_boolean()) {
        out << (v.get<bool>() ? "true" : "false");
      } else {
        out << v.get<std::string>();
      }
      out << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, Json>> fields_;
};

incomp::IppParams ipp_from_text(const std::string& alpha_text, const std::string& beta_text) {
  const Complex a = incomp::io::parse_complex(alpha_text);
  const Complex b = incomp::io::parse_complex(beta_text);
  const double n2 = std::norm(a) + std::norm(b);
  // Accept user input rounded to a few digits; rescale the rest of the way.
  if (!(std::abs(n2 - 1.0) <= 1e-6)) {
    throw incomp::InputError("|alpha|^2 + |beta|^2 = " + format_double(n2) + ", expected 1");
  }
  const double n = std::sqrt(n2);
  return {a / n, b / n};
}

void check_spectra(std::span<const double> closed, std::span<const double> jacobi,
                   const char* what) {
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (!(std::abs(closed[i] - jacobi[i]) <= incomp::kSpectrumAgreementTol)) {
      throw incomp::ContractViolation(std::string(what) +
                                      ": closed-form and Jacobi eigenvalues disagree");
    }
  }
}

void print_summary(const std::vector<incomp::SweepRecord>& records) {
  const auto s = incomp::summarize(records);
  std::cerr << "points " << s.total << "  incomparable " << s.incomparable << " ("
            << format_double(s.fraction(s.incomparable)) << ")  increase " << s.increase
            << " (" << format_double(s.fraction(s.increase)) << ")  equal " << s.equal << " ("
            << format_double(s.fraction(s.equal)) << ")  convertible " << s.convertible << " ("
            << format_double(s.fraction(s.convertible)) << ")  agree " << s.agree << '\n';
}

int cmd_schmidt(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) throw incomp::InputError("cannot open state file '" + path + "'");
  const auto state = incomp::io::read_state(in);
  const auto v = incomp::schmidt_vector(state);
  Report r;
  r.add("dimA", static_cast<double>(state.dim_a()));
  r.add("dimB", static_cast<double>(state.dim_b()));
  r.add_vector("lam", v.coefficients());
  r.add("entropy", incomp::entropy_of_entanglement(v));
  r.write(std::cout, format);
  return 0;
}

int cmd_check_pair(const std::string& a_text, const std::string& b_text, Format format) {
  const auto a = incomp::io::parse_schmidt_vector(a_text);
  const auto b = incomp::io::parse_schmidt_vector(b_text);
  const auto verdict = incomp::classify_pair(a, b);
  Report r;
  r.add("verdict", std::string(incomp::to_string(verdict.label)));
  r.add_vector("psum_a", verdict.partial_sums_src);
  r.add_vector("psum_b", verdict.partial_sums_dst);
  r.add("entropy_a", incomp::entropy_of_entanglement(a));
  r.add("entropy_b", incomp::entropy_of_entanglement(b));
  try {
    r.add("strict3", incomp::incomparable_strict3(a, b));
  } catch (const incomp::PreconditionError&) {
    r.add("strict3", std::string("n/a"));
  }
  r.write(std::cout, format);
  return 0;
}

int cmd_gamma_demo(const incomp::UnitaryParams& p, Format format) {
  const auto initial_state = incomp::build_chi_initial();
  const auto final_state = incomp::chi_final(p);
  const auto rho_f = incomp::reduced_density_A(final_state);
  const auto initial = incomp::schmidt_vector(initial_state);
  const auto final_v = incomp::schmidt_vector(final_state);
  check_spectra(incomp::eigenvalues_hermitian_trig(rho_f).values, final_v.coefficients(),
                "gamma-demo");
  const auto verdict = incomp::classify_pair(initial, final_v);
  const double no_signal_dev =
      incomp::reduced_density_A(incomp::chi_final_unitary_only(p))
          .max_abs_diff(incomp::reduced_density_A(initial_state));

  Report r;
  r.add("theta", p.theta);
  r.add("phi_a", p.phi_a);
  r.add("phi_b", p.phi_b);
  r.add_vector("initial_lam", initial.coefficients());
  r.add_vector("final_lam", final_v.coefficients());
  r.add("entropy_i", incomp::entropy_of_entanglement(initial));
  r.add("entropy_f", incomp::entropy_of_entanglement(final_v));
  r.add("verdict", std::string(incomp::to_string(verdict.label)));
  r.add("unitary_only_rho_deviation", no_signal_dev);
  r.write(std::cout, format);
  return 0;
}

int cmd_ipp_demo(const incomp::IppParams& p, Format format) {
  const auto c = incomp::pqr(p);
  const auto spectrum = incomp::ipp_spectrum(p);
  const auto initial = incomp::schmidt_vector(incomp::build_pi_initial());
  const auto direct = incomp::schmidt_vector(incomp::pi_final(p));
  check_spectra(spectrum.eigenvalues, direct.coefficients(), "ipp-demo");
  const auto verdict = incomp::classify_pair(initial, direct);

  Report r;
  r.add("alpha", p.alpha());
  r.add("beta", p.beta());
  r.add("p", c.p);
  r.add("q", c.q);
  r.add("r", c.r);
  r.add("A", spectrum.big_a);
  r.add("B", spectrum.big_b);
  r.add("eigen_angle", spectrum.eigen_angle);
  r.add_vector("lam", spectrum.eigenvalues);
  r.add_vector("initial_lam", initial.coefficients());
  r.add("entropy_i", incomp::entropy_of_entanglement(initial));
  r.add("entropy_f", incomp::entropy_of_entanglement(direct));
  r.add("verdict", std::string(incomp::to_string(verdict.label)));
  r.write(std::cout, format);
  return 0;
}

int cmd_case_analyze(const incomp::IppParams& p, Format format) {
  const auto rec = incomp::verify_prediction(p);
  const auto& v = rec.predicted;
  Report r;
  r.add("alpha", p.alpha());
  r.add("beta", p.beta());
  r.add("A", rec.spectrum.big_a);
  r.add("B", rec.spectrum.big_b);
  r.add("case", std::string(incomp::to_string(v.case_id)));
  r.add("subcase", std::string(incomp::to_string(v.subcase)));
  r.add("predicted", std::string(incomp::to_string(v.predicted)));
  if (v.condition_value) {
    r.add("condition_value", *v.condition_value);
    r.add("alternate_condition_value", *v.alternate_condition_value);
    r.add("condition_holds", *v.condition_holds);
  }
  r.add_vector("lam", rec.spectrum.eigenvalues);
  r.add("observed", std::string(incomp::to_string(rec.observed.label)));
  r.add("entropy_delta", rec.entropy_delta);
  r.add("agree", rec.agree);
  r.add("boundary_note",
        std::string("B<0 uses 2sqrt(A)cos(2pi/3+t) > -sqrt(3)/2; B>0 uses 2sqrt(A)cos(t) < "
                    "sqrt(3)/2 (t in [0 pi/3]); the swapped pairing disagrees with direct "
                    "classification"));
  r.write(std::cout, format);
  return 0;
}

int cmd_sweep_gamma(const incomp::GammaGrid& grid, unsigned threads, Format format) {
  const auto s = incomp::sweep_gamma(grid, threads);
  Report r;
  r.add("points", static_cast<double>(s.points));
  r.add("max_deviation", s.max_deviation);
  r.add("worst_theta", s.worst.theta);
  r.add("worst_phi_a", s.worst.phi_a);
  r.add("worst_phi_b", s.worst.phi_b);
  const bool ok = s.max_deviation < 1e-10;
  r.add("within_contract", ok);
  r.write(std::cout, format);
  if (!ok) throw incomp::ContractViolation("sweep-gamma: Schmidt vector depends on parameters");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detect nonphysical local operations via LOCC-incomparable state pairs"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::Csv;
  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for sweeps")
      ->check(CLI::Range(1u, 256u));

  auto* schmidt = app.add_subcommand("schmidt", "Schmidt vector and entropy of a state file");
  std::string state_file;
  schmidt->add_option("state-file", state_file, "Text file: 'dimA dimB' then 're im' lines")
      ->required();

  auto* check_pair = app.add_subcommand("check-pair", "Classify two Schmidt vectors");
  std::string vec_a;
  std::string vec_b;
  check_pair->add_option("vecA", vec_a, "Comma-separated probabilities")->required();
  check_pair->add_option("vecB", vec_b, "Comma-separated probabilities")->required();

  auto* gamma = app.add_subcommand("gamma-demo", "Anti-unitary C U on the chi state");
  incomp::UnitaryParams up;
  gamma->add_option("--theta", up.theta, "radians");
  gamma->add_option("--phi-a", up.phi_a, "radians");
  gamma->add_option("--phi-b", up.phi_b, "radians");

  std::string alpha_text;
  std::string beta_text;
  auto* ipp = app.add_subcommand("ipp-demo", "Inner-product preserving map on the pi state");
  ipp->add_option("--alpha", alpha_text, "complex, re[+im i]")->required();
  ipp->add_option("--beta", beta_text, "complex, re[+im i]")->required();

  auto* case_analyze =
      app.add_subcommand("case-analyze", "Predicted vs observed verdict for (alpha, beta)");
  case_analyze->add_option("--alpha", alpha_text, "complex, re[+im i]")->required();
  case_analyze->add_option("--beta", beta_text, "complex, re[+im i]")->required();

  auto* sweep_real = app.add_subcommand("sweep-real", "alpha = cos phi, beta = sin phi");
  std::size_t n = 0;
  sweep_real->add_option("--n", n, "grid points in [0, 2pi)")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));

  auto* sweep_complex =
      app.add_subcommand("sweep-complex", "alpha = cos phi, beta = e^{i delta} sin phi");
  std::size_t n_phi = 0;
  std::size_t n_delta = 0;
  sweep_complex->add_option("--n-phi", n_phi)
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  sweep_complex->add_option("--n-delta", n_delta)
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));

  auto* sweep_gamma = app.add_subcommand("sweep-gamma", "Parameter independence of C U");
  incomp::GammaGrid grid;
  sweep_gamma->add_option("--n-theta", grid.n_theta)
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000}));
  sweep_gamma->add_option("--n-a", grid.n_a)
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000}));
  sweep_gamma->add_option("--n-b", grid.n_b)
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000}));
  sweep_gamma->add_option("--theta0", grid.origin.theta, "grid origin (radians)");
  sweep_gamma->add_option("--phi-a0", grid.origin.phi_a, "grid origin (radians)");
  sweep_gamma->add_option("--phi-b0", grid.origin.phi_b, "grid origin (radians)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*schmidt) return cmd_schmidt(state_file, format);
    if (*check_pair) return cmd_check_pair(vec_a, vec_b, format);
    if (*gamma) {
      if (!std::isfinite(up.theta) || !std::isfinite(up.phi_a) || !std::isfinite(up.phi_b)) {
        throw incomp::InputError("angles must be finite");
      }
      return cmd_gamma_demo(up, format);
    }
    if (*ipp) return cmd_ipp_demo(ipp_from_text(alpha_text, beta_text), format);
    if (*case_analyze) return cmd_case_analyze(ipp_from_text(alpha_text, beta_text), format);
    if (*sweep_real) {
      const auto records = incomp::sweep_real(n, threads);
      incomp::io::write_sweep(std::cout, records, format);
      print_summary(records);
      return 0;
    }
    if (*sweep_complex) {
      const auto records = incomp::sweep_complex(n_phi, n_delta, threads);
      incomp::io::write_sweep(std::cout, records, format);
      print_summary(records);
      return 0;
    }
    if (*sweep_gamma) return cmd_sweep_gamma(grid, threads, format);
  } catch (const incomp::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const incomp::ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return kExitContract;
  } catch (const incomp::ConvergenceError& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return kExitContract;
  }
  return kExitInput;
}
