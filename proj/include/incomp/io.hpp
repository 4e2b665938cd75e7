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

// Text formats used by the command-line tool.
//
//   complex:    re, re+imi, re-imi, imi        e.g. 0.5+0.5i, -1e-3i
//   vector:     comma-separated reals           e.g. 0.5,0.3,0.2
//   state file: "dimA dimB" then dimA*dimB lines of "re im"
//
// Numbers are written with 15 significant digits.

#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "incomp/errors.hpp"
#include "incomp/linalg.hpp"
#include "incomp/state.hpp"
#include "incomp/sweep.hpp"

namespace incomp::io {

inline constexpr std::string_view kSweepCsvHeader =
    "phi,delta,A,B,lam1,lam2,lam3,entropy_i,entropy_f,observed,predicted,agree";

enum class Format { Csv, Json };

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

/// x rounded to 15 significant digits, so JSON output matches CSV.
inline double round15(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format_double(x));
}

inline std::string format_complex(Complex c) {
  std::string s = format_double(c.real());
  const double im = c.imag();
  s += (std::signbit(im) ? "-" : "+") + format_double(std::abs(im)) + "i";
  return s;
}

inline Complex parse_complex(std::string_view text) {
  static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex full("^\\s*([+-]?" + num + ")?(?:([+-])(" + num + ")?i)?\\s*$");
  static const std::regex imag_only("^\\s*([+-]?" + num + ")?i\\s*$");
  const std::string s(text);
  std::smatch m;
  if (s.find_first_not_of(" \t") != std::string::npos) {
    if (std::regex_match(s, m, imag_only)) {
      const std::string c = m[1].str();
      const double im = c.empty() || c == "+" ? 1.0 : c == "-" ? -1.0 : std::stod(c);
      return {0.0, im};
    }
    if (std::regex_match(s, m, full) && (m[1].matched || m[2].matched)) {
      const double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
      double im = 0.0;
      if (m[2].matched) {
        im = m[3].matched ? std::stod(m[3].str()) : 1.0;
        if (m[2].str() == "-") im = -im;
      }
      return {re, im};
    }
  }
  throw InputError("malformed complex number '" + s + "' (expected re[+im i])");
}

inline std::vector<double> parse_real_vector(std::string_view text) {
  std::vector<double> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InputError("malformed number '" + item + "' in vector '" + std::string(text) + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos || !std::isfinite(x)) {
      throw InputError("malformed number '" + item + "' in vector '" + std::string(text) + "'");
    }
    out.push_back(x);
  }
  if (out.empty()) throw InputError("empty vector");
  return out;
}

/// Probability vector from user text; sorted descending, must be a valid
/// Schmidt vector after sorting.
inline SchmidtVector parse_schmidt_vector(std::string_view text) {
  try {
    return SchmidtVector::from_unsorted(parse_real_vector(text));
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
}

/// Reads a state file. Amplitudes are rescaled to unit norm; an all-zero
/// state is rejected.
inline BipartiteState read_state(std::istream& in) {
  long long dim_a = 0;
  long long dim_b = 0;
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw InputError("state file: missing 'dimA dimB' header");
  {
    std::istringstream hs(line);
    std::string rest;
    if (!(hs >> dim_a >> dim_b) || (hs >> rest) || dim_a <= 0 || dim_b <= 0) {
      throw InputError("state file: header must be two positive integers");
    }
  }
  const auto n = static_cast<std::size_t>(dim_a * dim_b);
  std::vector<Complex> amps;
  amps.reserve(n);
  while (amps.size() < n && next_line()) {
    std::istringstream ls(line);
    double re = 0.0;
    double im = 0.0;
    std::string rest;
    if (!(ls >> re >> im) || (ls >> rest) || !std::isfinite(re) || !std::isfinite(im)) {
      throw InputError("state file: malformed amplitude line '" + line + "'");
    }
    amps.emplace_back(re, im);
  }
  if (amps.size() != n) {
    throw InputError("state file: expected " + std::to_string(n) + " amplitude lines, got " +
                     std::to_string(amps.size()));
  }
  if (next_line()) throw InputError("state file: trailing content after amplitudes");
  try {
    return BipartiteState(static_cast<std::size_t>(dim_a), static_cast<std::size_t>(dim_b),
                          Ket::normalized(std::move(amps)));
  } catch (const PreconditionError& e) {
    throw InputError(std::string("state file: ") + e.what());
  }
}

inline nlohmann::ordered_json to_json(const SweepRecord& r) {
  nlohmann::ordered_json j;
  j["phi"] = round15(r.phi);
  j["delta"] = r.delta ? nlohmann::ordered_json(round15(*r.delta)) : nlohmann::ordered_json();
  j["A"] = round15(r.big_a);
  j["B"] = round15(r.big_b);
  j["lam1"] = round15(r.lam[0]);
  j["lam2"] = round15(r.lam[1]);
  j["lam3"] = round15(r.lam[2]);
  j["entropy_i"] = round15(r.entropy_initial);
  j["entropy_f"] = round15(r.entropy_final);
  j["observed"] = std::string(to_string(r.observed));
  j["predicted"] = std::string(to_string(r.predicted));
  j["agree"] = r.agree;
  return j;
}

inline void write_sweep(std::ostream& out, const std::vector<SweepRecord>& records,
                        Format format) {
  if (format == Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
    return;
  }
  out << kSweepCsvHeader << '\n';
  for (const auto& r : records) {
    out << format_double(r.phi) << ',' << (r.delta ? format_double(*r.delta) : "") << ','
        << format_double(r.big_a) << ',' << format_double(r.big_b) << ','
        << format_double(r.lam[0]) << ',' << format_double(r.lam[1]) << ','
        << format_double(r.lam[2]) << ',' << format_double(r.entropy_initial) << ','
        << format_double(r.entropy_final) << ',' << to_string(r.observed) << ','
        << to_string(r.predicted) << ',' << (r.agree ? "true" : "false") << '\n';
  }
}

}  // namespace incomp::io
