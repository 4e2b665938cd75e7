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

#include "incomp/io.hpp"

#include <numbers>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace incomp {
namespace {

TEST(ParseComplex, AcceptedForms) {
  EXPECT_EQ(io::parse_complex("0.5"), Complex(0.5, 0.0));
  EXPECT_EQ(io::parse_complex("0.5+0.5i"), Complex(0.5, 0.5));
  EXPECT_EQ(io::parse_complex("-0.25-1.5i"), Complex(-0.25, -1.5));
  EXPECT_EQ(io::parse_complex("1e-3+2E1i"), Complex(1e-3, 20.0));
  EXPECT_EQ(io::parse_complex("0.7i"), Complex(0.0, 0.7));
  EXPECT_EQ(io::parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(io::parse_complex("1+i"), Complex(1.0, 1.0));
  EXPECT_EQ(io::parse_complex(" .5 "), Complex(0.5, 0.0));
}

TEST(ParseComplex, RejectsMalformed) {
  for (const char* s : {"", "abc", "1+", "1+2", "i1", "1..2", "1+2j", "--1", "1 + 2i"}) {
    EXPECT_THROW(io::parse_complex(s), InputError) << s;
  }
}

TEST(ParseVector, Basic) {
  EXPECT_EQ(io::parse_real_vector("0.5,0.3,0.2"), (std::vector<double>{0.5, 0.3, 0.2}));
  EXPECT_THROW(io::parse_real_vector("0.5,,0.5"), InputError);
  EXPECT_THROW(io::parse_real_vector("0.5,x"), InputError);
  EXPECT_THROW(io::parse_schmidt_vector("0.5,0.6"), InputError);
  EXPECT_EQ(io::parse_schmidt_vector("0.2,0.8")[0], 0.8);
}

TEST(ReadState, BellState) {
  std::istringstream in("2 2\n1 0\n0 0\n0 0\n1 0\n");
  const auto s = io::read_state(in);
  EXPECT_EQ(s.dim_a(), 2u);
  const auto v = schmidt_vector(s);
  EXPECT_NEAR(v[0], 0.5, 1e-12);
  EXPECT_NEAR(v[1], 0.5, 1e-12);
}

TEST(ReadState, Malformed) {
  for (const char* text : {"", "2\n", "2 2\n1 0\n", "2 2\n1 0\n0 0\n0 0\n0 x\n",
                           "0 2\n", "2 2\n0 0\n0 0\n0 0\n0 0\n", "2 2\n1 0\n0 0\n0 0\n1 0\n1 0\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(io::read_state(in), InputError) << text;
  }
}

TEST(FormatDouble, FifteenSignificantDigits) {
  EXPECT_EQ(io::format_double(1.0 / 3.0), "0.333333333333333");
  EXPECT_EQ(io::format_double(0.25), "0.25");
  EXPECT_EQ(io::format_complex(Complex(0.5, -0.5)), "0.5-0.5i");
}

TEST(WriteSweep, CsvHeaderAndRealDeltaColumn) {
  std::ostringstream out;
  io::write_sweep(out, sweep_real(4), io::Format::Csv);
  std::istringstream lines(out.str());
  std::string header;
  std::string first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "phi,delta,A,B,lam1,lam2,lam3,entropy_i,entropy_f,observed,predicted,agree");
  EXPECT_EQ(first.substr(0, 9), "0,,0.25,0");
  EXPECT_NE(first.find("EQUAL,NOT_INCOMPARABLE,true"), std::string::npos);
}

TEST(WriteSweep, JsonFieldsMatchCsvHeader) {
  std::ostringstream out;
  io::write_sweep(out, sweep_complex(4, 2), io::Format::Json);
  const auto j = nlohmann::json::parse(out.str());
  ASSERT_EQ(j.size(), 8u);
  std::string keys;
  for (auto it = j[0].begin(); it != j[0].end(); ++it) keys += (keys.empty() ? "" : ",") + it.key();
  EXPECT_EQ(keys, "A,B,agree,delta,entropy_f,entropy_i,lam1,lam2,lam3,observed,phi,predicted");
  EXPECT_EQ(j[1]["delta"].get<double>(), io::round15(std::numbers::pi));
}

}  // namespace
}  // namespace incomp
