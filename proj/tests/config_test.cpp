// Copyright 2026 The MirrorForge Authors
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

#include "cli/config.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "mirrorforge/error.hpp"

namespace mirrorforge::cli {
namespace {

RunConfig Parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

void ExpectErrorAtLine(const std::string& text, ErrorCode code, int line) {
  try {
    Parse(text);
    FAIL() << "accepted: " << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code);
    EXPECT_NE(std::string(e.what()).find("config line " + std::to_string(line) + ":"), std::string::npos)
        << e.what();
  }
}

TEST(ParseConfig, KeysCommentsAndBlankLines) {
  const RunConfig c = Parse(
      "# design run\n"
      "\n"
      "degree = 10   # higher order\n"
      "  half_fov_deg=25\n"
      "quad_rule = gauss\n"
      "variant = conquistador\n"
      "rho = 100\n"
      "surface_path = out/m.poly\n");
  EXPECT_EQ(c.degree, 10);
  EXPECT_EQ(c.half_fov_deg, 25.0);
  EXPECT_EQ(c.quad_rule, QuadratureRule::kGaussLegendre);
  EXPECT_EQ(c.variant, Variant::kConquistador);
  EXPECT_EQ(c.rho, 100.0);
  EXPECT_EQ(c.surface_path, "out/m.poly");
  EXPECT_EQ(c.quad_ny, 64);
}

TEST(ParseConfig, ErrorsCarryTheLineNumber) {
  ExpectErrorAtLine("degree = 8\nwidth = 3\n", ErrorCode::kFormat, 2);
  ExpectErrorAtLine("\n\ndegree = eight\n", ErrorCode::kFormat, 3);
  ExpectErrorAtLine("degree 8\n", ErrorCode::kFormat, 1);
  ExpectErrorAtLine("solver = newton\n", ErrorCode::kFormat, 1);
}

TEST(WriteConfig, RoundTripIsAFixedPoint) {
  RunConfig c;
  c.degree = 12;
  c.half_fov_deg = 0.1 + 0.2;
  c.target = Target::kQuadratic;
  c.solver = Solver::kPoisson;
  c.panoramic = false;
  c.csv_path = "samples.csv";
  std::ostringstream first;
  write_config(first, c);
  const RunConfig back = Parse(first.str());
  EXPECT_TRUE(back == c);
  std::ostringstream second;
  write_config(second, back);
  EXPECT_EQ(second.str(), first.str());
  EXPECT_NE(first.str().find("rho = inf\n"), std::string::npos);
  const std::string text = first.str();
  EXPECT_EQ(config_keys().size(), static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')));
}

TEST(Validate, DefaultsAreValid) {
  EXPECT_NO_THROW(RunConfig{}.validate());
  const DomainRect d = RunConfig{}.domain();
  EXPECT_NEAR(d.z.hi, 0.5773503, 1e-7);
}

TEST(Validate, RejectsOutOfRangeValues) {
  const auto expect_domain_error = [](auto mutate) {
    RunConfig c;
    mutate(c);
    try {
      c.validate();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDomain);
    }
  };
  expect_domain_error([](RunConfig& c) { c.half_fov_deg = 95; });
  expect_domain_error([](RunConfig& c) { c.half_fov_deg = 0; });
  expect_domain_error([](RunConfig& c) { c.y_width = 0; });
  expect_domain_error([](RunConfig& c) { c.y_width = 3; });
  expect_domain_error([](RunConfig& c) { c.degree = 0; });
  expect_domain_error([](RunConfig& c) { c.quad_ny = 0; });
  expect_domain_error([](RunConfig& c) { c.poisson_ny = 7; });
  expect_domain_error([](RunConfig& c) { c.score_nz = 9; });
  expect_domain_error([](RunConfig& c) { c.scene_radius = -1; });
  expect_domain_error([](RunConfig& c) { c.rho = -2; });
  RunConfig narrow;
  narrow.panoramic = false;
  narrow.y_width = 3;
  EXPECT_NO_THROW(narrow.validate());
}

}  // namespace
}  // namespace mirrorforge::cli
