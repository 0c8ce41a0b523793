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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "mirrorforge/projection.hpp"
#include "mirrorforge/quadrature.hpp"

namespace mirrorforge::cli {

enum class Variant { kStrip, kConquistador };
enum class Solver { kPolynomial, kPoisson };
enum class Target { kCylindrical, kQuadratic };

/// Everything a single run needs. Serialized as flat `key = value` lines.
struct RunConfig {
  double half_fov_deg = 30.0;
  double y_width = 2.0 * std::numbers::pi;
  bool panoramic = true;
  Target target = Target::kCylindrical;
  double rho = std::numeric_limits<double>::infinity();
  double camera_c = 2.0;

  int degree = 8;
  int quad_ny = 64;
  int quad_nz = 64;
  QuadratureRule quad_rule = QuadratureRule::kMidpoint;
  int quad_order = 3;
  Solver solver = Solver::kPolynomial;
  int poisson_ny = 64;
  int poisson_nz = 64;

  int check_ny = 33;
  int check_nz = 17;

  Variant variant = Variant::kStrip;
  double scene_radius = 0.0;  // 0: ten times the mirror's lateral extent
  int render_width = 640;
  int render_height = 480;
  int score_ny = 100;
  int score_nz = 40;
  int mesh_ny = 64;
  int mesh_nz = 32;
  int threads = 0;

  std::string surface_path = "mirror.poly";
  std::string obj_path = "mirror.obj";
  std::string ppm_path = "render.ppm";
  std::string report_path;  // empty: stdout
  std::string csv_path;     // empty: no CSV

  /// Sets one key from its text form. Throws E_FORMAT for unknown keys or
  /// unparseable values.
  void set(const std::string& key, const std::string& value);

  /// Checks every numeric field against the preconditions of the modules it
  /// feeds. Throws E_DOMAIN.
  void validate() const;

  DomainRect domain() const;
  Quadrature quadrature() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Keys in serialization order.
const std::vector<std::string>& config_keys();

/// `key = value` lines; '#' starts a comment; blank lines ignored. Errors
/// carry the line number.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});
void write_config(std::ostream& out, const RunConfig& config);

}  // namespace mirrorforge::cli
