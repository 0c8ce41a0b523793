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

#include <array>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "mirrorforge/error.hpp"

namespace mirrorforge::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const char* expected) {
  fail(ErrorCode::kFormat, "invalid value '" + value + "' for " + key + " (expected " + expected + ")");
}

double to_real(const std::string& key, const std::string& v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) bad_value(key, v, "a real number");
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) bad_value(key, v, "an integer");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  bad_value(key, v, "true or false");
}

std::string real_text(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

struct Field {
  std::string key;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

#define MF_REAL(name) \
  Field{#name, [](RunConfig& c, const std::string& v) { c.name = to_real(#name, v); }, \
        [](const RunConfig& c) { return real_text(c.name); }}
#define MF_INT(name) \
  Field{#name, [](RunConfig& c, const std::string& v) { c.name = to_int(#name, v); }, \
        [](const RunConfig& c) { return std::to_string(c.name); }}
#define MF_TEXT(name) \
  Field{#name, [](RunConfig& c, const std::string& v) { c.name = v; }, [](const RunConfig& c) { return c.name; }}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      MF_REAL(half_fov_deg),
      MF_REAL(y_width),
      Field{"panoramic", [](RunConfig& c, const std::string& v) { c.panoramic = to_bool("panoramic", v); },
            [](const RunConfig& c) { return std::string(c.panoramic ? "true" : "false"); }},
      Field{"target",
            [](RunConfig& c, const std::string& v) {
              if (v == "cylindrical") c.target = Target::kCylindrical;
              else if (v == "quadratic") c.target = Target::kQuadratic;
              else bad_value("target", v, "cylindrical or quadratic");
            },
            [](const RunConfig& c) {
              return std::string(c.target == Target::kCylindrical ? "cylindrical" : "quadratic");
            }},
      MF_REAL(rho),
      MF_REAL(camera_c),
      MF_INT(degree),
      MF_INT(quad_ny),
      MF_INT(quad_nz),
      Field{"quad_rule",
            [](RunConfig& c, const std::string& v) {
              if (v == "midpoint") c.quad_rule = QuadratureRule::kMidpoint;
              else if (v == "gauss") c.quad_rule = QuadratureRule::kGaussLegendre;
              else bad_value("quad_rule", v, "midpoint or gauss");
            },
            [](const RunConfig& c) {
              return std::string(c.quad_rule == QuadratureRule::kMidpoint ? "midpoint" : "gauss");
            }},
      MF_INT(quad_order),
      Field{"solver",
            [](RunConfig& c, const std::string& v) {
              if (v == "polynomial") c.solver = Solver::kPolynomial;
              else if (v == "poisson") c.solver = Solver::kPoisson;
              else bad_value("solver", v, "polynomial or poisson");
            },
            [](const RunConfig& c) { return std::string(c.solver == Solver::kPolynomial ? "polynomial" : "poisson"); }},
      MF_INT(poisson_ny),
      MF_INT(poisson_nz),
      MF_INT(check_ny),
      MF_INT(check_nz),
      Field{"variant",
            [](RunConfig& c, const std::string& v) {
              if (v == "strip") c.variant = Variant::kStrip;
              else if (v == "conquistador") c.variant = Variant::kConquistador;
              else bad_value("variant", v, "strip or conquistador");
            },
            [](const RunConfig& c) { return std::string(c.variant == Variant::kStrip ? "strip" : "conquistador"); }},
      MF_REAL(scene_radius),
      MF_INT(render_width),
      MF_INT(render_height),
      MF_INT(score_ny),
      MF_INT(score_nz),
      MF_INT(mesh_ny),
      MF_INT(mesh_nz),
      MF_INT(threads),
      MF_TEXT(surface_path),
      MF_TEXT(obj_path),
      MF_TEXT(ppm_path),
      MF_TEXT(report_path),
      MF_TEXT(csv_path),
  };
  return table;
}

#undef MF_REAL
#undef MF_INT
#undef MF_TEXT

void require(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorCode::kDomain, msg);
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const Field& f : fields()) out.push_back(f.key);
    return out;
  }();
  return keys;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  for (const Field& f : fields()) {
    if (f.key == key) {
      f.set(*this, value);
      return;
    }
  }
  fail(ErrorCode::kFormat, "unknown configuration key '" + key + "'");
}

void RunConfig::validate() const {
  domain_for_vfov(half_fov_deg);
  require(std::isfinite(y_width) && y_width > 0.0, "y_width must be positive (empty design domain)");
  if (panoramic && variant == Variant::kStrip) {
    require(y_width >= 2.0 * std::numbers::pi * (1.0 - 1e-12), "panoramic strip needs y_width >= 2*pi");
  }
  if (variant == Variant::kConquistador) {
    require(y_width >= std::numbers::pi * (1.0 - 1e-12), "conquistador needs y_width >= pi");
  }
  require(rho > 0.0, "rho must be positive (inf for the limit)");
  require(std::isfinite(camera_c) && camera_c > 0.0, "camera_c must be positive");
  require(degree >= 1 && degree <= 40, "degree must lie in [1, 40]");
  require(quad_ny >= 1 && quad_nz >= 1, "quadrature grid must be at least 1x1");
  require(quad_rule == QuadratureRule::kMidpoint || (quad_order >= 2 && quad_order <= 5),
          "quad_order must lie in [2, 5]");
  require(poisson_ny >= 8 && poisson_nz >= 8, "Poisson grid must be at least 8x8");
  require(check_ny >= 2 && check_nz >= 2, "check grid must be at least 2x2");
  require(std::isfinite(scene_radius) && scene_radius >= 0.0, "scene_radius must be >= 0 (0 selects auto)");
  require(render_width >= 1 && render_height >= 1, "render size must be positive");
  require(score_ny >= 10 && score_nz >= 10, "scoring needs at least 10x10 samples");
  require(mesh_ny >= 1 && mesh_nz >= 1, "mesh resolution must be at least 1x1");
  require(threads >= 0, "threads must be >= 0");
}

DomainRect RunConfig::domain() const {
  return DomainRect::panoramic(y_width, half_fov_deg);
}

Quadrature RunConfig::quadrature() const {
  return Quadrature{quad_ny, quad_nz, quad_rule, quad_order};
}

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(ErrorCode::kFormat, "config line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    try {
      base.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const Error& e) {
      fail(e.code(), "config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open config '" + path.string() + "'");
  return parse_config(in, std::move(base));
}

void write_config(std::ostream& out, const RunConfig& config) {
  for (const Field& f : fields()) out << f.key << " = " << f.get(config) << '\n';
}

}  // namespace mirrorforge::cli
