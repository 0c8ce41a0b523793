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

#include "cli/commands.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "mirrorforge/coeff_io.hpp"
#include "mirrorforge/error.hpp"
#include "mirrorforge/fit.hpp"
#include "mirrorforge/mesh.hpp"
#include "mirrorforge/poisson.hpp"
#include "mirrorforge/sim.hpp"

namespace mirrorforge::cli {

namespace {

constexpr double kDefaultSceneFactor = 10.0;

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void print_domain(std::ostream& out, const DomainRect& d) {
  out << "domain = [" << format_real(d.y.lo) << ", " << format_real(d.y.hi) << "] x [" << format_real(d.z.lo)
      << ", " << format_real(d.z.hi) << "]\n";
}

Scene make_scene(const RunConfig& config, const GraphSurface& mirror) {
  Scene scene = Scene::around(mirror, kDefaultSceneFactor);
  if (config.scene_radius > 0.0) scene.radius = config.scene_radius;
  return scene;
}

int fit_and_write(const RunConfig& config, const PlanarComponents& target, std::ostream& out) {
  const DomainRect domain = config.domain();
  if (config.solver == Solver::kPolynomial) {
    FitOptions options;
    options.threads = config.threads;
    const FitResult fit = fit_polynomial(target, domain, PolyBasis(config.degree), config.quadrature(), options);
    write_polynomial(config.surface_path, fit.polynomial);
    out << "solver = polynomial\n"
        << "degree = " << config.degree << '\n'
        << "quadrature = " << config.quad_ny << 'x' << config.quad_nz << ' '
        << (config.quad_rule == QuadratureRule::kMidpoint ? "midpoint" : "gauss") << '\n';
    print_domain(out, domain);
    out << "objective = " << format_real(fit.objective) << '\n'
        << "condition = " << format_real(fit.condition_number) << '\n'
        << "surface = " << config.surface_path << '\n';
  } else {
    const PoissonResult sol = fit_poisson(target, domain, config.poisson_ny, config.poisson_nz);
    write_grid(config.surface_path, sol.surface);
    out << "solver = poisson\n"
        << "grid = " << config.poisson_ny << 'x' << config.poisson_nz << '\n';
    print_domain(out, domain);
    out << "objective = " << format_real(sol.objective) << '\n'
        << "iterations = " << sol.iterations << '\n'
        << "relative_residual = " << format_real(sol.relative_residual) << '\n'
        << "surface = " << config.surface_path << '\n';
  }
  return 0;
}

}  // namespace

PlanarComponents make_target(const RunConfig& config) {
  if (config.target == Target::kQuadratic) {
    return PlanarComponents([](double y, double z) { return SlopePair{2.0 * y, 2.0 * z}; });
  }
  const NormalField field = build_field(CameraModel{config.camera_c}, ProjectionSpec::limit());
  return scaled_components(field, config.domain());
}

NormalField make_field(const RunConfig& config) {
  if (config.target == Target::kQuadratic) {
    // Normal of x = y^2 + z^2: an exact gradient field.
    return NormalField::custom([](const Vec3& r) { return Vec3{1.0, -2.0 * r.y, -2.0 * r.z}; });
  }
  const ProjectionSpec spec =
      std::isfinite(config.rho) ? ProjectionSpec::finite(config.rho) : ProjectionSpec::limit();
  return build_field(CameraModel{config.camera_c}, spec);
}

std::unique_ptr<GraphSurface> load_surface(const RunConfig& config) {
  SurfaceData data = read_surface_file(config.surface_path);
  std::optional<MirrorSurface> strip;
  if (auto* poly = std::get_if<Polynomial>(&data)) {
    strip.emplace(std::move(*poly), config.domain());
  } else {
    auto& grid = std::get<GridFunction>(data);
    const DomainRect d = grid.domain();
    strip.emplace(std::move(grid), d);
  }
  const MirrorSurface placed = strip->with_apex_at(0.0);
  CameraModel{config.camera_c}.validate(placed.max_x());
  if (config.variant == Variant::kConquistador) return std::make_unique<CompositeSurface>(make_conquistador(placed));
  return std::make_unique<MirrorSurface>(placed);
}

int cmd_design(const RunConfig& config, std::ostream& out) {
  const NormalField field = make_field(config);
  const PlanarComponents target = make_target(config);
  const ResidualReport residual =
      max_integrability_residual(field, config.domain(), config.check_ny, config.check_nz);
  out << "target = " << (config.target == Target::kCylindrical ? "cylindrical" : "quadratic") << '\n'
      << "max_residual = " << format_real(residual.max_abs) << '\n';
  return fit_and_write(config, target, out);
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  const NormalField field = make_field(config);
  const DomainRect domain = config.domain();
  const ResidualReport r = max_integrability_residual(field, domain, config.check_ny, config.check_nz);
  out << "field = "
      << (field.kind() == FieldKind::kCylindricalLimit ? "cylindrical-limit"
                                                         : (field.kind() == FieldKind::kGeneral ? "general" : "custom"))
      << '\n'
      << "grid = " << r.samples_y << 'x' << r.samples_z << '\n';
  print_domain(out, domain);
  out << "max_residual = " << format_real(r.max_abs) << '\n'
      << "at = " << format_real(r.at_y) << ' ' << format_real(r.at_z) << '\n'
      << "integrable = " << (r.max_abs < 1e-7 ? "yes" : "no") << '\n';
  return 0;
}

int cmd_fit(const RunConfig& config, std::ostream& out) {
  return fit_and_write(config, make_target(config), out);
}

int cmd_export_obj(const RunConfig& config, std::ostream& out) {
  const auto surface = load_surface(config);
  const Mesh mesh = tessellate(*surface, config.mesh_ny, config.mesh_nz);
  export_obj(mesh, config.obj_path);
  out << "obj = " << config.obj_path << '\n'
      << "vertices = " << mesh.vertices.size() << '\n'
      << "faces = " << mesh.faces.size() << '\n';
  return 0;
}

int cmd_render(const RunConfig& config, std::ostream& out) {
  const auto surface = load_surface(config);
  const Scene scene = make_scene(config, *surface);
  const RenderResult result =
      render_panorama(*surface, scene, config.render_width, config.render_height, config.threads);
  write_ppm(config.ppm_path, result.image);
  out << "image = " << config.ppm_path << '\n'
      << "size = " << config.render_width << 'x' << config.render_height << '\n'
      << "scene_radius = " << format_real(scene.radius) << '\n'
      << "miss_fraction = " << format_real(result.miss_fraction()) << '\n'
      << "checksum = " << hex64(fnv1a64(result.image.bytes())) << '\n';
  if (config.variant == Variant::kConquistador) {
    out << "note = upper half shows the rear 180 degrees, mirrored left-right\n";
  }
  return 0;
}

int cmd_score(const RunConfig& config, std::ostream& out) {
  const auto surface = load_surface(config);
  const Scene scene = make_scene(config, *surface);
  const TraceReport report = score_projection(*surface, scene, config.score_ny, config.score_nz, config.threads);
  if (config.report_path.empty()) {
    write_report(out, report);
  } else {
    std::ofstream file(config.report_path, std::ios::binary | std::ios::trunc);
    if (!file) fail(ErrorCode::kIo, "cannot open '" + config.report_path + "' for writing");
    write_report(file, report);
    out << "report = " << config.report_path << '\n';
  }
  if (!config.csv_path.empty()) {
    std::ofstream csv(config.csv_path, std::ios::binary | std::ios::trunc);
    if (!csv) fail(ErrorCode::kIo, "cannot open '" + config.csv_path + "' for writing");
    write_samples_csv(csv, report);
    out << "csv = " << config.csv_path << '\n';
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mirrorforge: design and validate panoramic mirrors", "mirrorforge"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&, std::ostream&);
  };
  const Command commands[] = {
      {"design", "build the field, check integrability, fit and write the surface", &cmd_design},
      {"check", "report the integrability residual of the normal field", &cmd_check},
      {"fit", "minimize the gradient-matching objective and write the surface", &cmd_fit},
      {"export-obj", "tessellate the surface and write a Wavefront OBJ", &cmd_export_obj},
      {"render", "ray trace the checkerboard scene through the mirror into a PPM", &cmd_render},
      {"score", "compare the induced map with the prescribed projection", &cmd_score},
  };

  std::string config_path;
  std::map<std::string, std::string> overrides;
  std::map<std::string, CLI::Option*> options;
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config_path, "key = value configuration file");
    for (const std::string& key : config_keys()) {
      std::string flag = "--" + key;
      std::replace(flag.begin(), flag.end(), '_', '-');
      options[std::string(c.name) + "/" + key] = sub->add_option(flag, overrides[key]);
    }
    subs.emplace_back(sub, &c);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: E_USAGE: " << e.what() << '\n';
    return 2;
  }

  try {
    for (const auto& [sub, cmd] : subs) {
      if (!sub->parsed()) continue;
      RunConfig config;
      if (!config_path.empty()) config = load_config(config_path);
      for (const std::string& key : config_keys()) {
        if (options[std::string(cmd->name) + "/" + key]->count() > 0) config.set(key, overrides[key]);
      }
      config.validate();
      return cmd->fn(config, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.tag() << ": " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: E_INTERNAL: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace mirrorforge::cli
