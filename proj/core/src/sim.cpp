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

#include "mirrorforge/sim.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "mirrorforge/coeff_io.hpp"
#include "mirrorforge/error.hpp"
#include "mirrorforge/parallel.hpp"
#include "mirrorforge/projection.hpp"

namespace mirrorforge {

namespace {

constexpr double kMinLateral = 1e-12;

struct Accumulator {
  double sum_sq = 0.0;
  double max = 0.0;
  void add(double e) {
    sum_sq += e * e;
    max = std::max(max, std::abs(e));
  }
  ErrorStats stats(std::size_t n) const { return {std::sqrt(sum_sq / static_cast<double>(n)), max}; }
};

}  // namespace

Scene Scene::around(const GraphSurface& mirror, double factor) {
  Scene s;
  s.radius = factor * mirror.lateral_extent();
  return s;
}

double Scene::effective_axial_period() const {
  return axial_period > 0.0 ? axial_period : radius * std::tan(azimuth_period);
}

Rgb Scene::color_at(double azimuth, double axial) const {
  const auto a = static_cast<long long>(std::floor(azimuth / azimuth_period));
  const auto b = static_cast<long long>(std::floor(axial / effective_axial_period()));
  return ((a + b) % 2 == 0) ? color_a : color_b;
}

void Scene::validate(const GraphSurface& mirror) const {
  const double extent = mirror.lateral_extent();
  if (!(radius > extent) || !std::isfinite(radius)) {
    std::ostringstream msg;
    msg << "scene radius " << radius << " must exceed the mirror's lateral extent " << extent;
    fail(ErrorCode::kDomain, msg.str());
  }
  if (!(azimuth_period > 0.0) || !(effective_axial_period() > 0.0)) {
    fail(ErrorCode::kDomain, "checkerboard periods must be positive");
  }
  if (!(axial_max > axial_min)) fail(ErrorCode::kDomain, "scene axial extent is empty");
}

TraceSample induced_map(const GraphSurface& mirror, double y, double z, const Scene& scene) {
  TraceSample s;
  s.y = y;
  s.z = z;
  const Vec3 normal = surface_normal(mirror, y, z);
  s.mirror_point = mirror.point(y, z);
  s.reflected = reflect(CameraModel::view_direction(), normal);
  s.prescribed = mirror.prescribed(y, z);

  const double lateral = std::hypot(s.reflected.y, s.reflected.z);
  s.ray_azimuth = std::atan2(s.reflected.y, s.reflected.z);
  s.elevation = std::atan2(s.reflected.x, lateral);
  if (lateral < kMinLateral) {
    s.miss = MissReason::kAxisParallel;
    return s;
  }
  const auto hit = intersect_cylinder(Ray(s.mirror_point, s.reflected), scene.radius);
  if (!hit || hit->axial < scene.axial_min || hit->axial > scene.axial_max) {
    s.miss = MissReason::kOutsideScene;
    return s;
  }
  s.hit = true;
  s.theta = hit->azimuth;
  s.axial = hit->axial;
  return s;
}

TraceReport score_projection(const GraphSurface& mirror, const Scene& scene, int samples_y, int samples_z,
                             int threads) {
  if (samples_y < 10 || samples_z < 10) {
    fail(ErrorCode::kDomain, "scoring needs at least 10x10 samples, got " + std::to_string(samples_y) + "x" +
                                 std::to_string(samples_z));
  }
  scene.validate(mirror);
  const DomainRect& d = mirror.footprint();
  TraceReport report;
  report.samples_y = samples_y;
  report.samples_z = samples_z;
  report.scene_radius = scene.radius;
  report.samples.resize(static_cast<std::size_t>(samples_y) * static_cast<std::size_t>(samples_z));
  parallel_for(report.samples.size(), resolve_threads(threads), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto i = static_cast<int>(k / static_cast<std::size_t>(samples_z));
      const auto j = static_cast<int>(k % static_cast<std::size_t>(samples_z));
      const double y = d.y.lo + d.y.width() * (i + 0.5) / samples_y;
      const double z = d.z.lo + d.z.width() * (j + 0.5) / samples_z;
      report.samples[k] = induced_map(mirror, y, z, scene);
    }
  });

  Accumulator az;
  Accumulator el;
  Accumulator ray_az;
  for (const TraceSample& s : report.samples) {
    if (!s.hit) continue;
    ++report.hits;
    az.add(wrap_angle(s.theta - s.prescribed.azimuth));
    el.add(s.elevation - s.prescribed.elevation);
    ray_az.add(wrap_angle(s.ray_azimuth - s.prescribed.azimuth));
  }
  if (report.hits == 0) fail(ErrorCode::kGeometry, "no sample ray reached the scene; cannot score");
  report.miss_fraction = 1.0 - static_cast<double>(report.hits) / static_cast<double>(report.samples.size());
  report.azimuth = az.stats(report.hits);
  report.elevation = el.stats(report.hits);
  report.ray_azimuth = ray_az.stats(report.hits);
  return report;
}

void write_report(std::ostream& out, const TraceReport& r) {
  out << "samples = " << r.samples_y << 'x' << r.samples_z << '\n'
      << "scene_radius = " << format_real(r.scene_radius) << '\n'
      << "hits = " << r.hits << '\n'
      << "miss_fraction = " << format_real(r.miss_fraction) << '\n'
      << "azimuth_rms = " << format_real(r.azimuth.rms) << '\n'
      << "azimuth_max = " << format_real(r.azimuth.max) << '\n'
      << "elevation_rms = " << format_real(r.elevation.rms) << '\n'
      << "elevation_max = " << format_real(r.elevation.max) << '\n'
      << "ray_azimuth_rms = " << format_real(r.ray_azimuth.rms) << '\n'
      << "ray_azimuth_max = " << format_real(r.ray_azimuth.max) << '\n';
}

void write_samples_csv(std::ostream& out, const TraceReport& r) {
  out << "y,z,theta,x_hit,az_err,el_err,miss\n";
  for (const TraceSample& s : r.samples) {
    out << format_real(s.y) << ',' << format_real(s.z) << ',';
    if (s.hit) {
      out << format_real(s.theta) << ',' << format_real(s.axial) << ','
          << format_real(wrap_angle(s.theta - s.prescribed.azimuth)) << ','
          << format_real(s.elevation - s.prescribed.elevation) << ",0\n";
    } else {
      out << ",,,,1\n";
    }
  }
}

RenderResult render_panorama(const GraphSurface& mirror, const Scene& scene, int width, int height, int threads) {
  scene.validate(mirror);
  RenderResult result{Image(width, height), 0};
  const DomainRect& d = mirror.footprint();
  std::vector<std::size_t> row_misses(static_cast<std::size_t>(height), 0);
  parallel_for(static_cast<std::size_t>(height), resolve_threads(threads), [&](std::size_t begin, std::size_t end) {
    for (std::size_t row = begin; row < end; ++row) {
      const double z = d.z.hi - d.z.width() * (static_cast<double>(row) + 0.5) / height;
      for (int col = 0; col < width; ++col) {
        const double y = d.y.lo + d.y.width() * (col + 0.5) / width;
        const TraceSample s = induced_map(mirror, y, z, scene);
        if (s.hit) {
          result.image.set(col, static_cast<int>(row), scene.color_at(s.theta, s.axial));
        } else {
          result.image.set(col, static_cast<int>(row), scene.background);
          ++row_misses[row];
        }
      }
    }
  });
  for (std::size_t m : row_misses) result.misses += m;
  return result;
}

double pixel_gain_ratio(int width, int height) {
  if (width < 1 || height < 1) fail(ErrorCode::kDomain, "frame size must be positive");
  const double r = 0.5 * std::min(width, height);
  return static_cast<double>(width) * height / (std::numbers::pi * r * r) - 1.0;
}

}  // namespace mirrorforge
