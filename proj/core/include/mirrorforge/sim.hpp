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

#include <iosfwd>
#include <limits>
#include <numbers>
#include <vector>

#include "mirrorforge/geom.hpp"
#include "mirrorforge/image.hpp"
#include "mirrorforge/mirror.hpp"

namespace mirrorforge {

/// Synthetic world: a checkerboard-textured cylinder of radius R about the
/// x-axis, standing in for the room around the mirror.
struct Scene {
  double radius = 0.0;
  double azimuth_period = std::numbers::pi / 8.0;
  double axial_period = 0.0;  // 0: radius * tan(azimuth_period), square cells at the equator
  Rgb color_a{235, 235, 235};
  Rgb color_b{30, 30, 30};
  Rgb background{20, 40, 140};
  double axial_min = -std::numeric_limits<double>::infinity();
  double axial_max = std::numeric_limits<double>::infinity();

  /// Scene whose radius is `factor` times the mirror's lateral extent.
  static Scene around(const GraphSurface& mirror, double factor = 10.0);

  double effective_axial_period() const;
  Rgb color_at(double azimuth, double axial) const;
  /// Throws E_DOMAIN unless radius exceeds the mirror's lateral extent and
  /// the periods are positive.
  void validate(const GraphSurface& mirror) const;
};

enum class MissReason { kNone, kAxisParallel, kOutsideScene };

struct TraceSample {
  double y = 0.0;
  double z = 0.0;
  Vec3 mirror_point;
  Vec3 reflected;               // unit direction leaving the mirror
  bool hit = false;
  MissReason miss = MissReason::kNone;
  double theta = 0.0;           // scene hit azimuth, (-pi, pi]
  double axial = 0.0;           // scene hit x
  double ray_azimuth = 0.0;     // azimuth of `reflected`
  double elevation = 0.0;       // atan(reflected.x / lateral norm)
  AngularTarget prescribed;
};

/// T_M at image point (y, z): the camera ray (-1, 0, 0) reflects off the
/// graph and continues to the scene cylinder. Misses are recorded, not
/// thrown. Throws E_DOMAIN outside the footprint.
TraceSample induced_map(const GraphSurface& mirror, double y, double z, const Scene& scene);

struct ErrorStats {
  double rms = 0.0;
  double max = 0.0;
};

struct TraceReport {
  std::vector<TraceSample> samples;
  int samples_y = 0;
  int samples_z = 0;
  double scene_radius = 0.0;
  std::size_t hits = 0;
  double miss_fraction = 0.0;
  ErrorStats azimuth;        // scene hit azimuth vs prescribed azimuth
  ErrorStats elevation;      // ray elevation vs prescribed elevation
  ErrorStats ray_azimuth;    // ray azimuth vs prescribed azimuth (parallax free)
};

/// Scores T_M against the prescribed angles on a samples_y x samples_z grid
/// of cell centres over the footprint. Metrics use hit samples only.
/// Throws E_DOMAIN below 10x10 samples and E_GEOMETRY if nothing hits.
TraceReport score_projection(const GraphSurface& mirror, const Scene& scene, int samples_y, int samples_z,
                             int threads = 0);

/// Plain-text `key = value` summary.
void write_report(std::ostream& out, const TraceReport& report);
/// One row per sample: y,z,theta,x_hit,az_err,el_err,miss.
void write_samples_csv(std::ostream& out, const TraceReport& report);

struct RenderResult {
  Image image;
  std::size_t misses = 0;
  double miss_fraction() const {
    return static_cast<double>(misses) / (static_cast<double>(image.width()) * image.height());
  }
};

/// Renders what the camera sees: pixel centres map affinely onto the
/// footprint, column 0 at y_min and row 0 at z_max. Hit pixels take the
/// checkerboard colour, misses the background.
RenderResult render_panorama(const GraphSurface& mirror, const Scene& scene, int width, int height, int threads = 0);

/// Relative pixel gain of filling a w x h frame over the inscribed disk used
/// by a rotationally symmetric mirror: w h / (pi (min(w, h) / 2)^2) - 1.
double pixel_gain_ratio(int width, int height);

}  // namespace mirrorforge
