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

#include <limits>

#include "mirrorforge/geom.hpp"

namespace mirrorforge {

/// Orthographic camera looking down -x. The image plane is x = c and the
/// image point (c, y, z) sees the mirror point with the same (y, z).
struct CameraModel {
  double plane_offset = 2.0;  // c

  /// Direction of every camera ray as it travels toward the mirror.
  static constexpr Vec3 view_direction() { return {-1.0, 0.0, 0.0}; }

  Vec3 image_point(double y, double z) const { return {plane_offset, y, z}; }

  /// Throws E_DOMAIN unless c > 0 and c > max_height.
  void validate(double max_height = -std::numeric_limits<double>::infinity()) const;
};

/// The prescribed target: a cylinder of radius rho about the x-axis, or the
/// rho -> infinity limit in which only directions survive.
class ProjectionSpec {
 public:
  static ProjectionSpec limit() { return ProjectionSpec(std::numeric_limits<double>::infinity()); }
  /// Throws E_DOMAIN unless rho > 0 and finite.
  static ProjectionSpec finite(double rho);

  bool is_limit() const { return !std::isfinite(rho_); }
  double radius() const { return rho_; }

 private:
  explicit ProjectionSpec(double rho) : rho_(rho) {}
  double rho_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
};

/// Rectangular design domain in image coordinates. y doubles as target
/// azimuth (radians); z is the tangent of target elevation.
struct DomainRect {
  Interval y;
  Interval z;

  double area() const { return y.width() * z.width(); }
  bool contains(double yy, double zz) const {
    return yy >= y.lo && yy <= y.hi && zz >= z.lo && zz <= z.hi;
  }
  /// True when the azimuth span covers a full turn.
  bool is_panoramic() const;
  /// Throws E_DOMAIN for empty or non-finite intervals.
  void validate() const;

  /// Domain centred on y = 0 with the given azimuth span and vertical half-FOV.
  static DomainRect panoramic(double y_width, double half_fov_degrees);

  friend bool operator==(const DomainRect& a, const DomainRect& b) {
    return a.y.lo == b.y.lo && a.y.hi == b.y.hi && a.z.lo == b.z.lo && a.z.hi == b.z.hi;
  }
};

/// s = (rho z, rho sin y, rho cos y) for the image point q = (c, y, z).
/// Throws E_DOMAIN for the limit spec, which has no finite target point.
Vec3 prescribed_map(const Vec3& q, const ProjectionSpec& spec);

/// Unit direction from mirror point r toward its prescribed target. In the
/// limit this is (z, sin y, cos y) / sqrt(1 + z^2), independent of r.x.
/// Throws E_GEOMETRY when r coincides with its finite target point.
Vec3 target_direction(const Vec3& r, const ProjectionSpec& spec);

/// Image-coordinate z range giving a vertical field of view of
/// +/- half_angle degrees. Throws E_DOMAIN outside (0, 90).
Interval domain_for_vfov(double half_angle_degrees);

}  // namespace mirrorforge
