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

#include "mirrorforge/projection.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mirrorforge/error.hpp"

namespace mirrorforge {

void CameraModel::validate(double max_height) const {
  if (!(plane_offset > 0.0) || !std::isfinite(plane_offset)) {
    fail(ErrorCode::kDomain, "camera plane offset must be positive, got " + std::to_string(plane_offset));
  }
  if (!(plane_offset > max_height)) {
    fail(ErrorCode::kDomain, "camera plane x = " + std::to_string(plane_offset) +
                                 " does not clear the mirror (max height " + std::to_string(max_height) + ")");
  }
}

ProjectionSpec ProjectionSpec::finite(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    fail(ErrorCode::kDomain, "target radius must be positive and finite, got " + std::to_string(rho));
  }
  return ProjectionSpec(rho);
}

bool DomainRect::is_panoramic() const {
  return y.width() >= 2.0 * std::numbers::pi * (1.0 - 1e-12);
}

void DomainRect::validate() const {
  const bool finite = std::isfinite(y.lo) && std::isfinite(y.hi) && std::isfinite(z.lo) && std::isfinite(z.hi);
  if (!finite || !(y.hi > y.lo) || !(z.hi > z.lo)) {
    fail(ErrorCode::kDomain, "empty design domain [" + std::to_string(y.lo) + ", " + std::to_string(y.hi) +
                                 "] x [" + std::to_string(z.lo) + ", " + std::to_string(z.hi) + "]");
  }
}

DomainRect DomainRect::panoramic(double y_width, double half_fov_degrees) {
  DomainRect rect{{-0.5 * y_width, 0.5 * y_width}, domain_for_vfov(half_fov_degrees)};
  rect.validate();
  return rect;
}

Vec3 prescribed_map(const Vec3& q, const ProjectionSpec& spec) {
  if (spec.is_limit()) {
    fail(ErrorCode::kDomain, "prescribed_map needs a finite target radius; use target_direction in the limit");
  }
  const double rho = spec.radius();
  return {rho * q.z, rho * std::sin(q.y), rho * std::cos(q.y)};
}

Vec3 target_direction(const Vec3& r, const ProjectionSpec& spec) {
  if (spec.is_limit()) {
    const double inv = 1.0 / std::sqrt(1.0 + r.z * r.z);
    return {r.z * inv, std::sin(r.y) * inv, std::cos(r.y) * inv};
  }
  // The camera offset does not enter s, so q's x-component is irrelevant here.
  const Vec3 v = prescribed_map(Vec3{0.0, r.y, r.z}, spec) - r;
  if (!(norm(v) > 0.0)) fail(ErrorCode::kGeometry, "mirror point coincides with its target point");
  return normalize(v);
}

Interval domain_for_vfov(double half_angle_degrees) {
  if (!(half_angle_degrees > 0.0 && half_angle_degrees < 90.0)) {
    fail(ErrorCode::kDomain, "vertical half field of view must lie in (0, 90) degrees, got " +
                                 std::to_string(half_angle_degrees));
  }
  const double t = std::tan(half_angle_degrees * std::numbers::pi / 180.0);
  return {-t, t};
}

}  // namespace mirrorforge
