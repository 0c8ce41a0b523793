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

#include "mirrorforge/geom.hpp"

#include <limits>
#include <numbers>
#include <string>

#include "mirrorforge/error.hpp"

namespace mirrorforge {

Vec3 normalize(const Vec3& a) {
  const double n = norm(a);
  if (!(n > 0.0) || !std::isfinite(n)) {
    fail(ErrorCode::kGeometry, "cannot normalize a zero or non-finite vector");
  }
  return a / n;
}

Vec3 reflect(const Vec3& d, const Vec3& n) {
  const double len = norm(n);
  if (!(len > 0.0)) fail(ErrorCode::kGeometry, "degenerate normal");
  const Vec3 u = n / len;
  return d - (2.0 * dot(d, u)) * u;
}

std::optional<CylinderHit> intersect_cylinder(const Ray& ray, double radius) {
  if (!(radius > 0.0)) {
    fail(ErrorCode::kDomain, "cylinder radius must be positive, got " + std::to_string(radius));
  }
  const Vec3& o = ray.origin();
  const Vec3& d = ray.direction();
  // |o_lat + t d_lat|^2 = R^2, written as a t^2 + 2 b t + c = 0.
  const double a = d.y * d.y + d.z * d.z;
  if (a <= std::numeric_limits<double>::min()) return std::nullopt;
  const double b = o.y * d.y + o.z * d.z;
  const double c = o.y * o.y + o.z * o.z - radius * radius;
  const double disc = b * b - a * c;
  if (disc < 0.0) return std::nullopt;
  const double root = std::sqrt(disc);
  // Stable pair of roots.
  const double q = (b >= 0.0) ? -(b + root) : -(b - root);
  double t0 = (q != 0.0) ? c / q : 0.0;
  double t1 = q / a;
  if (t0 > t1) std::swap(t0, t1);
  double t = t0;
  if (!(t > kRayEpsilon)) t = t1;
  if (!(t > kRayEpsilon)) return std::nullopt;

  CylinderHit hit;
  hit.t = t;
  hit.point = ray.at(t);
  hit.azimuth = std::atan2(hit.point.y, hit.point.z);
  if (hit.azimuth == -std::numbers::pi) hit.azimuth = std::numbers::pi;
  hit.axial = hit.point.x;
  return hit;
}

}  // namespace mirrorforge
