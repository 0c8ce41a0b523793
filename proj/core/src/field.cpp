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

#include "mirrorforge/field.hpp"

#include <cmath>
#include <sstream>

#include "mirrorforge/error.hpp"

namespace mirrorforge {

namespace {

Vec3 unit_toward(const Vec3& from, const Vec3& to, const char* what) {
  const Vec3 d = to - from;
  const double n = norm(d);
  if (!(n > 0.0)) fail(ErrorCode::kGeometry, std::string("mirror point coincides with ") + what);
  return d / n;
}

}  // namespace

NormalField build_field(const CameraModel& camera, const ProjectionSpec& spec) {
  if (spec.is_limit()) {
    return {[](const Vec3& r) { return target_direction(r, ProjectionSpec::limit()) + kUnitX; },
            FieldKind::kCylindricalLimit};
  }
  NormalField general = build_field(camera, [spec](const Vec3& q) { return prescribed_map(q, spec); });
  return {[general](const Vec3& r) { return general(r); }, FieldKind::kGeneral};
}

NormalField build_field(const CameraModel& camera, std::function<Vec3(const Vec3&)> target_of_image_point) {
  const double c = camera.plane_offset;
  return {[c, target = std::move(target_of_image_point)](const Vec3& r) {
            const Vec3 q{c, r.y, r.z};
            return unit_toward(r, q, "its image point") + unit_toward(r, target(q), "its target point");
          },
          FieldKind::kGeneral};
}

PlanarComponents PlanarComponents::cylindrical() {
  return PlanarComponents([](double y, double z) {
    const double denom = z + std::sqrt(1.0 + z * z);
    return SlopePair{-std::sin(y) / denom, -std::cos(y) / denom};
  });
}

PlanarComponents scaled_components(const NormalField& field, const DomainRect& domain) {
  domain.validate();
  if (field.kind() == FieldKind::kGeneral) {
    fail(ErrorCode::kDomain, "scaled components need an x-independent field (use the limit target)");
  }
  constexpr int kChecks = 64;
  for (int i = 0; i <= kChecks; ++i) {
    for (int j = 0; j <= kChecks; ++j) {
      const double y = domain.y.lo + domain.y.width() * i / kChecks;
      const double z = domain.z.lo + domain.z.width() * j / kChecks;
      const Vec3 w = field(Vec3{0.0, y, z});
      if (!(std::abs(w.x) > 1e-12 * (1.0 + norm(w)))) {
        std::ostringstream msg;
        msg << "field first component vanishes at (y, z) = (" << y << ", " << z << "); cannot scale";
        fail(ErrorCode::kDomain, msg.str());
      }
    }
  }
  if (field.kind() == FieldKind::kCylindricalLimit) return PlanarComponents::cylindrical();
  return PlanarComponents([field](double y, double z) {
    const Vec3 w = field(Vec3{0.0, y, z});
    return SlopePair{-w.y / w.x, -w.z / w.x};
  });
}

double integrability_residual(const NormalField& field, const Vec3& at, double h) {
  const auto jac = central_diff([&field](const Vec3& r) { return field(r); }, at, h);
  const Vec3 curl{jac[1].z - jac[2].y, jac[2].x - jac[0].z, jac[0].y - jac[1].x};
  return dot(curl, field(at));
}

ResidualReport max_integrability_residual(const NormalField& field, const DomainRect& domain, int samples_y,
                                          int samples_z, double x_plane, double h) {
  domain.validate();
  if (samples_y < 2 || samples_z < 2) fail(ErrorCode::kDomain, "residual grid needs at least 2x2 samples");
  ResidualReport report;
  report.samples_y = samples_y;
  report.samples_z = samples_z;
  for (int i = 0; i < samples_y; ++i) {
    for (int j = 0; j < samples_z; ++j) {
      const double y = domain.y.lo + domain.y.width() * i / (samples_y - 1);
      const double z = domain.z.lo + domain.z.width() * j / (samples_z - 1);
      const double r = std::abs(integrability_residual(field, Vec3{x_plane, y, z}, h));
      if (r > report.max_abs) {
        report.max_abs = r;
        report.at_y = y;
        report.at_z = z;
      }
    }
  }
  return report;
}

}  // namespace mirrorforge
