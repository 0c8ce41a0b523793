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

#include <functional>
#include <utility>

#include "mirrorforge/geom.hpp"
#include "mirrorforge/projection.hpp"

namespace mirrorforge {

enum class FieldKind {
  kGeneral,           // sum of unit vectors toward camera and finite target
  kCylindricalLimit,  // U(y, z) + e1
  kCustom,            // caller-supplied, e.g. analytic test fields
};

/// Candidate mirror normal field r -> W(r). Only the direction of W carries
/// optical meaning.
class NormalField {
 public:
  using Evaluator = std::function<Vec3(const Vec3&)>;

  NormalField(Evaluator eval, FieldKind kind) : eval_(std::move(eval)), kind_(kind) {}

  static NormalField custom(Evaluator eval) { return {std::move(eval), FieldKind::kCustom}; }

  Vec3 operator()(const Vec3& r) const { return eval_(r); }
  FieldKind kind() const { return kind_; }

 private:
  Evaluator eval_;
  FieldKind kind_;
};

/// W(r) = (q - r)/|q - r| + (G(q) - r)/|G(q) - r| with q = (c, r.y, r.z).
/// For ProjectionSpec::limit() this reduces to U(r.y, r.z) + e1. Evaluation throws
/// E_GEOMETRY when r coincides with q or G(q).
NormalField build_field(const CameraModel& camera, const ProjectionSpec& spec);

/// Same construction for an arbitrary prescribed map G(q).
NormalField build_field(const CameraModel& camera, std::function<Vec3(const Vec3&)> target_of_image_point);

struct SlopePair {
  double g = 0.0;  // target for f_y
  double h = 0.0;  // target for f_z
};

/// Gradient target (g, h) for the mirror height f(y, z). For a field W,
/// g = -W_y / W_x and h = -W_z / W_x, so that (1, -g, -h) is parallel to W.
class PlanarComponents {
 public:
  using Evaluator = std::function<SlopePair(double, double)>;

  explicit PlanarComponents(Evaluator eval) : eval_(std::move(eval)) {}

  SlopePair operator()(double y, double z) const { return eval_(y, z); }
  double g(double y, double z) const { return eval_(y, z).g; }
  double h(double y, double z) const { return eval_(y, z).h; }

  /// g = -sin y / (z + sqrt(1+z^2)), h = -cos y / (z + sqrt(1+z^2)).
  static PlanarComponents cylindrical();

 private:
  Evaluator eval_;
};

/// Scales `field` to unit first component and negates the tangential part.
/// Requires a field that does not depend on x (the limit or a custom field);
/// a finite-radius general field gives E_DOMAIN. Throws E_DOMAIN naming the
/// point if W_x vanishes at any sample of `domain`.
PlanarComponents scaled_components(const NormalField& field, const DomainRect& domain);

inline constexpr double kDefaultDiffStep = 1e-5;

/// (curl W . W) at `at`, with the curl taken by central differences.
/// Zero wherever a surface orthogonal to W exists locally.
double integrability_residual(const NormalField& field, const Vec3& at, double h = kDefaultDiffStep);

struct ResidualReport {
  double max_abs = 0.0;
  double at_y = 0.0;
  double at_z = 0.0;
  int samples_y = 0;
  int samples_z = 0;
};

/// Maximum |residual| over a node grid on `domain` in the plane x = x_plane.
ResidualReport max_integrability_residual(const NormalField& field, const DomainRect& domain, int samples_y,
                                          int samples_z, double x_plane = 0.0, double h = kDefaultDiffStep);

}  // namespace mirrorforge
