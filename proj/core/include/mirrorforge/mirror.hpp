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

#include <variant>

#include "mirrorforge/geom.hpp"
#include "mirrorforge/grid_function.hpp"
#include "mirrorforge/polynomial.hpp"
#include "mirrorforge/projection.hpp"

namespace mirrorforge {

/// Target azimuth (radians, in (-pi, pi]) and elevation (radians) that an
/// image point is supposed to see.
struct AngularTarget {
  double azimuth = 0.0;
  double elevation = 0.0;
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// A mirror that is a graph x = x0 + f(y, z) over its image footprint.
class GraphSurface {
 public:
  virtual ~GraphSurface() = default;

  virtual const DomainRect& footprint() const = 0;
  virtual double placement() const = 0;
  virtual double height(double y, double z) const = 0;
  virtual Gradient2 gradient(double y, double z) const = 0;
  virtual AngularTarget prescribed(double y, double z) const = 0;

  Vec3 point(double y, double z) const { return {placement() + height(y, z), y, z}; }
  /// Largest distance of the footprint from the x-axis.
  double lateral_extent() const;
  /// Largest x0 + f over a (samples+1)^2 node grid of the footprint.
  double max_x(int samples = 64) const;
};

/// The designed strip mirror: polynomial or grid height over a DomainRect.
class MirrorSurface final : public GraphSurface {
 public:
  using Representation = std::variant<Polynomial, GridFunction>;

  /// Throws E_DOMAIN when a grid representation does not cover `domain`.
  MirrorSurface(Representation rep, DomainRect domain, double placement = 0.0);

  /// Copy moved along x so that its highest sampled point sits at `apex_x`.
  MirrorSurface with_apex_at(double apex_x) const;

  const Representation& representation() const { return rep_; }

  const DomainRect& footprint() const override { return domain_; }
  double placement() const override { return placement_; }
  double height(double y, double z) const override;
  Gradient2 gradient(double y, double z) const override;
  AngularTarget prescribed(double y, double z) const override;

 private:
  Representation rep_;
  DomainRect domain_;
  double placement_;
};

/// Two-piece "conquistador" mirror: the base strip restricted to
/// y in [-pi/2, pi/2] and its mirror image across the plane z = z1, stacked
/// along image z. The upper piece sees the rear half of the panorama with
/// azimuth pi - y, so its image is left-right reversed.
class CompositeSurface final : public GraphSurface {
 public:
  const MirrorSurface& base() const { return base_; }
  double seam() const { return seam_; }

  const DomainRect& footprint() const override { return footprint_; }
  double placement() const override { return base_.placement(); }
  double height(double y, double z) const override;
  Gradient2 gradient(double y, double z) const override;
  AngularTarget prescribed(double y, double z) const override;

  /// True for points strictly above the seam (the reflected piece).
  bool in_reflected_piece(double z) const { return z > seam_; }

 private:
  friend CompositeSurface make_conquistador(const MirrorSurface& base);
  CompositeSurface(MirrorSurface base, DomainRect footprint, double seam)
      : base_(std::move(base)), footprint_(footprint), seam_(seam) {}

  MirrorSurface base_;
  DomainRect footprint_;
  double seam_;
};

/// Throws E_DOMAIN when the base does not span y in [-pi/2, pi/2].
CompositeSurface make_conquistador(const MirrorSurface& base);

/// Un-normalized normal (1, -f_y, -f_z), pointing toward the camera.
/// Throws E_DOMAIN outside the footprint.
Vec3 surface_normal(const GraphSurface& m, double y, double z);

}  // namespace mirrorforge
