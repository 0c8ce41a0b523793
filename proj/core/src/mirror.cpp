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

#include "mirrorforge/mirror.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mirrorforge/error.hpp"

namespace mirrorforge {

double wrap_angle(double a) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double w = std::remainder(a, kTwoPi);
  if (w <= -std::numbers::pi) w += kTwoPi;
  return w;
}

double GraphSurface::lateral_extent() const {
  const DomainRect& d = footprint();
  const double y = std::max(std::abs(d.y.lo), std::abs(d.y.hi));
  const double z = std::max(std::abs(d.z.lo), std::abs(d.z.hi));
  return std::hypot(y, z);
}

double GraphSurface::max_x(int samples) const {
  const DomainRect& d = footprint();
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= samples; ++i) {
    for (int j = 0; j <= samples; ++j) {
      const double y = d.y.lo + d.y.width() * i / samples;
      const double z = d.z.lo + d.z.width() * j / samples;
      best = std::max(best, point(y, z).x);
    }
  }
  return best;
}

MirrorSurface::MirrorSurface(Representation rep, DomainRect domain, double placement)
    : rep_(std::move(rep)), domain_(domain), placement_(placement) {
  domain_.validate();
  if (const auto* grid = std::get_if<GridFunction>(&rep_)) {
    const DomainRect& g = grid->domain();
    const double tol = 1e-12 * (1.0 + domain_.y.width() + domain_.z.width());
    if (domain_.y.lo < g.y.lo - tol || domain_.y.hi > g.y.hi + tol || domain_.z.lo < g.z.lo - tol ||
        domain_.z.hi > g.z.hi + tol) {
      fail(ErrorCode::kDomain, "grid surface does not cover the requested footprint");
    }
  }
}

MirrorSurface MirrorSurface::with_apex_at(double apex_x) const {
  const double top = max_x() - placement_;
  return MirrorSurface(rep_, domain_, apex_x - top);
}

double MirrorSurface::height(double y, double z) const {
  return std::visit([y, z](const auto& f) { return f.value(y, z); }, rep_);
}

Gradient2 MirrorSurface::gradient(double y, double z) const {
  return std::visit([y, z](const auto& f) { return f.gradient(y, z); }, rep_);
}

AngularTarget MirrorSurface::prescribed(double y, double z) const {
  return {wrap_angle(y), std::atan(z)};
}

double CompositeSurface::height(double y, double z) const {
  return base_.height(y, in_reflected_piece(z) ? seam_ - (z - seam_) : z);
}

Gradient2 CompositeSurface::gradient(double y, double z) const {
  if (!in_reflected_piece(z)) return base_.gradient(y, z);
  const Gradient2 g = base_.gradient(y, seam_ - (z - seam_));
  return {g.fy, -g.fz};
}

AngularTarget CompositeSurface::prescribed(double y, double z) const {
  if (!in_reflected_piece(z)) return base_.prescribed(y, z);
  return {wrap_angle(std::numbers::pi - y), std::atan(seam_ - (z - seam_))};
}

CompositeSurface make_conquistador(const MirrorSurface& base) {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  const DomainRect& d = base.footprint();
  const double tol = 1e-12;
  if (d.y.lo > -kHalfPi + tol || d.y.hi < kHalfPi - tol) {
    std::ostringstream msg;
    msg << "conquistador needs a base spanning y in [-pi/2, pi/2], got [" << d.y.lo << ", " << d.y.hi << "]";
    fail(ErrorCode::kDomain, msg.str());
  }
  const double seam = d.z.hi;
  const DomainRect footprint{{-kHalfPi, kHalfPi}, {d.z.lo, 2.0 * seam - d.z.lo}};
  return CompositeSurface(base, footprint, seam);
}

Vec3 surface_normal(const GraphSurface& m, double y, double z) {
  if (!m.footprint().contains(y, z)) {
    std::ostringstream msg;
    msg << "point (y, z) = (" << y << ", " << z << ") lies outside the mirror footprint";
    fail(ErrorCode::kDomain, msg.str());
  }
  const Gradient2 g = m.gradient(y, z);
  return {1.0, -g.fy, -g.fz};
}

}  // namespace mirrorforge
