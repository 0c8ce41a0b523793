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

#include <array>
#include <cmath>
#include <concepts>
#include <optional>

namespace mirrorforge {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  constexpr Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Unit vector along `a`. Throws E_GEOMETRY for the zero vector.
Vec3 normalize(const Vec3& a);

inline constexpr Vec3 kUnitX{1.0, 0.0, 0.0};

/// Half-line origin + t * direction, t >= 0. The direction is kept unit.
class Ray {
 public:
  Ray(const Vec3& origin, const Vec3& direction)
      : origin_(origin), direction_(normalize(direction)) {}

  const Vec3& origin() const { return origin_; }
  const Vec3& direction() const { return direction_; }
  Vec3 at(double t) const { return origin_ + t * direction_; }

 private:
  Vec3 origin_;
  Vec3 direction_;
};

/// Mirror reflection of the unit direction `d` off a surface with normal `n`.
/// `n` need not be unit; only its direction matters. Throws E_GEOMETRY for a
/// zero normal ("degenerate normal").
Vec3 reflect(const Vec3& d, const Vec3& n);

struct CylinderHit {
  Vec3 point;
  double t = 0.0;
  double azimuth = 0.0;  // atan2(p.y, p.z), in (-pi, pi]
  double axial = 0.0;    // p.x
};

/// Self-intersection guard applied to ray parameters.
inline constexpr double kRayEpsilon = 1e-9;

/// First crossing (t > kRayEpsilon) of `ray` with the cylinder y^2 + z^2 = R^2
/// about the x-axis. Azimuth follows the (x, R sin th, R cos th)
/// parametrization. Throws E_DOMAIN for radius <= 0.
std::optional<CylinderHit> intersect_cylinder(const Ray& ray, double radius);

/// Central-difference partials of a scalar field: (df/dx, df/dy, df/dz).
template <typename F>
  requires std::invocable<const F&, const Vec3&> &&
           std::convertible_to<std::invoke_result_t<const F&, const Vec3&>, double>
Vec3 central_diff(const F& f, const Vec3& at, double h) {
  Vec3 out;
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 plus = at;
    Vec3 minus = at;
    plus[axis] += h;
    minus[axis] -= h;
    out[axis] = (f(plus) - f(minus)) / (2.0 * h);
  }
  return out;
}

/// Central-difference partials of a vector field. Entry k holds dF/d(axis k).
template <typename F>
  requires std::invocable<const F&, const Vec3&> &&
           std::same_as<std::invoke_result_t<const F&, const Vec3&>, Vec3>
std::array<Vec3, 3> central_diff(const F& field, const Vec3& at, double h) {
  std::array<Vec3, 3> out;
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 plus = at;
    Vec3 minus = at;
    plus[axis] += h;
    minus[axis] -= h;
    out[axis] = (field(plus) - field(minus)) / (2.0 * h);
  }
  return out;
}

}  // namespace mirrorforge
