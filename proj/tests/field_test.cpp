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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "mirrorforge/error.hpp"

namespace mirrorforge {
namespace {

using std::numbers::pi;

void ExpectVecNear(const Vec3& a, const Vec3& b, double tol) {
  EXPECT_NEAR(a.x, b.x, tol);
  EXPECT_NEAR(a.y, b.y, tol);
  EXPECT_NEAR(a.z, b.z, tol);
}

// (curl W) . W for W = U(y, z) + e1, differentiated by hand:
//   curl W = (dWz/dy - dWy/dz, dWx/dz, 0)
//   dWz/dy - dWy/dz = sin y (z - 1 - z^2) / s^3,   dWx/dz = 1 / s^3,   s = sqrt(1 + z^2).
double AnalyticCylindricalResidual(double y, double z) {
  const double s = std::sqrt(1.0 + z * z);
  const double s3 = s * s * s;
  const double wx = z / s + 1.0;
  const double wy = std::sin(y) / s;
  return wx * std::sin(y) * (z - 1.0 - z * z) / s3 + wy / s3;
}

const NormalField kLimit = build_field(CameraModel{}, ProjectionSpec::limit());
const DomainRect kPanorama = DomainRect::panoramic(2 * pi, 30);

TEST(BuildField, LimitExamples) {
  EXPECT_EQ(kLimit.kind(), FieldKind::kCylindricalLimit);
  ExpectVecNear(kLimit({0, 0, 0}), {1, 0, 1}, 1e-15);
  ExpectVecNear(kLimit({0.7, pi / 2, 0}), {1, 1, 0}, 1e-15);
}

TEST(BuildField, GeneralSumOfUnitVectors) {
  const NormalField w = build_field(CameraModel{1.0}, [](const Vec3&) { return Vec3{0, 0, 1}; });
  ExpectVecNear(w({0, 0, 0}), {1, 0, 1}, 1e-15);
}

TEST(BuildField, GeneralFieldDegenerateAtImagePoint) {
  const NormalField w = build_field(CameraModel{1.0}, [](const Vec3&) { return Vec3{0, 0, 1}; });
  try {
    w({1.0, 0.2, 0.3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGeometry);
  }
}

TEST(BuildField, FiniteRadiusApproachesLimit) {
  const NormalField far = build_field(CameraModel{}, ProjectionSpec::finite(1e8));
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> y(kPanorama.y.lo, kPanorama.y.hi);
  std::uniform_real_distribution<double> z(kPanorama.z.lo, kPanorama.z.hi);
  for (int k = 0; k < 1000; ++k) {
    const Vec3 r{0, y(rng), z(rng)};
    ExpectVecNear(far(r), kLimit(r), 1e-7);
  }
}

TEST(BuildField, LimitFieldStructure) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int k = 0; k < 1000; ++k) {
    const Vec3 w = kLimit({u(rng), u(rng), u(rng)});
    EXPECT_NEAR(norm(w - kUnitX), 1.0, 1e-12);
    EXPECT_LE(norm(w), 2.0 + 1e-12);
  }
}

TEST(ScaledComponents, Examples) {
  const PlanarComponents gh = scaled_components(kLimit, kPanorama);
  EXPECT_NEAR(gh.g(0, 0), 0.0, 1e-15);
  EXPECT_NEAR(gh.h(0, 0), -1.0, 1e-15);
  EXPECT_NEAR(gh.g(pi / 2, 0), -1.0, 1e-15);
  EXPECT_NEAR(gh.h(pi / 2, 0), 0.0, 1e-15);
  EXPECT_NEAR(gh.g(0, 1), 0.0, 1e-15);
  EXPECT_NEAR(gh.h(0, 1), -1.0 / (1.0 + std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(gh.h(0, 1), -0.4142136, 1e-7);
}

TEST(ScaledComponents, ParallelToFieldParityAndBound) {
  const PlanarComponents gh = scaled_components(kLimit, kPanorama);
  const double z0 = kPanorama.z.lo;
  const double bound = 1.0 / (z0 + std::sqrt(1.0 + z0 * z0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> y(kPanorama.y.lo, kPanorama.y.hi);
  std::uniform_real_distribution<double> z(kPanorama.z.lo, kPanorama.z.hi);
  for (int k = 0; k < 2000; ++k) {
    const double yy = y(rng);
    const double zz = z(rng);
    const SlopePair s = gh(yy, zz);
    const Vec3 w = kLimit({0, yy, zz});
    EXPECT_LT(norm(cross(Vec3{1, -s.g, -s.h}, w)), 1e-10 * norm(w));
    EXPECT_NEAR(gh.g(-yy, zz), -s.g, 1e-15);
    EXPECT_NEAR(gh.h(-yy, zz), s.h, 1e-15);
    EXPECT_LE(std::abs(s.g), bound + 1e-15);
    EXPECT_LE(std::abs(s.h), bound + 1e-15);
  }
}

TEST(ScaledComponents, CustomFieldUsesRatio) {
  const NormalField w = NormalField::custom([](const Vec3& r) { return Vec3{2, 4 * r.y, -6 * r.z}; });
  const PlanarComponents gh = scaled_components(w, kPanorama);
  EXPECT_NEAR(gh.g(0.5, 0.25), -1.0, 1e-15);
  EXPECT_NEAR(gh.h(0.5, 0.25), 0.75, 1e-15);
}

TEST(ScaledComponents, VanishingFirstComponentNamesThePoint) {
  const NormalField w = NormalField::custom([](const Vec3& r) { return Vec3{r.y, 1, 0}; });
  try {
    scaled_components(w, kPanorama);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
    EXPECT_NE(std::string(e.what()).find("(y, z) = (0"), std::string::npos) << e.what();
  }
}

TEST(ScaledComponents, RejectsFiniteRadiusField) {
  EXPECT_THROW(scaled_components(build_field(CameraModel{}, ProjectionSpec::finite(10)), kPanorama), Error);
}

TEST(IntegrabilityResidual, GradientFieldVanishes) {
  const NormalField w = NormalField::custom([](const Vec3& r) { return 2.0 * r; });
  EXPECT_NEAR(integrability_residual(w, {1, 2, 3}), 0.0, 1e-7);
}

TEST(IntegrabilityResidual, RotationalFieldByHand) {
  const NormalField w = NormalField::custom([](const Vec3& r) { return Vec3{-r.y, r.x, 1}; });
  EXPECT_NEAR(integrability_residual(w, {1, 1, 1}), 2.0, 1e-7);
}

TEST(IntegrabilityResidual, CylindricalFieldMatchesAnalyticOracle) {
  const double oracle = AnalyticCylindricalResidual(1.0, 0.3);
  EXPECT_NEAR(oracle, -0.04376, 5e-5);
  EXPECT_NEAR(integrability_residual(kLimit, {0, 1.0, 0.3}), oracle, 1e-8);
  // Independent of x for the limit field.
  EXPECT_NEAR(integrability_residual(kLimit, {-3, 1.0, 0.3}), oracle, 1e-8);

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> y(kPanorama.y.lo, kPanorama.y.hi);
  std::uniform_real_distribution<double> z(kPanorama.z.lo, kPanorama.z.hi);
  for (int k = 0; k < 500; ++k) {
    const double yy = y(rng);
    const double zz = z(rng);
    EXPECT_NEAR(integrability_residual(kLimit, {0, yy, zz}), AnalyticCylindricalResidual(yy, zz), 1e-8);
  }
}

TEST(IntegrabilityResidual, RandomPolynomialPotentialsAreIntegrable) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1, 1);
  struct Term {
    int a, b, c;
    double k;
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Term> terms;
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b)
        for (int c = 0; a + b + c <= 4; ++c) terms.push_back({a, b, c, u(rng)});
    const NormalField grad = NormalField::custom([terms](const Vec3& r) {
      Vec3 g;
      for (const Term& t : terms) {
        const double px = std::pow(r.x, t.a);
        const double py = std::pow(r.y, t.b);
        const double pz = std::pow(r.z, t.c);
        if (t.a > 0) g.x += t.k * t.a * std::pow(r.x, t.a - 1) * py * pz;
        if (t.b > 0) g.y += t.k * t.b * px * std::pow(r.y, t.b - 1) * pz;
        if (t.c > 0) g.z += t.k * t.c * px * py * std::pow(r.z, t.c - 1);
      }
      return g;
    });
    for (int k = 0; k < 10; ++k) {
      EXPECT_NEAR(integrability_residual(grad, {u(rng), u(rng), u(rng)}), 0.0, 1e-7);
    }
  }
}

TEST(IntegrabilityResidual, ScalesQuadratically) {
  const double c = 2.5;
  const NormalField scaled = NormalField::custom([](const Vec3& r) { return 2.5 * kLimit(r); });
  const double base = integrability_residual(kLimit, {0, 1.0, 0.3});
  EXPECT_NEAR(integrability_residual(scaled, {0, 1.0, 0.3}), c * c * base, 1e-7 * std::abs(c * c * base));
}

TEST(MaxIntegrabilityResidual, PanoramicFieldIsNotIntegrable) {
  const ResidualReport r = max_integrability_residual(kLimit, kPanorama, 33, 17);
  EXPECT_GT(r.max_abs, 0.01);
  EXPECT_NEAR(r.max_abs, std::abs(AnalyticCylindricalResidual(r.at_y, r.at_z)), 1e-7);
  EXPECT_THROW(max_integrability_residual(kLimit, kPanorama, 1, 17), Error);
}

}  // namespace
}  // namespace mirrorforge
