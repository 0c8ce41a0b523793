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

#include "mirrorforge/poisson.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "mirrorforge/error.hpp"
#include "mirrorforge/field.hpp"
#include "mirrorforge/fit.hpp"
#include "mirrorforge/grid_function.hpp"

namespace mirrorforge {
namespace {

using std::numbers::pi;

const DomainRect kPanorama = DomainRect::panoramic(2 * pi, 30);
const DomainRect kUnit{{-1, 1}, {-1, 1}};

// Largest |f - u| over the nodes after removing the mean offset.
template <typename Exact>
double MaxNodeError(const GridFunction& f, Exact exact) {
  double mean = 0.0;
  for (int i = 0; i < f.nodes_y(); ++i)
    for (int j = 0; j < f.nodes_z(); ++j) mean += f.at(i, j) - exact(f.node_y(i), f.node_z(j));
  mean /= f.nodes_y() * f.nodes_z();
  double worst = 0.0;
  for (int i = 0; i < f.nodes_y(); ++i)
    for (int j = 0; j < f.nodes_z(); ++j)
      worst = std::max(worst, std::abs(f.at(i, j) - exact(f.node_y(i), f.node_z(j)) - mean));
  return worst;
}

double Smooth(double y, double z) { return std::exp(y) * std::sin(z); }
const PlanarComponents kSmoothGradient([](double y, double z) {
  return SlopePair{std::exp(y) * std::sin(z), std::exp(y) * std::cos(z)};
});

TEST(GridFunction, InterpolatesBilinearFunctionsExactly) {
  const int ny = 5;
  const int nz = 4;
  std::vector<double> v(ny * nz);
  const auto lin = [](double y, double z) { return 1.0 + 2.0 * y - 3.0 * z + 0.5 * y * z; };
  GridFunction probe(kUnit, ny, nz, std::vector<double>(ny * nz, 0.0));
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < nz; ++j) v[probe.index(i, j)] = lin(probe.node_y(i), probe.node_z(j));
  const GridFunction f(kUnit, ny, nz, v);
  EXPECT_NEAR(f.value(0.3, -0.2), lin(0.3, -0.2), 1e-14);
  EXPECT_NEAR(f.value(1.0, 1.0), lin(1.0, 1.0), 1e-14);
  EXPECT_NEAR(f.gradient(0.3, -0.9).fz, -3.0 + 0.5 * 0.3, 1e-12);
  EXPECT_THROW(GridFunction(kUnit, 1, 4, {1, 2, 3, 4}), Error);
  EXPECT_THROW(GridFunction(kUnit, 2, 2, {1, 2, 3}), Error);
}

TEST(FitPoisson, QuadraticPotentialRecoveredExactly) {
  const auto exact = [](double y, double z) { return 0.3 * y * y - 0.8 * y * z + 0.2 * z * z + y - 2 * z; };
  const PlanarComponents grad(
      [](double y, double z) { return SlopePair{0.6 * y - 0.8 * z + 1, -0.8 * y + 0.4 * z - 2}; });
  const PoissonResult r = fit_poisson(grad, kPanorama, 33, 17);
  EXPECT_LT(MaxNodeError(r.surface, exact), 1e-9);
  EXPECT_LT(r.objective, 1e-16);
}

TEST(FitPoisson, RadialTargetAndZeroTarget) {
  const PlanarComponents radial([](double y, double z) { return SlopePair{2 * y, 2 * z}; });
  const PoissonResult r = fit_poisson(radial, kUnit, 64, 64);
  EXPECT_LT(MaxNodeError(r.surface, [](double y, double z) { return y * y + z * z; }), 5e-3);
  const PlanarComponents zero([](double, double) { return SlopePair{}; });
  for (double v : fit_poisson(zero, kUnit, 16, 16).surface.values()) EXPECT_NEAR(v, 0.0, 1e-12);
}

TEST(FitPoisson, MeanIsPinnedToZero) {
  const PoissonResult r = fit_poisson(kSmoothGradient, kUnit, 16, 16);
  const double sum = std::accumulate(r.surface.values().begin(), r.surface.values().end(), 0.0);
  EXPECT_NEAR(sum / r.surface.values().size(), 0.0, 1e-12);
}

TEST(FitPoisson, SecondOrderConvergence) {
  const double e16 = MaxNodeError(fit_poisson(kSmoothGradient, kUnit, 16, 16).surface, Smooth);
  const double e32 = MaxNodeError(fit_poisson(kSmoothGradient, kUnit, 32, 32).surface, Smooth);
  const double e64 = MaxNodeError(fit_poisson(kSmoothGradient, kUnit, 64, 64).surface, Smooth);
  EXPECT_GT(e16 / e32, 3.0);
  EXPECT_GT(e32 / e64, 3.0);
  EXPECT_LT(e64, 1e-4);
}

TEST(FitPoisson, AgreesWithPolynomialOnExactGradient) {
  const FitResult poly = fit_polynomial(kSmoothGradient, kUnit, PolyBasis(10), Quadrature{});
  const PoissonResult grid = fit_poisson(kSmoothGradient, kUnit, 64, 64);
  const auto poly_value = [&](double y, double z) { return poly.polynomial.value(y, z); };
  EXPECT_LT(MaxNodeError(grid.surface, poly_value), 5e-3);
}

TEST(FitPoisson, PanoramicObjectiveNearHighDegreeFit) {
  const PlanarComponents target = PlanarComponents::cylindrical();
  const PoissonResult grid = fit_poisson(target, kPanorama, 64, 64);
  const FitResult poly = fit_polynomial(target, kPanorama, PolyBasis(12), Quadrature{});
  EXPECT_NEAR(grid.objective, poly.objective, 0.05 * poly.objective);
  EXPECT_NEAR(grid.objective, 4.786067231e-4, 1e-12);
  EXPECT_LT(grid.relative_residual, 1e-12);
}

TEST(FitPoisson, ErrorsAreTagged) {
  try {
    fit_poisson(kSmoothGradient, kUnit, 7, 16);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
  }
  try {
    fit_poisson(kSmoothGradient, kUnit, 32, 32, PoissonOptions{1e-14, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSolver);
  }
}

}  // namespace
}  // namespace mirrorforge
