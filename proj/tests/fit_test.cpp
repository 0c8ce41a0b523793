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

#include "mirrorforge/fit.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "mirrorforge/error.hpp"
#include "mirrorforge/field.hpp"
#include "mirrorforge/polynomial.hpp"
#include "mirrorforge/quadrature.hpp"

namespace mirrorforge {
namespace {

using std::numbers::pi;

const DomainRect kPanorama = DomainRect::panoramic(2 * pi, 30);
const PlanarComponents kCylindrical = PlanarComponents::cylindrical();

PlanarComponents GradientOf(const Polynomial& p) {
  return PlanarComponents([p](double y, double z) {
    const Gradient2 g = p.gradient(y, z);
    return SlopePair{g.fy, g.fz};
  });
}

Polynomial RandomPolynomial(int degree, std::mt19937_64& rng) {
  PolyBasis basis(degree);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> c(basis.size());
  for (double& v : c) v = u(rng);
  return Polynomial(basis, c);
}

// Independent reference for J: dense tensor Gauss-Legendre (5 points per
// cell) on a 256 x 256 grid, summed directly from the definition.
double DenseObjective(const Polynomial& f, const PlanarComponents& target, const DomainRect& d) {
  static const double x5[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                               0.9061798459386640};
  static const double w5[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889, 0.4786286704993665,
                               0.2369268850561891};
  const int n = 256;
  const double hy = d.y.width() / n;
  const double hz = d.z.width() / n;
  double sum = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int p = 0; p < 5; ++p) {
        for (int q = 0; q < 5; ++q) {
          const double y = d.y.lo + hy * (a + 0.5 + 0.5 * x5[p]);
          const double z = d.z.lo + hz * (b + 0.5 + 0.5 * x5[q]);
          const Gradient2 g = f.gradient(y, z);
          const SlopePair t = target(y, z);
          const double ey = g.fy - t.g;
          const double ez = g.fz - t.h;
          sum += 0.25 * w5[p] * w5[q] * hy * hz * (ey * ey + ez * ez);
        }
      }
    }
  }
  return sum;
}

TEST(PolyBasis, SizesAndOrder) {
  EXPECT_EQ(PolyBasis(1).size(), 2u);
  EXPECT_EQ(PolyBasis(8).size(), 44u);
  EXPECT_EQ(PolyBasis(12).size(), 90u);
  for (int d = 1; d <= 20; ++d) EXPECT_EQ(PolyBasis(d).size(), PolyBasis::size_for(d));
  const PolyBasis b(2);
  const std::vector<Monomial> expected{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
  ASSERT_EQ(b.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(b.monomials()[k], expected[k]);
  EXPECT_THROW(PolyBasis(0), Error);
}

TEST(Polynomial, ValueAndGradient) {
  // f = z + 3 y^2 z
  PolyBasis basis(3);
  std::vector<double> c(basis.size(), 0.0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Monomial m = basis.monomials()[k];
    if (m == Monomial{0, 1}) c[k] = 1.0;
    if (m == Monomial{2, 1}) c[k] = 3.0;
  }
  const Polynomial f(basis, c);
  EXPECT_DOUBLE_EQ(f.value(2, 0.5), 0.5 + 3 * 4 * 0.5);
  EXPECT_DOUBLE_EQ(f.gradient(2, 0.5).fy, 6 * 2 * 0.5);
  EXPECT_DOUBLE_EQ(f.gradient(2, 0.5).fz, 1 + 3 * 4);
  EXPECT_DOUBLE_EQ(f.coefficient(2, 1), 3.0);
  EXPECT_DOUBLE_EQ(f.coefficient(1, 1), 0.0);
  EXPECT_THROW(Polynomial(basis, {1.0}), Error);
}

TEST(Quadrature, WeightsSumToArea) {
  for (QuadratureRule rule : {QuadratureRule::kMidpoint, QuadratureRule::kGaussLegendre}) {
    for (int order = 2; order <= 5; ++order) {
      const Quadrature q{17, 9, rule, order};
      double sum = 0.0;
      for (const QuadNode& n : q.nodes(kPanorama)) sum += n.weight;
      EXPECT_NEAR(sum, kPanorama.area(), 1e-12 * kPanorama.area());
      EXPECT_EQ(q.nodes(kPanorama).size(), q.node_count());
    }
  }
  EXPECT_THROW((Quadrature{0, 4}.validate()), Error);
  EXPECT_THROW((Quadrature{4, 4, QuadratureRule::kGaussLegendre, 7}.validate()), Error);
}

TEST(ObjectiveEval, ByHand) {
  const PlanarComponents constant([](double, double) { return SlopePair{1.0, 2.0}; });
  const Quadrature q{8, 8};
  EXPECT_NEAR(objective_eval(Polynomial::zero(2), constant, kPanorama, q), 5.0 * kPanorama.area(), 1e-12);
  PolyBasis basis(1);
  const Polynomial f(basis, {2.0, 1.0});  // f = 2 z + y
  EXPECT_NEAR(objective_eval(f, constant, kPanorama, q), 0.0, 1e-30);
}

TEST(ObjectiveEval, ExactAndConstantTargets) {
  const DomainRect unit{{-1, 1}, {-1, 1}};
  const PlanarComponents radial([](double y, double z) { return SlopePair{2 * y, 2 * z}; });
  PolyBasis basis(2);
  std::vector<double> c(basis.size(), 0.0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Monomial m = basis.monomials()[k];
    if (m == Monomial{2, 0} || m == Monomial{0, 2}) c[k] = 1.0;
  }
  EXPECT_LT(objective_eval(Polynomial(basis, c), radial, unit, Quadrature{}), 1e-18);
  const PlanarComponents along_y([](double, double) { return SlopePair{1.0, 0.0}; });
  EXPECT_NEAR(objective_eval(Polynomial::zero(3), along_y, DomainRect{{0, 1}, {0, 1}}, Quadrature{}), 1.0, 1e-14);
}

TEST(FitPolynomial, RadialTargetOnUnitSquare) {
  const PlanarComponents radial([](double y, double z) { return SlopePair{2 * y, 2 * z}; });
  const FitResult r = fit_polynomial(radial, DomainRect{{-1, 1}, {-1, 1}}, PolyBasis(2), Quadrature{});
  EXPECT_LT(r.objective, 1e-18);
  for (const Monomial& m : PolyBasis(2).monomials()) {
    const double expected = (m == Monomial{2, 0} || m == Monomial{0, 2}) ? 1.0 : 0.0;
    EXPECT_NEAR(r.polynomial.coefficient(m.i, m.j), expected, 1e-10);
  }
}

TEST(FitPolynomial, QuadraticPotentialRecoveredExactly) {
  PolyBasis basis(2);
  const Polynomial truth(basis, {0.3, -0.7, 1.1, 0.25, -0.4});
  for (int degree : {2, 5, 8}) {
    const FitResult r = fit_polynomial(GradientOf(truth), kPanorama, PolyBasis(degree), Quadrature{});
    EXPECT_LT(r.objective, 1e-16) << degree;
    for (const Monomial& m : PolyBasis(degree).monomials()) {
      EXPECT_NEAR(r.polynomial.coefficient(m.i, m.j), truth.coefficient(m.i, m.j), 1e-9) << m.i << "," << m.j;
    }
  }
}

TEST(FitPolynomial, ZeroTargetGivesZeroSurface) {
  const PlanarComponents zero([](double, double) { return SlopePair{}; });
  const FitResult r = fit_polynomial(zero, kPanorama, PolyBasis(6), Quadrature{});
  EXPECT_EQ(r.objective, 0.0);
  for (double c : r.polynomial.coefficients()) EXPECT_EQ(c, 0.0);
}

TEST(FitPolynomial, RandomLowDegreePotentialsRecovered) {
  std::mt19937_64 rng(5);
  const DomainRect unit{{-1, 1}, {-1, 1}};
  for (int trial = 0; trial < 20; ++trial) {
    const int degree = 1 + trial % 5;
    const Polynomial truth = RandomPolynomial(degree, rng);
    const FitResult r = fit_polynomial(GradientOf(truth), unit, PolyBasis(degree), Quadrature{16, 16});
    EXPECT_LT(r.objective, 1e-16);
    for (std::size_t k = 0; k < truth.coefficients().size(); ++k) {
      EXPECT_NEAR(r.polynomial.coefficients()[k], truth.coefficients()[k], 1e-9);
    }
  }
}

TEST(FitPolynomial, PanoramicDegreeEightAnchor) {
  const FitResult r = fit_polynomial(kCylindrical, kPanorama, PolyBasis(8), Quadrature{});
  const double oracle = DenseObjective(r.polynomial, kCylindrical, kPanorama);
  EXPECT_NEAR(r.objective, oracle, 0.01 * oracle);
  EXPECT_NEAR(r.objective, 5.25401222722406808e-04, 1e-12);
  EXPECT_LT(r.condition_number, 1e7);
  EXPECT_NEAR(objective_eval(r.polynomial, kCylindrical, kPanorama, Quadrature{}), r.objective, 1e-12);
}

TEST(FitPolynomial, ObjectiveNonincreasingInDegree) {
  double previous = std::numeric_limits<double>::infinity();
  for (int degree : {2, 4, 6, 8, 10, 12}) {
    const FitResult r = fit_polynomial(kCylindrical, kPanorama, PolyBasis(degree), Quadrature{});
    EXPECT_LE(r.objective, previous + 1e-12) << degree;
    previous = r.objective;
  }
}

TEST(FitPolynomial, QuadratureRefinementChangesLittle) {
  const FitResult coarse = fit_polynomial(kCylindrical, kPanorama, PolyBasis(8), Quadrature{64, 64});
  const FitResult fine = fit_polynomial(kCylindrical, kPanorama, PolyBasis(8), Quadrature{128, 128});
  EXPECT_NEAR(coarse.objective, fine.objective, 0.01 * fine.objective);
  const FitResult gauss =
      fit_polynomial(kCylindrical, kPanorama, PolyBasis(8), Quadrature{32, 32, QuadratureRule::kGaussLegendre, 3});
  EXPECT_NEAR(gauss.objective, fine.objective, 0.01 * fine.objective);
}

TEST(FitPolynomial, GradientVanishesAtMinimizer) {
  const FitResult r = fit_polynomial(kCylindrical, kPanorama, PolyBasis(8), Quadrature{});
  const Eigen::VectorXd grad =
      r.system.normal_matrix() * r.scaled_coefficients - r.system.normal_rhs();
  EXPECT_LT(grad.norm(), 1e-8 * r.system.normal_rhs().norm());
  EXPECT_NEAR((r.system.design * r.scaled_coefficients - r.system.target).squaredNorm(), r.objective, 1e-15);
}

TEST(FitPolynomial, ErrorsAreTagged) {
  try {
    fit_polynomial(kCylindrical, kPanorama, PolyBasis(12), Quadrature{2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
  }
  try {
    fit_polynomial(kCylindrical, kPanorama, PolyBasis(8), Quadrature{}, FitOptions{0, 10.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSolver);
  }
}

TEST(FitPolynomial, IndependentOfThreadCount) {
  const FitResult one = fit_polynomial(kCylindrical, kPanorama, PolyBasis(8), Quadrature{}, FitOptions{1});
  const FitResult three = fit_polynomial(kCylindrical, kPanorama, PolyBasis(8), Quadrature{}, FitOptions{3});
  EXPECT_TRUE(one.polynomial == three.polynomial);
  EXPECT_EQ(one.objective, three.objective);
}

}  // namespace
}  // namespace mirrorforge
