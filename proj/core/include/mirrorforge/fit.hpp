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

#include <Eigen/Dense>
#include <functional>

#include "mirrorforge/field.hpp"
#include "mirrorforge/polynomial.hpp"
#include "mirrorforge/projection.hpp"
#include "mirrorforge/quadrature.hpp"

namespace mirrorforge {

using GradientFn = std::function<Gradient2(double, double)>;

/// Quadrature value of  integral_A (f_y - g)^2 + (f_z - h)^2 dA,
/// accumulated in node order.
double objective_eval(const GradientFn& surface_gradient, const PlanarComponents& target, const DomainRect& domain,
                      const Quadrature& quad);
double objective_eval(const Polynomial& f, const PlanarComponents& target, const DomainRect& domain,
                      const Quadrature& quad);

/// Least-squares system in the scaled monomials (y/s_y)^i (z/s_z)^j, where
/// s_y and s_z are the largest |y| and |z| on the domain. `design` holds
/// sqrt(weight)-scaled basis gradients, two rows per node (y then z).
struct LeastSquaresSystem {
  Eigen::MatrixXd design;
  Eigen::VectorXd target;
  double scale_y = 1.0;
  double scale_z = 1.0;

  Eigen::MatrixXd normal_matrix() const { return design.transpose() * design; }
  Eigen::VectorXd normal_rhs() const { return design.transpose() * target; }
};

LeastSquaresSystem assemble_system(const PlanarComponents& target, const DomainRect& domain, const PolyBasis& basis,
                                   const Quadrature& quad, int threads = 0);

struct FitOptions {
  int threads = 0;
  /// Largest admissible condition number of the scaled normal matrix.
  double max_condition = 1e13;
};

struct FitResult {
  Polynomial polynomial;             // raw-coordinate coefficients
  Eigen::VectorXd scaled_coefficients;
  double objective = 0.0;            // J at the minimizer
  double condition_number = 0.0;     // of the scaled normal matrix
  LeastSquaresSystem system;
};

/// Minimizes the quadrature form of the objective over the basis span using
/// a column-pivoted QR solve. Throws E_DOMAIN when the basis outnumbers the
/// quadrature nodes, and E_SOLVER when the system is rank deficient or its
/// condition number exceeds options.max_condition.
FitResult fit_polynomial(const PlanarComponents& target, const DomainRect& domain, const PolyBasis& basis,
                         const Quadrature& quad, const FitOptions& options = {});

}  // namespace mirrorforge
