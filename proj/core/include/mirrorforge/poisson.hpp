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

#include "mirrorforge/field.hpp"
#include "mirrorforge/grid_function.hpp"

namespace mirrorforge {

struct PoissonOptions {
  double tolerance = 1e-12;  // relative residual of the normal equations
  int max_iterations = 0;    // 0: 20 x unknowns
};

struct PoissonResult {
  GridFunction surface;
  double objective = 0.0;  // discrete objective at the solution
  int iterations = 0;
  double relative_residual = 0.0;
};

/// Best-fit potential on a node grid: minimizes the edge-difference form of
///   integral_A (f_y - g)^2 + (f_z - h)^2 dA,
/// whose stationarity condition is the 5-point Laplace equation
///   Lap f = g_y + h_z  with  df/dn = (g, h) . n  on the boundary.
/// Edge weights use the trapezoid rule across the edge so boundary edges
/// carry half a cell. The constant mode is removed by requiring mean(f) = 0.
/// Solved by Jacobi-preconditioned conjugate gradients.
///
/// Throws E_DOMAIN for fewer than 8 nodes per axis and E_SOLVER (with
/// iteration count and residual) when CG does not converge.
PoissonResult fit_poisson(const PlanarComponents& target, const DomainRect& domain, int nodes_y, int nodes_z,
                          const PoissonOptions& options = {});

}  // namespace mirrorforge
