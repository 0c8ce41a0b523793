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

#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "mirrorforge/error.hpp"

namespace mirrorforge {

namespace {

struct Edge {
  std::size_t a;       // lower node
  std::size_t b;       // upper node
  double inv_spacing;  // 1 / h along the edge
  double weight;       // area represented by the edge
  double target;       // g or h at the edge midpoint
};

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s;
}

void remove_mean(std::vector<double>& x) {
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  for (double& v : x) v -= mean;
}

}  // namespace

PoissonResult fit_poisson(const PlanarComponents& target, const DomainRect& domain, int nodes_y, int nodes_z,
                          const PoissonOptions& options) {
  domain.validate();
  if (nodes_y < 8 || nodes_z < 8) {
    fail(ErrorCode::kDomain, "Poisson grid must be at least 8x8, got " + std::to_string(nodes_y) + "x" +
                                 std::to_string(nodes_z));
  }
  const int ny = nodes_y;
  const int nz = nodes_z;
  const double hy = domain.y.width() / (ny - 1);
  const double hz = domain.z.width() / (nz - 1);
  const auto idx = [nz](int i, int j) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(nz) + j; };
  const double cell = hy * hz;

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * ny * nz));
  for (int i = 0; i + 1 < ny; ++i) {
    for (int j = 0; j < nz; ++j) {
      const double w = (j == 0 || j == nz - 1) ? 0.5 * cell : cell;
      const double y = domain.y.lo + (i + 0.5) * hy;
      const double z = domain.z.lo + j * hz;
      edges.push_back({idx(i, j), idx(i + 1, j), 1.0 / hy, w, target(y, z).g});
    }
  }
  for (int i = 0; i < ny; ++i) {
    for (int j = 0; j + 1 < nz; ++j) {
      const double w = (i == 0 || i == ny - 1) ? 0.5 * cell : cell;
      const double y = domain.y.lo + i * hy;
      const double z = domain.z.lo + (j + 0.5) * hz;
      edges.push_back({idx(i, j), idx(i, j + 1), 1.0 / hz, w, target(y, z).h});
    }
  }

  const std::size_t n = static_cast<std::size_t>(ny) * static_cast<std::size_t>(nz);
  std::vector<double> rhs(n, 0.0);
  std::vector<double> diag(n, 0.0);
  for (const Edge& e : edges) {
    const double flux = e.weight * e.target * e.inv_spacing;
    rhs[e.b] += flux;
    rhs[e.a] -= flux;
    const double k = e.weight * e.inv_spacing * e.inv_spacing;
    diag[e.a] += k;
    diag[e.b] += k;
  }
  remove_mean(rhs);

  const auto apply = [&edges, n](const std::vector<double>& x, std::vector<double>& out) {
    out.assign(n, 0.0);
    for (const Edge& e : edges) {
      const double k = e.weight * e.inv_spacing * e.inv_spacing * (x[e.b] - x[e.a]);
      out[e.b] += k;
      out[e.a] -= k;
    }
  };

  std::vector<double> x(n, 0.0);
  const double rhs_norm = std::sqrt(dot(rhs, rhs));
  int iterations = 0;
  double rel = 0.0;
  if (rhs_norm > 0.0) {
    const int max_iter = options.max_iterations > 0 ? options.max_iterations : static_cast<int>(20 * n);
    std::vector<double> r = rhs;
    std::vector<double> z(n);
    std::vector<double> p(n);
    std::vector<double> q(n);
    for (std::size_t k = 0; k < n; ++k) z[k] = r[k] / diag[k];
    p = z;
    double rz = dot(r, z);
    rel = 1.0;
    while (iterations < max_iter) {
      apply(p, q);
      const double alpha = rz / dot(p, q);
      for (std::size_t k = 0; k < n; ++k) {
        x[k] += alpha * p[k];
        r[k] -= alpha * q[k];
      }
      ++iterations;
      rel = std::sqrt(dot(r, r)) / rhs_norm;
      if (rel <= options.tolerance) break;
      for (std::size_t k = 0; k < n; ++k) z[k] = r[k] / diag[k];
      const double rz_next = dot(r, z);
      const double beta = rz_next / rz;
      rz = rz_next;
      for (std::size_t k = 0; k < n; ++k) p[k] = z[k] + beta * p[k];
    }
    if (!(rel <= options.tolerance)) {
      std::ostringstream msg;
      msg << "Poisson CG did not converge: relative residual " << rel << " after " << iterations
          << " iterations (tolerance " << options.tolerance << ")";
      fail(ErrorCode::kSolver, msg.str());
    }
    remove_mean(x);
  }

  double objective = 0.0;
  for (const Edge& e : edges) {
    const double d = (x[e.b] - x[e.a]) * e.inv_spacing - e.target;
    objective += e.weight * d * d;
  }
  return {GridFunction(domain, ny, nz, std::move(x)), objective, iterations, rel};
}

}  // namespace mirrorforge
