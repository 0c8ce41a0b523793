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

#include <algorithm>
#include <limits>
#include <cmath>
#include <sstream>
#include <vector>

#include "mirrorforge/error.hpp"
#include "mirrorforge/parallel.hpp"

namespace mirrorforge {

double objective_eval(const GradientFn& surface_gradient, const PlanarComponents& target, const DomainRect& domain,
                      const Quadrature& quad) {
  double sum = 0.0;
  for (const QuadNode& node : quad.nodes(domain)) {
    const Gradient2 df = surface_gradient(node.y, node.z);
    const SlopePair t = target(node.y, node.z);
    const double ey = df.fy - t.g;
    const double ez = df.fz - t.h;
    sum += node.weight * (ey * ey + ez * ez);
  }
  return sum;
}

double objective_eval(const Polynomial& f, const PlanarComponents& target, const DomainRect& domain,
                      const Quadrature& quad) {
  return objective_eval([&f](double y, double z) { return f.gradient(y, z); }, target, domain, quad);
}

LeastSquaresSystem assemble_system(const PlanarComponents& target, const DomainRect& domain, const PolyBasis& basis,
                                   const Quadrature& quad, int threads) {
  const std::vector<QuadNode> nodes = quad.nodes(domain);
  const auto mons = basis.monomials();
  const Eigen::Index cols = static_cast<Eigen::Index>(mons.size());
  if (mons.size() > nodes.size()) {
    fail(ErrorCode::kDomain, "basis of size " + std::to_string(mons.size()) + " exceeds the " +
                                 std::to_string(nodes.size()) + " quadrature nodes");
  }

  LeastSquaresSystem sys;
  sys.scale_y = std::max(std::abs(domain.y.lo), std::abs(domain.y.hi));
  sys.scale_z = std::max(std::abs(domain.z.lo), std::abs(domain.z.hi));
  sys.design.resize(static_cast<Eigen::Index>(2 * nodes.size()), cols);
  sys.target.resize(static_cast<Eigen::Index>(2 * nodes.size()));

  const int degree = basis.degree();
  parallel_for(nodes.size(), resolve_threads(threads), [&](std::size_t begin, std::size_t end) {
    std::vector<double> up(static_cast<std::size_t>(degree) + 1);
    std::vector<double> vp(static_cast<std::size_t>(degree) + 1);
    for (std::size_t n = begin; n < end; ++n) {
      const QuadNode& node = nodes[n];
      const double u = node.y / sys.scale_y;
      const double v = node.z / sys.scale_z;
      up[0] = vp[0] = 1.0;
      for (int k = 1; k <= degree; ++k) {
        up[k] = up[k - 1] * u;
        vp[k] = vp[k - 1] * v;
      }
      const double sw = std::sqrt(node.weight);
      const auto ry = static_cast<Eigen::Index>(2 * n);
      const auto rz = ry + 1;
      for (Eigen::Index c = 0; c < cols; ++c) {
        const auto [i, j] = mons[static_cast<std::size_t>(c)];
        sys.design(ry, c) = i > 0 ? sw * i * up[i - 1] * vp[j] / sys.scale_y : 0.0;
        sys.design(rz, c) = j > 0 ? sw * j * up[i] * vp[j - 1] / sys.scale_z : 0.0;
      }
      const SlopePair t = target(node.y, node.z);
      sys.target(ry) = sw * t.g;
      sys.target(rz) = sw * t.h;
    }
  });
  return sys;
}

FitResult fit_polynomial(const PlanarComponents& target, const DomainRect& domain, const PolyBasis& basis,
                         const Quadrature& quad, const FitOptions& options) {
  domain.validate();
  LeastSquaresSystem sys = assemble_system(target, domain, basis, quad, options.threads);

  const Eigen::MatrixXd normal = sys.normal_matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(normal, Eigen::EigenvaluesOnly);
  const double lmin = eig.eigenvalues().minCoeff();
  const double lmax = eig.eigenvalues().maxCoeff();
  const double cond = lmin > 0.0 ? lmax / lmin : std::numeric_limits<double>::infinity();

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sys.design);
  const auto cols = sys.design.cols();
  if (qr.rank() < cols || !(cond <= options.max_condition)) {
    std::ostringstream msg;
    msg << "normal matrix ill-conditioned (condition " << cond << ", rank " << qr.rank() << " of " << cols
        << "); lower the degree or refine the quadrature";
    fail(ErrorCode::kSolver, msg.str());
  }
  Eigen::VectorXd c = qr.solve(sys.target);

  std::vector<double> raw(static_cast<std::size_t>(cols));
  const auto mons = basis.monomials();
  for (Eigen::Index k = 0; k < cols; ++k) {
    const auto [i, j] = mons[static_cast<std::size_t>(k)];
    raw[static_cast<std::size_t>(k)] = c(k) / (std::pow(sys.scale_y, i) * std::pow(sys.scale_z, j));
  }

  FitResult result{Polynomial(basis, std::move(raw)), c, (sys.design * c - sys.target).squaredNorm(), cond,
                   std::move(sys)};
  return result;
}

}  // namespace mirrorforge
