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

#include "mirrorforge/quadrature.hpp"

#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <string>
#include <utility>

#include "mirrorforge/error.hpp"

namespace mirrorforge {

namespace {

// Points and weights on [-1, 1]. Boost stores only the non-negative half.
template <unsigned N>
std::vector<std::pair<double, double>> gauss_rule() {
  using Rule = boost::math::quadrature::gauss<double, N>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = x.size(); k-- > 0;) {
    if (x[k] != 0.0) out.emplace_back(-x[k], w[k]);
  }
  for (std::size_t k = 0; k < x.size(); ++k) out.emplace_back(x[k], w[k]);
  return out;
}

std::vector<std::pair<double, double>> reference_rule(const Quadrature& q) {
  if (q.rule == QuadratureRule::kMidpoint) return {{0.0, 2.0}};
  switch (q.order) {
    case 2: return gauss_rule<2>();
    case 3: return gauss_rule<3>();
    case 4: return gauss_rule<4>();
    case 5: return gauss_rule<5>();
    default: break;
  }
  fail(ErrorCode::kDomain, "unsupported Gauss-Legendre order " + std::to_string(q.order));
}

}  // namespace

void Quadrature::validate() const {
  if (cells_y < 1 || cells_z < 1) {
    fail(ErrorCode::kDomain, "quadrature grid must be at least 1x1, got " + std::to_string(cells_y) + "x" +
                                 std::to_string(cells_z));
  }
  if (rule == QuadratureRule::kGaussLegendre && (order < 2 || order > 5)) {
    fail(ErrorCode::kDomain, "Gauss-Legendre order must lie in [2, 5], got " + std::to_string(order));
  }
}

std::size_t Quadrature::node_count() const {
  const std::size_t per_cell = rule == QuadratureRule::kMidpoint ? 1 : static_cast<std::size_t>(order * order);
  return static_cast<std::size_t>(cells_y) * static_cast<std::size_t>(cells_z) * per_cell;
}

std::vector<QuadNode> Quadrature::nodes(const DomainRect& domain) const {
  validate();
  domain.validate();
  const auto ref = reference_rule(*this);
  const double hy = domain.y.width() / cells_y;
  const double hz = domain.z.width() / cells_z;
  std::vector<QuadNode> out;
  out.reserve(node_count());
  for (int a = 0; a < cells_y; ++a) {
    const double cy = domain.y.lo + (a + 0.5) * hy;
    for (int b = 0; b < cells_z; ++b) {
      const double cz = domain.z.lo + (b + 0.5) * hz;
      for (const auto& [xi, wi] : ref) {
        for (const auto& [xj, wj] : ref) {
          out.push_back({cy + 0.5 * hy * xi, cz + 0.5 * hz * xj, 0.25 * hy * hz * wi * wj});
        }
      }
    }
  }
  return out;
}

}  // namespace mirrorforge
