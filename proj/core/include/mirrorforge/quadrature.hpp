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

#include <vector>

#include "mirrorforge/projection.hpp"

namespace mirrorforge {

enum class QuadratureRule { kMidpoint, kGaussLegendre };

struct QuadNode {
  double y = 0.0;
  double z = 0.0;
  double weight = 0.0;
};

/// Tensor-product rule on an n_y x n_z cell grid over a DomainRect. Gauss-
/// Legendre uses `order` points per cell per axis (2..5).
struct Quadrature {
  int cells_y = 64;
  int cells_z = 64;
  QuadratureRule rule = QuadratureRule::kMidpoint;
  int order = 3;

  /// Throws E_DOMAIN for non-positive resolution or an unsupported order.
  void validate() const;
  std::size_t node_count() const;

  /// Nodes in a fixed order: cell row by cell row along y, then z, then the
  /// per-cell points.
  std::vector<QuadNode> nodes(const DomainRect& domain) const;
};

}  // namespace mirrorforge
