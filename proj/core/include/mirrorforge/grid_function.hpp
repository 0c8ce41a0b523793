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

#include "mirrorforge/polynomial.hpp"
#include "mirrorforge/projection.hpp"

namespace mirrorforge {

/// Node values on a uniform nodes_y x nodes_z grid spanning a DomainRect,
/// bilinearly interpolated in between. Storage is row-major in y.
class GridFunction {
 public:
  /// Throws E_DOMAIN for fewer than 2 nodes per axis or a size mismatch.
  GridFunction(DomainRect domain, int nodes_y, int nodes_z, std::vector<double> values);

  const DomainRect& domain() const { return domain_; }
  int nodes_y() const { return ny_; }
  int nodes_z() const { return nz_; }
  double spacing_y() const { return domain_.y.width() / (ny_ - 1); }
  double spacing_z() const { return domain_.z.width() / (nz_ - 1); }
  double node_y(int i) const { return domain_.y.lo + spacing_y() * i; }
  double node_z(int j) const { return domain_.z.lo + spacing_z() * j; }
  double at(int i, int j) const { return values_[index(i, j)]; }
  const std::vector<double>& values() const { return values_; }

  double value(double y, double z) const;
  /// Central difference of the interpolant over half a grid spacing, with the
  /// stencil clipped to the domain at the edges.
  Gradient2 gradient(double y, double z) const;

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(nz_) + static_cast<std::size_t>(j);
  }

 private:
  DomainRect domain_;
  int ny_;
  int nz_;
  std::vector<double> values_;
};

}  // namespace mirrorforge
