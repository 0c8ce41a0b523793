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

#include "mirrorforge/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mirrorforge/error.hpp"

namespace mirrorforge {

GridFunction::GridFunction(DomainRect domain, int nodes_y, int nodes_z, std::vector<double> values)
    : domain_(domain), ny_(nodes_y), nz_(nodes_z), values_(std::move(values)) {
  domain_.validate();
  if (ny_ < 2 || nz_ < 2) {
    fail(ErrorCode::kDomain, "grid function needs at least 2x2 nodes, got " + std::to_string(ny_) + "x" +
                                 std::to_string(nz_));
  }
  if (values_.size() != static_cast<std::size_t>(ny_) * static_cast<std::size_t>(nz_)) {
    fail(ErrorCode::kDomain, "grid function value count does not match its node grid");
  }
}

double GridFunction::value(double y, double z) const {
  const double sy = std::clamp((y - domain_.y.lo) / spacing_y(), 0.0, static_cast<double>(ny_ - 1));
  const double sz = std::clamp((z - domain_.z.lo) / spacing_z(), 0.0, static_cast<double>(nz_ - 1));
  const int i = std::min(static_cast<int>(sy), ny_ - 2);
  const int j = std::min(static_cast<int>(sz), nz_ - 2);
  const double a = sy - i;
  const double b = sz - j;
  return (1.0 - a) * ((1.0 - b) * at(i, j) + b * at(i, j + 1)) + a * ((1.0 - b) * at(i + 1, j) + b * at(i + 1, j + 1));
}

Gradient2 GridFunction::gradient(double y, double z) const {
  const double hy = 0.5 * spacing_y();
  const double hz = 0.5 * spacing_z();
  const double y0 = std::max(domain_.y.lo, y - hy);
  const double y1 = std::min(domain_.y.hi, y + hy);
  const double z0 = std::max(domain_.z.lo, z - hz);
  const double z1 = std::min(domain_.z.hi, z + hz);
  return {(value(y1, z) - value(y0, z)) / (y1 - y0), (value(y, z1) - value(y, z0)) / (z1 - z0)};
}

}  // namespace mirrorforge
