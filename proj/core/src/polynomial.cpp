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

#include "mirrorforge/polynomial.hpp"

#include <array>
#include <string>

#include "mirrorforge/error.hpp"

namespace mirrorforge {

namespace {

constexpr int kMaxDegree = 40;

void powers(double x, int degree, std::array<double, kMaxDegree + 1>& out) {
  out[0] = 1.0;
  for (int k = 1; k <= degree; ++k) out[k] = out[k - 1] * x;
}

}  // namespace

PolyBasis::PolyBasis(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree) {
    fail(ErrorCode::kDomain, "polynomial degree must lie in [1, " + std::to_string(kMaxDegree) + "], got " +
                                 std::to_string(degree));
  }
  monomials_.reserve(size_for(degree));
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; i + j <= degree; ++j) {
      if (i == 0 && j == 0) continue;
      monomials_.push_back({i, j});
    }
  }
}

Polynomial::Polynomial(PolyBasis basis, std::vector<double> coefficients)
    : basis_(std::move(basis)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != basis_.size()) {
    fail(ErrorCode::kDomain, "expected " + std::to_string(basis_.size()) + " coefficients for degree " +
                                 std::to_string(basis_.degree()) + ", got " + std::to_string(coefficients_.size()));
  }
}

Polynomial Polynomial::zero(int degree) {
  PolyBasis basis(degree);
  const std::size_t n = basis.size();
  return Polynomial(std::move(basis), std::vector<double>(n, 0.0));
}

double Polynomial::coefficient(int i, int j) const {
  const auto mons = basis_.monomials();
  for (std::size_t k = 0; k < mons.size(); ++k) {
    if (mons[k].i == i && mons[k].j == j) return coefficients_[k];
  }
  return 0.0;
}

double Polynomial::value(double y, double z) const {
  std::array<double, kMaxDegree + 1> yp{};
  std::array<double, kMaxDegree + 1> zp{};
  powers(y, degree(), yp);
  powers(z, degree(), zp);
  double sum = 0.0;
  const auto mons = basis_.monomials();
  for (std::size_t k = 0; k < mons.size(); ++k) sum += coefficients_[k] * yp[mons[k].i] * zp[mons[k].j];
  return sum;
}

Gradient2 Polynomial::gradient(double y, double z) const {
  std::array<double, kMaxDegree + 1> yp{};
  std::array<double, kMaxDegree + 1> zp{};
  powers(y, degree(), yp);
  powers(z, degree(), zp);
  Gradient2 g;
  const auto mons = basis_.monomials();
  for (std::size_t k = 0; k < mons.size(); ++k) {
    const auto [i, j] = mons[k];
    if (i > 0) g.fy += coefficients_[k] * i * yp[i - 1] * zp[j];
    if (j > 0) g.fz += coefficients_[k] * j * yp[i] * zp[j - 1];
  }
  return g;
}

}  // namespace mirrorforge
