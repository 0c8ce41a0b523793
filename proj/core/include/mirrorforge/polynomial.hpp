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

#include <span>
#include <vector>

namespace mirrorforge {

struct Monomial {
  int i = 0;  // power of y
  int j = 0;  // power of z
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Monomials y^i z^j with 0 < i + j <= degree, in lexicographic (i, j)
/// order. The constant is left out: the fitting functional only sees
/// gradients.
class PolyBasis {
 public:
  /// Throws E_DOMAIN for degree < 1.
  explicit PolyBasis(int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  std::span<const Monomial> monomials() const { return monomials_; }

  static std::size_t size_for(int degree) {
    return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2 - 1);
  }

 private:
  int degree_;
  std::vector<Monomial> monomials_;
};

struct Gradient2 {
  double fy = 0.0;
  double fz = 0.0;
};

/// f(y, z) = sum c_ij y^i z^j over a PolyBasis, in raw (unscaled) y and z.
class Polynomial {
 public:
  /// Throws E_DOMAIN when the coefficient count does not match the basis.
  Polynomial(PolyBasis basis, std::vector<double> coefficients);
  static Polynomial zero(int degree);

  const PolyBasis& basis() const { return basis_; }
  int degree() const { return basis_.degree(); }
  std::span<const double> coefficients() const { return coefficients_; }
  double coefficient(int i, int j) const;

  double value(double y, double z) const;
  Gradient2 gradient(double y, double z) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.degree() == b.degree() && a.coefficients_ == b.coefficients_;
  }

 private:
  PolyBasis basis_;
  std::vector<double> coefficients_;
};

}  // namespace mirrorforge
