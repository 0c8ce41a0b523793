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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "mirrorforge/grid_function.hpp"
#include "mirrorforge/polynomial.hpp"

namespace mirrorforge {

// Coefficient file:
//   mirrorforge-poly v1
//   degree <d>
//   <i> <j> <c_ij>        one line per monomial, lexicographic (i, j)
// Values are written in scientific notation with 17 fractional digits so a
// read/write cycle reproduces the file byte for byte.
inline constexpr const char* kPolyHeader = "mirrorforge-poly v1";

// Grid file (Poisson solutions):
//   mirrorforge-grid v1
//   nodes <ny> <nz>
//   domain <y0> <y1> <z0> <z1>
//   <value>               one line per node, row-major in y
inline constexpr const char* kGridHeader = "mirrorforge-grid v1";

/// Scientific notation, 17 fractional digits; parses back to the same double.
std::string format_real(double v);

void write_polynomial(std::ostream& out, const Polynomial& p);
void write_polynomial(const std::filesystem::path& path, const Polynomial& p);
/// Throws E_FORMAT naming the offending line.
Polynomial read_polynomial(std::istream& in);
/// Throws E_IO if the file cannot be opened.
Polynomial read_polynomial(const std::filesystem::path& path);

void write_grid(std::ostream& out, const GridFunction& f);
void write_grid(const std::filesystem::path& path, const GridFunction& f);
GridFunction read_grid(std::istream& in);
GridFunction read_grid(const std::filesystem::path& path);

using SurfaceData = std::variant<Polynomial, GridFunction>;

/// Dispatches on the header line.
SurfaceData read_surface_file(const std::filesystem::path& path);

}  // namespace mirrorforge
