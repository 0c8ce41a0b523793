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

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "mirrorforge/geom.hpp"
#include "mirrorforge/mirror.hpp"

namespace mirrorforge {

/// Triangle mesh. Face indices are 0-based in memory, 1-based in OBJ files.
struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> faces;
};

/// Regular (n_y+1) x (n_z+1) vertex grid over the footprint, two triangles
/// per cell, wound so every face normal has positive x. Vertex (i, j) has
/// index i * (n_z + 1) + j. Throws E_DOMAIN for n < 1, E_GEOMETRY if a face
/// comes out degenerate or facing away from the camera.
Mesh tessellate(const GraphSurface& surface, int n_y, int n_z);

/// ASCII Wavefront OBJ: `v x y z` then `f i j k`, LF endings, no normals or
/// texture coordinates. Coordinates use 17 significant digits.
void write_obj(std::ostream& out, const Mesh& mesh);
/// Throws E_IO with the path on failure.
void export_obj(const Mesh& mesh, const std::filesystem::path& path);

/// Reads the subset written by write_obj (`v` and triangular `f` lines;
/// comments and blank lines skipped). Throws E_FORMAT with a line number.
Mesh read_obj(std::istream& in);
Mesh import_obj(const std::filesystem::path& path);

}  // namespace mirrorforge
