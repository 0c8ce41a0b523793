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

#include "mirrorforge/mesh.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "mirrorforge/error.hpp"

namespace mirrorforge {

namespace {

constexpr double kMinFaceArea = 1e-12;

std::string format_coord(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

}  // namespace

Mesh tessellate(const GraphSurface& surface, int n_y, int n_z) {
  if (n_y < 1 || n_z < 1) {
    fail(ErrorCode::kDomain, "tessellation needs at least 1x1 cells, got " + std::to_string(n_y) + "x" +
                                 std::to_string(n_z));
  }
  const DomainRect& d = surface.footprint();
  Mesh mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(n_y + 1) * static_cast<std::size_t>(n_z + 1));
  for (int i = 0; i <= n_y; ++i) {
    const double y = i == n_y ? d.y.hi : d.y.lo + d.y.width() * i / n_y;
    for (int j = 0; j <= n_z; ++j) {
      const double z = j == n_z ? d.z.hi : d.z.lo + d.z.width() * j / n_z;
      mesh.vertices.push_back(surface.point(y, z));
    }
  }
  const auto vid = [n_z](int i, int j) { return static_cast<std::uint32_t>(i * (n_z + 1) + j); };
  mesh.faces.reserve(static_cast<std::size_t>(2 * n_y * n_z));
  for (int i = 0; i < n_y; ++i) {
    for (int j = 0; j < n_z; ++j) {
      mesh.faces.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      mesh.faces.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }
  for (const auto& f : mesh.faces) {
    const Vec3 n = cross(mesh.vertices[f[1]] - mesh.vertices[f[0]], mesh.vertices[f[2]] - mesh.vertices[f[0]]);
    if (!(0.5 * norm(n) > kMinFaceArea) || !(n.x > 0.0)) {
      fail(ErrorCode::kGeometry, "tessellation produced a degenerate or back-facing triangle");
    }
  }
  return mesh;
}

void write_obj(std::ostream& out, const Mesh& mesh) {
  for (const Vec3& v : mesh.vertices) {
    out << "v " << format_coord(v.x) << ' ' << format_coord(v.y) << ' ' << format_coord(v.z) << '\n';
  }
  for (const auto& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void export_obj(const Mesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  write_obj(out, mesh);
  out.flush();
  if (!out) fail(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

Mesh read_obj(std::istream& in) {
  Mesh mesh;
  std::string line;
  int lineno = 0;
  const auto bad = [&lineno](const std::string& msg) {
    fail(ErrorCode::kFormat, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      std::array<std::string, 3> tok;
      Vec3 v;
      if (!(ss >> tok[0] >> tok[1] >> tok[2])) bad("vertex needs three coordinates");
      for (int k = 0; k < 3; ++k) {
        const char* end = tok[k].data() + tok[k].size();
        auto [ptr, ec] = std::from_chars(tok[k].data(), end, v[k]);
        if (ec != std::errc() || ptr != end) bad("malformed coordinate '" + tok[k] + "'");
      }
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::array<std::uint32_t, 3> face{};
      long long a = 0;
      long long b = 0;
      long long c = 0;
      std::string extra;
      if (!(ss >> a >> b >> c) || (ss >> extra)) bad("only triangular faces with plain indices are supported");
      const long long nv = static_cast<long long>(mesh.vertices.size());
      for (long long idx : {a, b, c}) {
        if (idx < 1 || idx > nv) bad("face index " + std::to_string(idx) + " out of range");
      }
      face = {static_cast<std::uint32_t>(a - 1), static_cast<std::uint32_t>(b - 1), static_cast<std::uint32_t>(c - 1)};
      mesh.faces.push_back(face);
    } else {
      bad("unsupported OBJ statement '" + tag + "'");
    }
  }
  return mesh;
}

Mesh import_obj(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  return read_obj(in);
}

}  // namespace mirrorforge
