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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace mirrorforge {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// 8-bit RGB raster, row 0 at the top.
class Image {
 public:
  Image(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  /// Throws E_DOMAIN outside the raster.
  Rgb at(int col, int row) const;
  void set(int col, int row, Rgb c);
  const std::vector<std::uint8_t>& bytes() const { return rgb_; }

 private:
  std::size_t offset(int col, int row) const;

  int width_;
  int height_;
  std::vector<std::uint8_t> rgb_;
};

/// Binary PPM: "P6\n<w> <h>\n255\n" followed by packed RGB rows.
void write_ppm(std::ostream& out, const Image& image);
void write_ppm(const std::filesystem::path& path, const Image& image);

/// 64-bit FNV-1a, used for golden-output checksums.
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes);

}  // namespace mirrorforge
