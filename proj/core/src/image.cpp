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

#include "mirrorforge/image.hpp"

#include <fstream>
#include <string>

#include "mirrorforge/error.hpp"

namespace mirrorforge {

Image::Image(int width, int height) : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    fail(ErrorCode::kDomain, "image size must be positive, got " + std::to_string(width) + "x" +
                                 std::to_string(height));
  }
  rgb_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3, 0);
}

std::size_t Image::offset(int col, int row) const {
  if (col < 0 || col >= width_ || row < 0 || row >= height_) {
    fail(ErrorCode::kDomain, "pixel (" + std::to_string(col) + ", " + std::to_string(row) + ") outside " +
                                 std::to_string(width_) + "x" + std::to_string(height_) + " image");
  }
  return (static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(col)) * 3;
}

Rgb Image::at(int col, int row) const {
  const std::size_t k = offset(col, row);
  return {rgb_[k], rgb_[k + 1], rgb_[k + 2]};
}

void Image::set(int col, int row, Rgb c) {
  const std::size_t k = offset(col, row);
  rgb_[k] = c.r;
  rgb_[k + 1] = c.g;
  rgb_[k + 2] = c.b;
}

void write_ppm(std::ostream& out, const Image& image) {
  out << "P6\n" << image.width() << ' ' << image.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.bytes().data()), static_cast<std::streamsize>(image.bytes().size()));
}

void write_ppm(const std::filesystem::path& path, const Image& image) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  write_ppm(out, image);
  out.flush();
  if (!out) fail(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes) {
  return fnv1a64(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

}  // namespace mirrorforge
