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

#include "mirrorforge/coeff_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "mirrorforge/error.hpp"

namespace mirrorforge {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next(const char* what) {
    std::string line;
    if (!std::getline(in_, line)) fail_here(std::string("unexpected end of file, expected ") + what, line_ + 1);
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  bool at_end() {
    in_.peek();
    return in_.eof();
  }

  int line() const { return line_; }

  [[noreturn]] void fail_here(const std::string& msg, int line = -1) const {
    fail(ErrorCode::kFormat, "line " + std::to_string(line < 0 ? line_ : line) + ": " + msg);
  }

 private:
  std::istream& in_;
  int line_ = 0;
};

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

template <typename T>
bool parse_number(const std::string& s, T& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  return in;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) fail(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

}  // namespace

std::string format_real(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 17);
  return std::string(buf.data(), ptr);
}

void write_polynomial(std::ostream& out, const Polynomial& p) {
  out << kPolyHeader << '\n' << "degree " << p.degree() << '\n';
  const auto mons = p.basis().monomials();
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < mons.size(); ++k) {
    out << mons[k].i << ' ' << mons[k].j << ' ' << format_real(coeffs[k]) << '\n';
  }
}

void write_polynomial(const std::filesystem::path& path, const Polynomial& p) {
  auto out = open_out(path);
  write_polynomial(out, p);
  finish(out, path);
}

Polynomial read_polynomial(std::istream& in) {
  LineReader reader(in);
  if (reader.next("header") != kPolyHeader) reader.fail_here(std::string("expected header '") + kPolyHeader + "'");
  const auto deg_tokens = split(reader.next("degree line"));
  int degree = 0;
  if (deg_tokens.size() != 2 || deg_tokens[0] != "degree" || !parse_number(deg_tokens[1], degree) || degree < 1) {
    reader.fail_here("expected 'degree <d>' with d >= 1");
  }
  PolyBasis basis(degree);
  std::vector<double> coeffs;
  coeffs.reserve(basis.size());
  for (const Monomial& m : basis.monomials()) {
    const auto tok = split(reader.next("monomial line"));
    int i = -1;
    int j = -1;
    double c = 0.0;
    if (tok.size() != 3 || !parse_number(tok[0], i) || !parse_number(tok[1], j) || !parse_number(tok[2], c) ||
        !std::isfinite(c)) {
      reader.fail_here("expected '<i> <j> <coefficient>' with a finite coefficient");
    }
    if (i != m.i || j != m.j) {
      reader.fail_here("expected monomial " + std::to_string(m.i) + " " + std::to_string(m.j) + ", got " +
                       std::to_string(i) + " " + std::to_string(j));
    }
    coeffs.push_back(c);
  }
  std::string rest;
  while (std::getline(in, rest)) {
    if (!split(rest).empty()) reader.fail_here("trailing content after the last monomial", reader.line() + 1);
  }
  return Polynomial(std::move(basis), std::move(coeffs));
}

Polynomial read_polynomial(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_polynomial(in);
}

void write_grid(std::ostream& out, const GridFunction& f) {
  const DomainRect& d = f.domain();
  out << kGridHeader << '\n'
      << "nodes " << f.nodes_y() << ' ' << f.nodes_z() << '\n'
      << "domain " << format_real(d.y.lo) << ' ' << format_real(d.y.hi) << ' ' << format_real(d.z.lo) << ' '
      << format_real(d.z.hi) << '\n';
  for (double v : f.values()) out << format_real(v) << '\n';
}

void write_grid(const std::filesystem::path& path, const GridFunction& f) {
  auto out = open_out(path);
  write_grid(out, f);
  finish(out, path);
}

GridFunction read_grid(std::istream& in) {
  LineReader reader(in);
  if (reader.next("header") != kGridHeader) reader.fail_here(std::string("expected header '") + kGridHeader + "'");
  const auto nodes = split(reader.next("nodes line"));
  int ny = 0;
  int nz = 0;
  if (nodes.size() != 3 || nodes[0] != "nodes" || !parse_number(nodes[1], ny) || !parse_number(nodes[2], nz) ||
      ny < 2 || nz < 2) {
    reader.fail_here("expected 'nodes <ny> <nz>' with both >= 2");
  }
  const auto dom = split(reader.next("domain line"));
  DomainRect rect;
  if (dom.size() != 5 || dom[0] != "domain" || !parse_number(dom[1], rect.y.lo) || !parse_number(dom[2], rect.y.hi) ||
      !parse_number(dom[3], rect.z.lo) || !parse_number(dom[4], rect.z.hi)) {
    reader.fail_here("expected 'domain <y0> <y1> <z0> <z1>'");
  }
  std::vector<double> values(static_cast<std::size_t>(ny) * static_cast<std::size_t>(nz));
  for (double& v : values) {
    const auto tok = split(reader.next("node value"));
    if (tok.size() != 1 || !parse_number(tok[0], v) || !std::isfinite(v)) {
      reader.fail_here("expected a single finite node value");
    }
  }
  return GridFunction(rect, ny, nz, std::move(values));
}

GridFunction read_grid(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_grid(in);
}

SurfaceData read_surface_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string header;
  std::getline(in, header);
  in.clear();
  in.seekg(0);
  if (header.rfind(kGridHeader, 0) == 0) return read_grid(in);
  return read_polynomial(in);
}

}  // namespace mirrorforge
