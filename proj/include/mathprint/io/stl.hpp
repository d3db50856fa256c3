// Copyright 2026 The mathprint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "mathprint/mesh.hpp"

namespace mathprint::io {

/// Binary STL header tag; space padded to 80 bytes.
inline constexpr std::string_view kStlBinaryTag = "mathprint binary STL 1.0";

namespace detail {

inline void check_writable(const IndexedMesh& mesh) {
  check_indices(mesh);
  check_finite(mesh);
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto [a, b, c] = mesh.corners(f);
    if (is_degenerate_triangle(a, b, c))
      throw CodecError("face " + std::to_string(f) +
                       " is degenerate; repair the mesh before writing");
  }
}

inline void append_sci(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, " % .8E", v + 0.0);  // + 0.0 turns -0 into +0
  out += buf;
}

inline void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

inline void put_f32(std::string& out, float f) {
  std::uint32_t bits;
  std::memcpy(&bits, &f, 4);
  put_u32(out, bits);
}

inline std::uint32_t get_u32(std::string_view s, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(std::uint8_t(s[at + i])) << (8 * i);
  return v;
}

inline float get_f32(std::string_view s, std::size_t at) {
  const std::uint32_t bits = get_u32(s, at);
  float f;
  std::memcpy(&f, &bits, 4);
  return f;
}

inline float to_f32(double v) {
  if (!(std::abs(v) <= double(std::numeric_limits<float>::max())))
    throw CodecError("coordinate " + std::to_string(v) +
                     " does not fit a 32-bit float");
  return static_cast<float>(v);
}

}  // namespace detail

/**
 * ASCII STL. Numbers use the fixed "% .8E" layout (sign or space, one
 * leading digit, eight decimals, uppercase exponent), so a positive value
 * is preceded by two spaces. Normals are recomputed from the winding.
 */
inline std::string write_stl_ascii(const IndexedMesh& mesh,
                                   const std::string& name = "mathprint") {
  detail::check_writable(mesh);
  std::string out;
  out.reserve(64 + mesh.faces.size() * 260);
  out += "solid " + name + "\n";
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto [a, b, c] = mesh.corners(f);
    const Vec3 n = face_normal(a, b, c);
    out += "  facet normal";
    for (int k = 0; k < 3; ++k) detail::append_sci(out, n[k]);
    out += "\n    outer loop\n";
    for (const Vec3& v : {a, b, c}) {
      out += "      vertex";
      for (int k = 0; k < 3; ++k) detail::append_sci(out, v[k]);
      out += "\n";
    }
    out += "    endloop\n  endfacet\n";
  }
  out += "endsolid " + name + "\n";
  return out;
}

/// Binary STL: 80-byte header, little-endian facet count, 50 bytes per
/// facet. Coordinates are rounded to float first and the stored normal is
/// computed from the rounded corners.
inline std::string write_stl_binary(const IndexedMesh& mesh) {
  detail::check_writable(mesh);
  if (mesh.faces.size() > std::numeric_limits<std::uint32_t>::max())
    throw CodecError("too many faces for binary STL");
  std::string out(kStlBinaryTag);
  out.resize(80, ' ');
  out.reserve(84 + 50 * mesh.faces.size());
  detail::put_u32(out, static_cast<std::uint32_t>(mesh.faces.size()));
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    float v[3][3];
    const auto corners = mesh.corners(f);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) v[i][k] = detail::to_f32(corners[i][k]);
    const Vec3 n = face_normal({v[0][0], v[0][1], v[0][2]}, {v[1][0], v[1][1], v[1][2]},
                               {v[2][0], v[2][1], v[2][2]});
    for (int k = 0; k < 3; ++k) detail::put_f32(out, static_cast<float>(n[k] + 0.0));
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) detail::put_f32(out, v[i][k]);
    out.push_back('\0');
    out.push_back('\0');
  }
  return out;
}

namespace detail {

/// Line-oriented tokenizer for the ASCII grammar.
class StlAsciiParser {
 public:
  explicit StlAsciiParser(std::string_view s) : s_(s) {}

  IndexedMesh parse() {
    auto words = next_line();
    if (words.empty() || words[0] != "solid") fail("expected 'solid'");
    IndexedMesh soup;
    while (true) {
      words = next_line();
      if (words.empty()) {
        if (at_end_) break;  // missing endsolid is tolerated at end of input
        continue;
      }
      if (words[0] == "endsolid") break;
      if (words.size() != 5 || words[0] != "facet" || words[1] != "normal")
        fail("expected 'facet normal nx ny nz'");
      for (int k = 2; k < 5; ++k) number(words[k]);  // checked, then discarded
      expect({"outer", "loop"});
      std::uint32_t idx[3];
      for (int i = 0; i < 3; ++i) {
        words = next_line();
        if (words.size() != 4 || words[0] != "vertex") fail("expected 'vertex x y z'");
        idx[i] = soup.add_vertex({number(words[1]), number(words[2]), number(words[3])});
      }
      expect({"endloop"});
      expect({"endfacet"});
      soup.add_face(idx[0], idx[1], idx[2]);
    }
    // Anything after endsolid must be blank.
    while (!at_end_) {
      if (!next_line().empty()) fail("unexpected content after 'endsolid'");
    }
    return soup;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw CodecError("ASCII STL line " + std::to_string(line_) + ": " + what);
  }

  std::vector<std::string_view> next_line() {
    std::vector<std::string_view> words;
    if (pos_ >= s_.size()) {
      at_end_ = true;
      ++line_;
      return words;
    }
    ++line_;
    std::size_t end = s_.find('\n', pos_);
    if (end == std::string_view::npos) end = s_.size();
    std::string_view line = s_.substr(pos_, end - pos_);
    pos_ = end + 1;
    if (pos_ >= s_.size()) at_end_ = true;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) words.push_back(line.substr(i, j - i));
      i = j;
    }
    return words;
  }

  void expect(std::initializer_list<std::string_view> want) {
    const auto words = next_line();
    if (words.size() != want.size() || !std::equal(words.begin(), words.end(), want.begin()))
      fail("expected '" + std::string(*want.begin()) + (want.size() > 1 ? " ...'" : "'"));
  }

  double number(std::string_view w) const {
    if (!w.empty() && w[0] == '+') w.remove_prefix(1);
    double v = 0;
    const auto r = std::from_chars(w.data(), w.data() + w.size(), v);
    if (r.ec != std::errc() || r.ptr != w.data() + w.size() || !std::isfinite(v))
      fail("bad number '" + std::string(w) + "'");
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
  bool at_end_ = false;
};

inline bool looks_ascii(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[i]))) ++i;
  if (bytes.substr(i, 5) != "solid") return false;
  // Binary files whose header happens to start with "solid" carry control
  // bytes (the zero attribute words at least); text never does.
  for (char ch : bytes) {
    const auto u = static_cast<unsigned char>(ch);
    if (u < 0x09 || (u > 0x0d && u < 0x20)) return false;
  }
  return true;
}

inline IndexedMesh parse_binary(std::string_view bytes) {
  if (bytes.size() < 84)
    throw CodecError("binary STL: expected at least 84 bytes, got " +
                     std::to_string(bytes.size()));
  const std::uint64_t n = get_u32(bytes, 80);
  const std::uint64_t want = 84 + 50 * n;
  if (bytes.size() != want)
    throw CodecError("binary STL: header declares " + std::to_string(n) +
                     " facets, expected " + std::to_string(want) + " bytes, got " +
                     std::to_string(bytes.size()));
  IndexedMesh soup;
  soup.vertices.reserve(3 * n);
  soup.faces.reserve(n);
  for (std::uint64_t f = 0; f < n; ++f) {
    const std::size_t at = 84 + 50 * f + 12;
    std::uint32_t idx[3];
    for (int i = 0; i < 3; ++i) {
      const Vec3 v{get_f32(bytes, at + 12 * i), get_f32(bytes, at + 12 * i + 4),
                   get_f32(bytes, at + 12 * i + 8)};
      if (!is_finite(v))
        throw CodecError("binary STL: facet " + std::to_string(f) +
                         " has a non-finite coordinate");
      idx[i] = soup.add_vertex(v);
    }
    soup.add_face(idx[0], idx[1], idx[2]);
  }
  return soup;
}

}  // namespace detail

/**
 * Reads ASCII or binary STL. Input beginning with "solid" is parsed as
 * ASCII; if that fails but the size matches a binary layout, it is read as
 * binary. Stored normals are ignored. Corners are welded at `weld_tol`.
 */
inline IndexedMesh read_stl(std::string_view bytes,
                            double weld_tol = kDefaultWeldTolerance) {
  IndexedMesh soup;
  if (detail::looks_ascii(bytes)) {
    try {
      soup = detail::StlAsciiParser(bytes).parse();
    } catch (const CodecError&) {
      const bool binary_sized =
          bytes.size() >= 84 && bytes.size() == 84 + 50 * std::uint64_t(detail::get_u32(bytes, 80));
      if (!binary_sized) throw;
      soup = detail::parse_binary(bytes);
    }
  } else {
    soup = detail::parse_binary(bytes);
  }
  return weld(soup, weld_tol).mesh;
}

}  // namespace mathprint::io
