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

// Portable graymap ingestion and heightfield solids.

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mathprint/measures.hpp"
#include "mathprint/mesh.hpp"

namespace mathprint {

/// rows x cols heights, row-major, row 0 along the north (max y) edge.
struct HeightGrid {
  int rows = 0, cols = 0;
  std::vector<double> heights;
  double pitch = 1.0;
  double base = -1.0;

  double at(int r, int c) const { return heights[std::size_t(r) * cols + c]; }
};

struct PgmOptions {
  double z_scale = 1.0;  // height of a maxval pixel
  double pitch = 1.0;    // horizontal spacing of samples
  double base = -1.0;    // z of the flat bottom
};

namespace io {

namespace detail {

class PgmReader {
 public:
  explicit PgmReader(std::string_view s) : s_(s) {}

  HeightGrid read(const PgmOptions& o) {
    if (s_.size() < 2 || s_[0] != 'P' || (s_[1] != '2' && s_[1] != '5'))
      fail(0, "bad magic number, expected P2 or P5");
    const bool binary = s_[1] == '5';
    pos_ = 2;
    const long cols = header_int("width");
    const long rows = header_int("height");
    const long maxval = header_int("maxval");
    if (cols < 2 || rows < 2) fail(pos_, "image must be at least 2 x 2 pixels");
    if (maxval < 1 || maxval > 65535) fail(pos_, "maxval must be in 1..65535");
    if (cols * rows > 100'000'000L) fail(pos_, "image too large");

    HeightGrid g;
    g.rows = int(rows);
    g.cols = int(cols);
    g.pitch = o.pitch;
    g.base = o.base;
    g.heights.resize(std::size_t(rows * cols));
    if (binary) {
      // Exactly one whitespace byte separates the header from the raster.
      if (pos_ >= s_.size() || !std::isspace(static_cast<unsigned char>(s_[pos_])))
        fail(pos_, "expected whitespace before raster");
      ++pos_;
      const std::size_t bpp = maxval < 256 ? 1 : 2;
      const std::size_t need = std::size_t(rows * cols) * bpp;
      if (s_.size() - pos_ < need)
        fail(s_.size(), "raster truncated: expected " + std::to_string(need) +
                            " bytes from offset " + std::to_string(pos_) + ", got " +
                            std::to_string(s_.size() - pos_));
      for (std::size_t i = 0; i < g.heights.size(); ++i) {
        const std::size_t at = pos_ + i * bpp;
        long v = std::uint8_t(s_[at]);
        if (bpp == 2) v = (v << 8) | std::uint8_t(s_[at + 1]);  // big-endian
        if (v > maxval) fail(at, "sample exceeds maxval");
        g.heights[i] = double(v) / double(maxval) * o.z_scale;
      }
    } else {
      for (std::size_t i = 0; i < g.heights.size(); ++i) {
        skip_space_and_comments();
        const std::size_t at = pos_;
        if (at >= s_.size())
          fail(at, "expected " + std::to_string(g.heights.size()) + " samples, got " +
                       std::to_string(i));
        const long v = integer("sample");
        if (v > maxval) fail(at, "sample exceeds maxval");
        g.heights[i] = double(v) / double(maxval) * o.z_scale;
      }
    }
    return g;
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& what) const {
    throw CodecError("PGM at byte " + std::to_string(offset) + ": " + what);
  }

  void skip_space_and_comments() {
    while (pos_ < s_.size()) {
      if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long integer(const char* what) {
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000L) fail(start, std::string(what) + " is too large");
      ++pos_;
    }
    if (pos_ == start) fail(start, std::string("expected ") + what);
    return v;
  }

  long header_int(const char* what) {
    const std::size_t before = pos_;
    skip_space_and_comments();
    if (pos_ == before) fail(pos_, std::string("expected whitespace before ") + what);
    return integer(what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Reads a P2 (ASCII) or P5 (binary, 16-bit samples big-endian) graymap.
/// Sample v maps to height v / maxval * z_scale.
inline HeightGrid read_pgm(std::string_view bytes, const PgmOptions& o = {}) {
  if (!(o.pitch > 0) || !std::isfinite(o.pitch)) throw InputError("pitch must be positive");
  if (!std::isfinite(o.z_scale) || !std::isfinite(o.base))
    throw InputError("z_scale and base must be finite");
  return detail::PgmReader(bytes).read(o);
}

/// P2 text for a grid of integer samples; used by tests and tools.
inline std::string write_pgm_ascii(int rows, int cols, int maxval,
                                   const std::vector<int>& samples) {
  std::string out = "P2\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n" +
                    std::to_string(maxval) + "\n";
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c) out += ' ';
      out += std::to_string(samples[std::size_t(r) * cols + c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace io

/**
 * Closed terrain solid: the height grid triangulated two triangles per
 * cell, vertical walls down to `base` along the border, and a flat bottom
 * fanned from its center. Sample (r, c) sits at x = c * pitch,
 * y = (rows - 1 - r) * pitch.
 */
inline IndexedMesh heightfield_to_mesh(const HeightGrid& h) {
  if (h.rows < 2 || h.cols < 2) throw InputError("height grid must be at least 2 x 2");
  if (h.heights.size() != std::size_t(h.rows) * h.cols)
    throw InputError("height grid size does not match rows x cols");
  if (!(h.pitch > 0) || !std::isfinite(h.pitch)) throw InputError("pitch must be positive");
  double lo = h.heights.front();
  for (double z : h.heights) {
    if (!std::isfinite(z)) throw InputError("height grid contains a non-finite value");
    lo = std::min(lo, z);
  }
  if (!(h.base < lo))
    throw InputError("base level " + std::to_string(h.base) +
                     " must be below the minimum height " + std::to_string(lo));

  IndexedMesh m;
  auto top = [&](int r, int c) { return std::uint32_t(std::size_t(r) * h.cols + c); };
  for (int r = 0; r < h.rows; ++r)
    for (int c = 0; c < h.cols; ++c)
      m.add_vertex({c * h.pitch, (h.rows - 1 - r) * h.pitch, h.at(r, c)});
  for (int r = 0; r + 1 < h.rows; ++r)
    for (int c = 0; c + 1 < h.cols; ++c) {
      const auto a = top(r, c), b = top(r, c + 1), cc = top(r + 1, c + 1), d = top(r + 1, c);
      m.add_face(a, d, cc);
      m.add_face(a, cc, b);
    }

  // Border walk, counterclockwise seen from above: south edge west to east,
  // east edge north, north edge west, west edge south.
  std::vector<std::uint32_t> ring;
  for (int c = 0; c < h.cols - 1; ++c) ring.push_back(top(h.rows - 1, c));
  for (int r = h.rows - 1; r > 0; --r) ring.push_back(top(r, h.cols - 1));
  for (int c = h.cols - 1; c > 0; --c) ring.push_back(top(0, c));
  for (int r = 0; r < h.rows - 1; ++r) ring.push_back(top(r, 0));

  std::vector<std::uint32_t> bottom;
  for (auto t : ring) {
    const Vec3 p = m.vertices[t];
    bottom.push_back(m.add_vertex({p.x, p.y, h.base}));
  }
  const auto center = m.add_vertex(
      {0.5 * (h.cols - 1) * h.pitch, 0.5 * (h.rows - 1) * h.pitch, h.base});
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    // The top grid uses border edge ring[i] -> ring[j]; walls and bottom
    // traverse it the other way.
    m.add_face(ring[j], ring[i], bottom[i]);
    m.add_face(ring[j], bottom[i], bottom[j]);
    m.add_face(center, bottom[j], bottom[i]);
  }
  return m;
}

}  // namespace mathprint
