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

// Wavefront OBJ and OpenSCAD polyhedron writers.

#pragma once

#include <charconv>
#include <string>

#include "mathprint/mesh.hpp"

namespace mathprint::io {

namespace detail {

/// Shortest round-trip decimal; fixed notation when `fixed` is set.
inline void append_number(std::string& out, double v, bool fixed) {
  char buf[400];
  v += 0.0;
  const auto r = fixed ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed)
                       : std::to_chars(buf, buf + sizeof buf, v);
  if (r.ec != std::errc()) throw CodecError("cannot format number");
  out.append(buf, r.ptr);
}

}  // namespace detail

/// "v x y z" lines, then "f i j k" lines with 1-based indices.
inline std::string write_obj(const IndexedMesh& mesh) {
  check_indices(mesh);
  check_finite(mesh);
  std::string out;
  for (const Vec3& v : mesh.vertices) {
    out += "v";
    for (int k = 0; k < 3; ++k) {
      out += ' ';
      detail::append_number(out, v[k], false);
    }
    out += '\n';
  }
  for (const Face& f : mesh.faces)
    out += "f " + std::to_string(f[0] + 1) + ' ' + std::to_string(f[1] + 1) + ' ' +
           std::to_string(f[2] + 1) + '\n';
  return out;
}

/// One polyhedron() statement with fixed-notation coordinates. OpenSCAD
/// lists faces clockwise seen from outside, so each triangle is reversed.
inline std::string write_scad(const IndexedMesh& mesh) {
  check_indices(mesh);
  check_finite(mesh);
  std::string out = "polyhedron(points = [";
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (int k = 0; k < 3; ++k) {
      if (k) out += ',';
      detail::append_number(out, mesh.vertices[i][k], true);
    }
    out += ']';
  }
  out += "], faces = [";
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const Face& t = mesh.faces[f];
    if (f) out += ',';
    out += '[' + std::to_string(t[0]) + ',' + std::to_string(t[2]) + ',' +
           std::to_string(t[1]) + ']';
  }
  out += "]);\n";
  return out;
}

}  // namespace mathprint::io
