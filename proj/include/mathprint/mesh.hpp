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

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mathprint/error.hpp"
#include "mathprint/vec.hpp"

namespace mathprint {

using Face = std::array<std::uint32_t, 3>;

/// Shared-vertex triangle mesh. Faces are counterclockwise when seen from
/// outside, so (b - a) x (c - a) is the outward normal.
struct IndexedMesh {
  std::vector<Vec3> vertices;
  std::vector<Face> faces;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_faces() const { return faces.size(); }
  bool empty() const { return faces.empty(); }

  std::array<Vec3, 3> corners(std::size_t f) const {
    const Face& t = faces[f];
    return {vertices[t[0]], vertices[t[1]], vertices[t[2]]};
  }

  /// Appends a vertex and returns its index.
  std::uint32_t add_vertex(const Vec3& v) {
    vertices.push_back(v);
    return static_cast<std::uint32_t>(vertices.size() - 1);
  }
  void add_face(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    faces.push_back({a, b, c});
  }

  friend bool operator==(const IndexedMesh&, const IndexedMesh&) = default;
};

/// Default absolute tolerance for vertex welding.
inline constexpr double kDefaultWeldTolerance = 1e-9;

/// Throws MalformedMeshError if any face index is out of range. `label`
/// names the mesh in the message.
inline void check_indices(const IndexedMesh& mesh,
                          const std::string& label = "mesh") {
  const auto n = mesh.vertices.size();
  for (std::size_t f = 0; f < mesh.faces.size(); ++f)
    for (auto i : mesh.faces[f])
      if (i >= n)
        throw MalformedMeshError(label + ": face " + std::to_string(f) +
                                 " references vertex " + std::to_string(i) +
                                 " but only " + std::to_string(n) +
                                 " vertices exist");
}

inline void check_finite(const IndexedMesh& mesh) {
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
    if (!is_finite(mesh.vertices[i]))
      throw MalformedMeshError("vertex " + std::to_string(i) +
                               " has a non-finite coordinate");
}

/// Concatenates meshes without welding; face order follows input order.
inline IndexedMesh merge(std::span<const IndexedMesh> meshes) {
  IndexedMesh out;
  std::size_t nv = 0, nf = 0;
  for (std::size_t k = 0; k < meshes.size(); ++k) {
    check_indices(meshes[k], "merge input " + std::to_string(k));
    nv += meshes[k].vertices.size();
    nf += meshes[k].faces.size();
  }
  if (nv > std::numeric_limits<std::uint32_t>::max())
    throw MalformedMeshError("merge: vertex count exceeds 32-bit indices");
  out.vertices.reserve(nv);
  out.faces.reserve(nf);
  for (const auto& m : meshes) {
    const auto offset = static_cast<std::uint32_t>(out.vertices.size());
    out.vertices.insert(out.vertices.end(), m.vertices.begin(),
                        m.vertices.end());
    for (const Face& f : m.faces)
      out.faces.push_back({f[0] + offset, f[1] + offset, f[2] + offset});
  }
  return out;
}

inline IndexedMesh merge(std::initializer_list<IndexedMesh> meshes) {
  return merge(std::span<const IndexedMesh>(meshes.begin(), meshes.size()));
}

inline IndexedMesh apply_transform(const IndexedMesh& mesh, const Transform& t) {
  t.validate();
  IndexedMesh out;
  out.faces = mesh.faces;
  out.vertices.reserve(mesh.vertices.size());
  for (const Vec3& v : mesh.vertices) out.vertices.push_back(t.apply(v));
  return out;
}

/// Reverses the winding of every face.
inline IndexedMesh flipped(const IndexedMesh& mesh) {
  IndexedMesh out = mesh;
  for (Face& f : out.faces) std::swap(f[1], f[2]);
  return out;
}

inline Vec3 vertex_centroid(const IndexedMesh& mesh) {
  Vec3 c;
  for (const Vec3& v : mesh.vertices) c += v;
  return mesh.vertices.empty() ? c : c / double(mesh.vertices.size());
}

/// Twice the area vector of triangle (a, b, c).
inline Vec3 area_vector(const Vec3& a, const Vec3& b, const Vec3& c) {
  return cross(b - a, c - a);
}

inline double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * norm(area_vector(a, b, c));
}

/// A triangle is degenerate when its height relative to its longest edge is
/// below 1e-12, which covers coincident and collinear corners.
inline bool is_degenerate_triangle(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double twice_area = norm(area_vector(a, b, c));
  const double longest =
      std::max({norm2(b - a), norm2(c - b), norm2(a - c)});
  return !(twice_area > 1e-12 * longest) || longest == 0;
}

inline bool has_repeated_index(const Face& f) {
  return f[0] == f[1] || f[1] == f[2] || f[0] == f[2];
}

inline Vec3 face_normal(const Vec3& a, const Vec3& b, const Vec3& c) {
  return normalized(area_vector(a, b, c));
}

namespace detail {

struct QuantKey {
  std::int64_t x, y, z;
  friend bool operator==(const QuantKey&, const QuantKey&) = default;
};

struct QuantKeyHash {
  std::size_t operator()(const QuantKey& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : {k.x, k.y, k.z}) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::int64_t quantize(double v, double tol) {
  const double q = std::round(v / tol);
  if (!std::isfinite(q) || std::abs(q) > 9.0e18)
    throw MalformedMeshError(
        "coordinate is non-finite or too large for the weld tolerance");
  return static_cast<std::int64_t>(q);
}

inline QuantKey quant_key(const Vec3& p, double tol) {
  return {quantize(p.x, tol), quantize(p.y, tol), quantize(p.z, tol)};
}

}  // namespace detail

/// Result of welding: the mesh over representative vertices plus the map
/// from old vertex index to new.
struct WeldResult {
  IndexedMesh mesh;
  std::vector<std::uint32_t> remap;
  std::size_t merged = 0;
};

/**
 * Merges vertices whose coordinates quantize to the same lattice point at
 * spacing `tol`. The first vertex (in index order) of each class becomes the
 * representative and keeps its exact coordinates; representatives keep their
 * relative order. Faces are remapped but never dropped, so a face may come
 * out with repeated indices.
 */
inline WeldResult weld(const IndexedMesh& mesh,
                       double tol = kDefaultWeldTolerance) {
  if (!(tol > 0)) throw MalformedMeshError("weld tolerance must be positive");
  check_indices(mesh);
  WeldResult r;
  r.remap.resize(mesh.vertices.size());
  std::unordered_map<detail::QuantKey, std::uint32_t, detail::QuantKeyHash>
      seen;
  seen.reserve(mesh.vertices.size());
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const auto key = detail::quant_key(mesh.vertices[i], tol);
    auto [it, inserted] = seen.try_emplace(
        key, static_cast<std::uint32_t>(r.mesh.vertices.size()));
    if (inserted)
      r.mesh.vertices.push_back(mesh.vertices[i]);
    else
      ++r.merged;
    r.remap[i] = it->second;
  }
  r.mesh.faces.reserve(mesh.faces.size());
  for (const Face& f : mesh.faces)
    r.mesh.faces.push_back({r.remap[f[0]], r.remap[f[1]], r.remap[f[2]]});
  return r;
}

/// Drops vertices no face references, preserving the order of the rest.
inline IndexedMesh compact(const IndexedMesh& mesh) {
  std::vector<std::uint32_t> remap(mesh.vertices.size(),
                                   std::numeric_limits<std::uint32_t>::max());
  for (const Face& f : mesh.faces)
    for (auto i : f) remap[i] = 0;
  IndexedMesh out;
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
    if (remap[i] == 0) {
      remap[i] = static_cast<std::uint32_t>(out.vertices.size());
      out.vertices.push_back(mesh.vertices[i]);
    }
  out.faces.reserve(mesh.faces.size());
  for (const Face& f : mesh.faces)
    out.faces.push_back({remap[f[0]], remap[f[1]], remap[f[2]]});
  return out;
}

}  // namespace mathprint
