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

#include <cmath>
#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "mathprint/mesh.hpp"

namespace mathprint {

/// Sum of triangle areas. Throws MalformedMeshError on non-finite vertices.
inline double surface_area(const IndexedMesh& mesh) {
  check_indices(mesh);
  check_finite(mesh);
  double area = 0;
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto [a, b, c] = mesh.corners(f);
    area += triangle_area(a, b, c);
  }
  return area;
}

/// Divergence-theorem volume, sum of det(a, b, c) / 6. Only meaningful for
/// closed, consistently oriented meshes; positive when faces point outward.
inline double signed_volume(const IndexedMesh& mesh) {
  check_indices(mesh);
  double six_v = 0;
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto [a, b, c] = mesh.corners(f);
    six_v += triple(a, b, c);
  }
  return six_v / 6.0;
}

namespace detail {

inline std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t(a) << 32) | b;
}

/// Faces incident to one undirected edge. Only the first two uses are kept;
/// `count` holds the full multiplicity.
struct EdgeUse {
  std::uint32_t count = 0;
  std::uint32_t face[2] = {0, 0};
  bool forward[2] = {false, false};  // traversed low -> high index
};

/// Undirected edge table over a welded mesh, skipping faces with repeated
/// indices. Edge iteration order is the order of first appearance.
struct EdgeTable {
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::uint64_t> keys;
  std::vector<EdgeUse> uses;

  explicit EdgeTable(const IndexedMesh& welded) {
    index.reserve(welded.faces.size() * 2);
    for (std::size_t f = 0; f < welded.faces.size(); ++f) {
      const Face& t = welded.faces[f];
      if (has_repeated_index(t)) continue;
      for (int e = 0; e < 3; ++e) {
        const std::uint32_t a = t[e], b = t[(e + 1) % 3];
        const auto key = edge_key(a, b);
        auto [it, inserted] =
            index.try_emplace(key, static_cast<std::uint32_t>(keys.size()));
        if (inserted) {
          keys.push_back(key);
          uses.emplace_back();
        }
        EdgeUse& u = uses[it->second];
        if (u.count < 2) {
          u.face[u.count] = static_cast<std::uint32_t>(f);
          u.forward[u.count] = a < b;
        }
        ++u.count;
      }
    }
  }

  std::size_t size() const { return keys.size(); }
  static std::uint32_t lo(std::uint64_t key) { return std::uint32_t(key >> 32); }
  static std::uint32_t hi(std::uint64_t key) {
    return std::uint32_t(key & 0xffffffffu);
  }

  const EdgeUse* find(std::uint32_t a, std::uint32_t b) const {
    auto it = index.find(edge_key(a, b));
    return it == index.end() ? nullptr : &uses[it->second];
  }
};

inline std::string describe_edge(const IndexedMesh& welded, std::uint64_t key,
                                 std::uint32_t count) {
  std::ostringstream os;
  os.precision(17);
  const Vec3 p = welded.vertices[EdgeTable::lo(key)];
  const Vec3 q = welded.vertices[EdgeTable::hi(key)];
  os << "edge (" << p.x << ", " << p.y << ", " << p.z << ")-(" << q.x << ", "
     << q.y << ", " << q.z << ") is shared by " << count << " face(s)";
  return os.str();
}

inline std::size_t referenced_vertex_count(const IndexedMesh& welded) {
  std::vector<char> used(welded.vertices.size(), 0);
  std::size_t n = 0;
  for (const Face& f : welded.faces) {
    if (has_repeated_index(f)) continue;
    for (auto i : f)
      if (!used[i]) {
        used[i] = 1;
        ++n;
      }
  }
  return n;
}

inline std::size_t live_face_count(const IndexedMesh& welded) {
  std::size_t n = 0;
  for (const Face& f : welded.faces) n += has_repeated_index(f) ? 0 : 1;
  return n;
}

/// Throws TopologyError unless every edge is used by exactly two faces.
inline void require_closed_manifold(const IndexedMesh& welded,
                                   const EdgeTable& edges) {
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges.uses[e].count != 2)
      throw TopologyError("not a closed edge-manifold: " +
                          describe_edge(welded, edges.keys[e],
                                        edges.uses[e].count));
}

inline long long euler_of(const IndexedMesh& welded, const EdgeTable& edges) {
  return static_cast<long long>(referenced_vertex_count(welded)) -
         static_cast<long long>(edges.size()) +
         static_cast<long long>(live_face_count(welded));
}

/// Interior angle at corner `a` of triangle (a, b, c); atan2 form stays
/// accurate for needle triangles.
inline double corner_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 u = b - a, v = c - a;
  return std::atan2(norm(cross(u, v)), dot(u, v));
}

/// Sum over referenced vertices of (2 pi - incident angles) / (2 pi).
inline double normalized_angle_defect_sum(const IndexedMesh& welded) {
  std::vector<double> angle_sum(welded.vertices.size(), 0.0);
  std::vector<char> used(welded.vertices.size(), 0);
  for (const Face& f : welded.faces) {
    if (has_repeated_index(f)) continue;
    const Vec3 a = welded.vertices[f[0]], b = welded.vertices[f[1]],
               c = welded.vertices[f[2]];
    angle_sum[f[0]] += corner_angle(a, b, c);
    angle_sum[f[1]] += corner_angle(b, c, a);
    angle_sum[f[2]] += corner_angle(c, a, b);
    used[f[0]] = used[f[1]] = used[f[2]] = 1;
  }
  double total = 0;
  for (std::size_t v = 0; v < angle_sum.size(); ++v)
    if (used[v]) total += (kTwoPi - angle_sum[v]) / kTwoPi;
  return total;
}

}  // namespace detail

/**
 * V - E + F of the mesh after welding at `weld_tol`. Faces that collapse
 * under welding are ignored. Throws TopologyError naming the first edge not
 * shared by exactly two faces.
 */
inline long long euler_characteristic(const IndexedMesh& mesh,
                                      double weld_tol = kDefaultWeldTolerance) {
  const IndexedMesh welded = weld(mesh, weld_tol).mesh;
  const detail::EdgeTable edges(welded);
  detail::require_closed_manifold(welded, edges);
  return detail::euler_of(welded, edges);
}

/// Discrete Gauss-Bonnet total: the angle defects summed over vertices,
/// divided by 2 pi so that it equals the Euler characteristic.
inline double total_curvature(const IndexedMesh& mesh,
                              double weld_tol = kDefaultWeldTolerance) {
  check_finite(mesh);
  const IndexedMesh welded = weld(mesh, weld_tol).mesh;
  const detail::EdgeTable edges(welded);
  detail::require_closed_manifold(welded, edges);
  return detail::normalized_angle_defect_sum(welded);
}

/// Per-vertex angle defect divided by 2 pi, indexed like `mesh.vertices`.
/// Vertices no face touches get 0. No welding is performed.
inline std::vector<double> vertex_curvatures(const IndexedMesh& mesh) {
  check_indices(mesh);
  std::vector<double> angle_sum(mesh.vertices.size(), 0.0);
  std::vector<char> used(mesh.vertices.size(), 0);
  for (const Face& f : mesh.faces) {
    if (has_repeated_index(f)) continue;
    const Vec3 a = mesh.vertices[f[0]], b = mesh.vertices[f[1]],
               c = mesh.vertices[f[2]];
    angle_sum[f[0]] += detail::corner_angle(a, b, c);
    angle_sum[f[1]] += detail::corner_angle(b, c, a);
    angle_sum[f[2]] += detail::corner_angle(c, a, b);
    used[f[0]] = used[f[1]] = used[f[2]] = 1;
  }
  std::vector<double> k(mesh.vertices.size(), 0.0);
  for (std::size_t v = 0; v < k.size(); ++v)
    if (used[v]) k[v] = (kTwoPi - angle_sum[v]) / kTwoPi;
  return k;
}

}  // namespace mathprint
