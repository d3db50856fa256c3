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


// Printability analysis and repair.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "mathprint/measures.hpp"
#include "mathprint/mesh.hpp"

namespace mathprint {

struct MeshReport {
  std::size_t vertices = 0;         // as given
  std::size_t faces = 0;            // as given
  std::size_t welded_vertices = 0;  // after welding
  std::size_t edges = 0;            // undirected, after welding
  std::size_t boundary_edges = 0;
  std::size_t non_manifold_edges = 0;
  std::size_t degenerate_faces = 0;
  std::size_t components = 0;  // vertex-connected pieces
  bool orientation_consistent = false;
  bool watertight = false;
  std::optional<long long> euler_characteristic;  // iff edge-manifold
  double surface_area = 0;
  std::optional<double> signed_volume;    // iff watertight and consistent
  std::optional<double> total_curvature;  // iff watertight
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

inline bool is_degenerate_face(const IndexedMesh& m, const Face& f) {
  return has_repeated_index(f) ||
         is_degenerate_triangle(m.vertices[f[0]], m.vertices[f[1]], m.vertices[f[2]]);
}

/// True when every two-face edge is traversed in opposite directions and no
/// edge has more than two faces.
inline bool consistently_oriented(const EdgeTable& edges) {
  for (const EdgeUse& u : edges.uses) {
    if (u.count > 2) return false;
    if (u.count == 2 && u.forward[0] == u.forward[1]) return false;
  }
  return true;
}

}  // namespace detail

/**
 * Welds at `weld_tol` and reports topology and measures. Faces that collapse
 * under welding count as degenerate and are left out of the edge table.
 * Throws MalformedMeshError only when the mesh cannot be interpreted at all
 * (index out of range, non-finite coordinate).
 */
inline MeshReport analyze(const IndexedMesh& mesh, double weld_tol = kDefaultWeldTolerance) {
  check_finite(mesh);
  const IndexedMesh welded = weld(mesh, weld_tol).mesh;
  const detail::EdgeTable edges(welded);

  MeshReport r;
  r.vertices = mesh.vertices.size();
  r.faces = mesh.faces.size();
  r.welded_vertices = welded.vertices.size();
  r.edges = edges.size();
  for (const auto& u : edges.uses) {
    r.boundary_edges += u.count == 1;
    r.non_manifold_edges += u.count > 2;
  }
  for (const Face& f : welded.faces) r.degenerate_faces += detail::is_degenerate_face(welded, f);

  detail::UnionFind uf(welded.vertices.size());
  std::vector<char> used(welded.vertices.size(), 0);
  for (const Face& f : welded.faces) {
    if (has_repeated_index(f)) continue;
    uf.unite(f[0], f[1]);
    uf.unite(f[1], f[2]);
    used[f[0]] = used[f[1]] = used[f[2]] = 1;
  }
  for (std::uint32_t v = 0; v < welded.vertices.size(); ++v)
    r.components += used[v] && uf.find(v) == v;

  r.orientation_consistent = detail::consistently_oriented(edges);
  r.watertight = r.boundary_edges == 0 && r.non_manifold_edges == 0 &&
                 detail::live_face_count(welded) > 0;
  if (r.non_manifold_edges == 0) r.euler_characteristic = detail::euler_of(welded, edges);
  r.surface_area = surface_area(welded);
  if (r.watertight) {
    r.total_curvature = detail::normalized_angle_defect_sum(welded);
    if (r.orientation_consistent) r.signed_volume = signed_volume(welded);
  }
  return r;
}

struct RepairOptions {
  double weld_tol = kDefaultWeldTolerance;
  std::size_t max_hole_edges = 16;
};

struct RepairResult {
  IndexedMesh mesh;
  std::size_t merged_vertices = 0;
  std::size_t dropped_degenerate = 0;
  std::size_t dropped_duplicate = 0;  // repeats and cancelled wall pairs
  std::size_t flipped_faces = 0;      // by the orientation flood
  std::size_t non_orientable_components = 0;
  std::size_t holes_filled = 0;
  std::size_t holes_left = 0;  // simple loops too large or with a degenerate fan
  std::size_t open_boundary_edges = 0;  // on loops through branching vertices
  std::size_t reversed_components = 0;  // inside-out closed shells reversed
  std::vector<std::string> log;
};

namespace detail {

inline std::vector<std::array<std::uint32_t, 3>> face_edge_indices(const IndexedMesh& m,
                                                                   const EdgeTable& t) {
  std::vector<std::array<std::uint32_t, 3>> out(m.faces.size());
  for (std::size_t f = 0; f < m.faces.size(); ++f)
    for (int k = 0; k < 3; ++k)
      out[f][k] = t.index.at(edge_key(m.faces[f][k], m.faces[f][(k + 1) % 3]));
  return out;
}

/// Breadth-first orientation flood per face-connected component, starting at
/// the lowest-index face and propagating across two-face edges. A component
/// that reaches a contradiction is restored to its input winding.
inline void orient_components(IndexedMesh& m, RepairResult& r) {
  const EdgeTable edges(m);
  const auto fe = face_edge_indices(m, edges);
  std::vector<int> comp(m.faces.size(), -1);
  std::vector<char> flip(m.faces.size(), 0);
  std::vector<std::uint32_t> queue;
  int next = 0;
  for (std::uint32_t seed = 0; seed < m.faces.size(); ++seed) {
    if (comp[seed] >= 0) continue;
    const int id = next++;
    bool ok = true;
    queue.assign(1, seed);
    comp[seed] = id;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::uint32_t f = queue[qi];
      for (int k = 0; k < 3; ++k) {
        const EdgeUse& u = edges.uses[fe[f][k]];
        if (u.count != 2) continue;
        const int side = u.face[0] == f ? 0 : 1;
        const std::uint32_t g = u.face[1 - side];
        const bool want = !(u.forward[side] ^ bool(flip[f])) ^ u.forward[1 - side];
        if (comp[g] < 0) {
          comp[g] = id;
          flip[g] = want;
          queue.push_back(g);
        } else if (bool(flip[g]) != want) {
          ok = false;
        }
      }
    }
    if (!ok) {
      for (auto f : queue) flip[f] = 0;
      ++r.non_orientable_components;
    }
  }
  for (std::size_t f = 0; f < m.faces.size(); ++f)
    if (flip[f]) {
      std::swap(m.faces[f][1], m.faces[f][2]);
      ++r.flipped_faces;
    }
}

/// Fills boundary loops of at most `max_edges` edges with a fan from the
/// loop centroid. Loops through a vertex with several outgoing boundary
/// edges are left open, as are loops whose fan would be degenerate.
inline void fill_holes(IndexedMesh& m, std::size_t max_edges, RepairResult& r) {
  const EdgeTable edges(m);
  // The hole runs against the winding of its single incident face.
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> out;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> starts;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const EdgeUse& u = edges.uses[e];
    if (u.count != 1) continue;
    const std::uint32_t lo = EdgeTable::lo(edges.keys[e]), hi = EdgeTable::hi(edges.keys[e]);
    const auto [a, b] = u.forward[0] ? std::pair{hi, lo} : std::pair{lo, hi};
    out[a].push_back(b);
    starts.push_back({a, b});
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& start : starts) {
    if (seen.count(start)) continue;
    std::vector<std::uint32_t> loop{start.first};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> walked{start};
    bool simple = true;
    std::uint32_t cur = start.second;
    while (cur != start.first) {
      const auto& nx = out[cur];
      if (nx.size() != 1 || loop.size() > edges.size()) {
        simple = false;
        break;
      }
      loop.push_back(cur);
      walked.push_back({cur, nx[0]});
      cur = nx[0];
    }
    if (simple)
      for (auto v : loop)
        if (out[v].size() != 1) simple = false;
    if (!simple) {
      // Mark only the starting edge; other edges may still belong to
      // separate simple loops.
      seen.insert(start);
      ++r.open_boundary_edges;
      continue;
    }
    seen.insert(walked.begin(), walked.end());
    if (loop.size() > max_edges) {
      ++r.holes_left;
      continue;
    }
    Vec3 c;
    for (auto v : loop) c += m.vertices[v];
    c = c / double(loop.size());
    bool fan_ok = true;
    for (std::size_t i = 0; i < loop.size() && fan_ok; ++i)
      fan_ok = !is_degenerate_triangle(c, m.vertices[loop[i]],
                                       m.vertices[loop[(i + 1) % loop.size()]]);
    if (!fan_ok) {
      ++r.holes_left;
      continue;
    }
    const std::uint32_t ci = m.add_vertex(c);
    for (std::size_t i = 0; i < loop.size(); ++i)
      m.add_face(ci, loop[i], loop[(i + 1) % loop.size()]);
    ++r.holes_filled;
  }
}

/// Generalized winding number of closed surface `faces` around `q`.
inline double winding_number(const IndexedMesh& m, const std::vector<std::uint32_t>& faces,
                             const Vec3& q) {
  double total = 0;
  for (auto f : faces) {
    const Vec3 a = m.vertices[m.faces[f][0]] - q, b = m.vertices[m.faces[f][1]] - q,
               c = m.vertices[m.faces[f][2]] - q;
    const double la = norm(a), lb = norm(b), lc = norm(c);
    total += 2 * std::atan2(triple(a, b, c),
                            la * lb * lc + dot(a, b) * lc + dot(a, c) * lb + dot(b, c) * la);
  }
  return total / (4 * kPi);
}

/**
 * Reverses closed, consistently oriented components with negative volume,
 * except those lying inside another closed component, which are kept as
 * cavities. "Inside" means the other component's winding number is nonzero
 * at the component's first face centroid and at its extreme vertices along
 * each axis.
 */
inline void orient_shells(IndexedMesh& m, RepairResult& r) {
  const EdgeTable edges(m);
  const auto fe = face_edge_indices(m, edges);
  UnionFind uf(m.faces.size());
  for (const EdgeUse& u : edges.uses)
    if (u.count >= 2) uf.unite(u.face[0], u.face[1]);
  // Non-manifold edges only record two faces; link the rest through vertices.
  {
    std::vector<std::int64_t> owner(m.vertices.size(), -1);
    for (std::uint32_t f = 0; f < m.faces.size(); ++f)
      for (auto v : m.faces[f]) {
        if (owner[v] >= 0) uf.unite(std::uint32_t(owner[v]), f);
        else owner[v] = f;
      }
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();
  struct Shell {
    std::vector<std::uint32_t> faces;
    bool closed = true;
    double volume = 0;
    Box box{{kInf, kInf, kInf}, {-kInf, -kInf, -kInf}};
  };
  std::unordered_map<std::uint32_t, std::size_t> id;
  std::vector<Shell> shells;
  for (std::uint32_t f = 0; f < m.faces.size(); ++f) {
    const auto root = uf.find(f);
    auto [it, inserted] = id.try_emplace(root, shells.size());
    if (inserted) shells.emplace_back();
    Shell& s = shells[it->second];
    s.faces.push_back(f);
    for (int k = 0; k < 3; ++k) {
      const EdgeUse& u = edges.uses[fe[f][k]];
      if (u.count != 2 || u.forward[0] == u.forward[1]) s.closed = false;
      const Vec3& p = m.vertices[m.faces[f][k]];
      s.box.lo = {std::min(s.box.lo.x, p.x), std::min(s.box.lo.y, p.y),
                  std::min(s.box.lo.z, p.z)};
      s.box.hi = {std::max(s.box.hi.x, p.x), std::max(s.box.hi.y, p.y),
                  std::max(s.box.hi.z, p.z)};
    }
    const auto [a, b, c] = m.corners(f);
    s.volume += triple(a, b, c) / 6.0;
  }

  std::vector<std::size_t> closed;
  for (std::size_t i = 0; i < shells.size(); ++i)
    if (shells[i].closed) closed.push_back(i);
  if (closed.empty()) return;

  // Bucket closed shells by the grid cells their boxes overlap so that each
  // query only meets plausible containers.
  Box all = shells[closed[0]].box;
  for (auto i : closed) all = hull(all, shells[i].box);
  const int n = std::clamp(int(std::cbrt(double(closed.size()))), 1, 32);
  const Vec3 ext = all.extent();
  auto cell_of = [&](double v, double lo, double e) {
    return e > 0 ? std::clamp(int((v - lo) / e * n), 0, n - 1) : 0;
  };
  auto cell = [&](const Vec3& p) {
    return std::array<int, 3>{cell_of(p.x, all.lo.x, ext.x), cell_of(p.y, all.lo.y, ext.y),
                              cell_of(p.z, all.lo.z, ext.z)};
  };
  std::vector<std::vector<std::size_t>> grid(std::size_t(n) * n * n);
  auto flat = [&](int i, int j, int k) { return (std::size_t(i) * n + j) * n + k; };
  for (auto s : closed) {
    const auto lo = cell(shells[s].box.lo), hi = cell(shells[s].box.hi);
    for (int i = lo[0]; i <= hi[0]; ++i)
      for (int j = lo[1]; j <= hi[1]; ++j)
        for (int k = lo[2]; k <= hi[2]; ++k) grid[flat(i, j, k)].push_back(s);
  }
  auto box_inside = [](const Box& in, const Box& out) {
    return out.contains(in.lo) && out.contains(in.hi);
  };

  std::vector<std::size_t> reverse;
  for (auto s : closed) {
    const Shell& a = shells[s];
    if (!(a.volume < 0)) continue;
    std::vector<Vec3> probes;
    {
      const auto [p0, p1, p2] = m.corners(a.faces[0]);
      probes.push_back((p0 + p1 + p2) / 3.0);
      for (int axis = 0; axis < 3; ++axis) {
        Vec3 lo = p0, hi = p0;
        for (auto f : a.faces)
          for (auto v : m.faces[f]) {
            const Vec3& q = m.vertices[v];
            if (q[axis] < lo[axis]) lo = q;
            if (q[axis] > hi[axis]) hi = q;
          }
        probes.push_back(lo);
        probes.push_back(hi);
      }
    }
    const auto c = cell(probes[0]);
    bool nested = false;
    for (auto t : grid[flat(c[0], c[1], c[2])]) {
      if (t == s || !box_inside(a.box, shells[t].box)) continue;
      nested = std::all_of(probes.begin(), probes.end(), [&](const Vec3& q) {
        return std::abs(winding_number(m, shells[t].faces, q)) > 0.5;
      });
      if (nested) break;
    }
    if (!nested) reverse.push_back(s);
  }
  for (auto s : reverse)
    for (auto f : shells[s].faces) std::swap(m.faces[f][1], m.faces[f][2]);
  r.reversed_components = reverse.size();
}

}  // namespace detail

/**
 * Repair pipeline:
 *   1. weld vertices at `weld_tol`;
 *   2. drop degenerate faces; among faces over one vertex set, drop
 *      opposite-winding pairs (walls between touching solids) and keep the
 *      first face of the remaining winding;
 *   3. orient each face-connected component by breadth-first flood from its
 *      lowest-index face (non-orientable components are left as they are);
 *   4. fill boundary loops of at most `max_hole_edges` edges with a fan from
 *      the loop centroid;
 *   5. reverse closed shells with negative volume unless they sit inside
 *      another closed shell (a cavity);
 *   6. drop unreferenced vertices.
 * Deterministic and idempotent.
 */
inline RepairResult repair(const IndexedMesh& mesh, const RepairOptions& o = {}) {
  check_finite(mesh);
  RepairResult r;
  auto w = weld(mesh, o.weld_tol);
  r.merged_vertices = w.merged;
  IndexedMesh m = std::move(w.mesh);

  {
    // Faces over the same vertex set: same winding is a repeat, opposite
    // winding is an internal wall between touching solids. Within a group
    // the windings cancel in pairs and the first face of the surplus
    // winding survives.
    struct Group {
      std::size_t first[2] = {0, 0};
      int count[2] = {0, 0};
    };
    std::map<std::array<std::uint32_t, 3>, Group> groups;
    std::vector<char> live(m.faces.size(), 1);
    std::vector<std::array<std::uint32_t, 3>> keys(m.faces.size());
    std::vector<int> parity(m.faces.size(), 0);
    for (std::size_t i = 0; i < m.faces.size(); ++i) {
      const Face& f = m.faces[i];
      if (detail::is_degenerate_face(m, f)) {
        live[i] = 0;
        ++r.dropped_degenerate;
        continue;
      }
      // Rotate the smallest index first; the winding is then the order of
      // the other two.
      const int lead = int(std::min_element(f.begin(), f.end()) - f.begin());
      const Face g{f[lead], f[(lead + 1) % 3], f[(lead + 2) % 3]};
      parity[i] = g[1] < g[2] ? 0 : 1;
      keys[i] = {g[0], std::min(g[1], g[2]), std::max(g[1], g[2])};
      Group& grp = groups[keys[i]];
      if (grp.count[parity[i]]++ == 0) grp.first[parity[i]] = i;
    }
    std::vector<Face> kept;
    kept.reserve(m.faces.size());
    for (std::size_t i = 0; i < m.faces.size(); ++i) {
      if (!live[i]) continue;
      const Group& grp = groups.at(keys[i]);
      const int surplus = grp.count[0] - grp.count[1];
      const bool keep = surplus != 0 && parity[i] == (surplus > 0 ? 0 : 1) &&
                        grp.first[parity[i]] == i;
      if (keep)
        kept.push_back(m.faces[i]);
      else
        ++r.dropped_duplicate;
    }
    m.faces = std::move(kept);
  }

  detail::orient_components(m, r);
  detail::fill_holes(m, o.max_hole_edges, r);
  detail::orient_shells(m, r);
  r.mesh = compact(m);

  if (r.merged_vertices) r.log.push_back("welded " + std::to_string(r.merged_vertices) + " vertices");
  if (r.dropped_degenerate)
    r.log.push_back("dropped " + std::to_string(r.dropped_degenerate) + " degenerate faces");
  if (r.dropped_duplicate)
    r.log.push_back("dropped " + std::to_string(r.dropped_duplicate) +
                    " duplicate or internal-wall faces");
  if (r.flipped_faces)
    r.log.push_back("flipped " + std::to_string(r.flipped_faces) + " faces for consistent orientation");
  if (r.non_orientable_components)
    r.log.push_back(std::to_string(r.non_orientable_components) +
                    " non-orientable component(s) left as-is");
  if (r.holes_filled) r.log.push_back("filled " + std::to_string(r.holes_filled) + " holes");
  if (r.holes_left || r.open_boundary_edges)
    r.log.push_back("left " + std::to_string(r.holes_left) + " holes and " +
                    std::to_string(r.open_boundary_edges) +
                    " branching boundary edges open");
  if (r.reversed_components)
    r.log.push_back("reversed " + std::to_string(r.reversed_components) + " inside-out shells");
  return r;
}

}  // namespace mathprint
