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
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "mathprint/detail/mc_tables.hpp"
#include "mathprint/mesh.hpp"
#include "mathprint/vec.hpp"

namespace mathprint {

/// f < 0 inside, f > 0 outside. `bounds` contains the zero set.
struct ScalarField {
  std::function<double(const Vec3&)> eval;
  Box bounds;
};

/// Sampling lattice: resolution counts nodes per axis (each >= 2).
struct GridSpec {
  Box bounds;
  std::array<int, 3> resolution{64, 64, 64};

  static GridSpec cube(const Box& b, int n) { return {b, {n, n, n}}; }
};

// CSG on fields.

inline ScalarField field_intersection(const std::vector<ScalarField>& fields) {
  if (fields.empty()) throw InputError("field_intersection needs at least one field");
  Box b = fields.front().bounds;
  for (const auto& f : fields) b = intersect(b, f.bounds);
  return {[fields](const Vec3& p) {
            double v = -std::numeric_limits<double>::infinity();
            for (const auto& f : fields) v = std::max(v, f.eval(p));
            return v;
          },
          b};
}

inline ScalarField field_union(const std::vector<ScalarField>& fields) {
  if (fields.empty()) throw InputError("field_union needs at least one field");
  Box b = fields.front().bounds;
  for (const auto& f : fields) b = hull(b, f.bounds);
  return {[fields](const Vec3& p) {
            double v = std::numeric_limits<double>::infinity();
            for (const auto& f : fields) v = std::min(v, f.eval(p));
            return v;
          },
          b};
}

/// a minus b.
inline ScalarField field_difference(const ScalarField& a, const ScalarField& b) {
  return {[a, b](const Vec3& p) { return std::max(a.eval(p), -b.eval(p)); },
          a.bounds};
}

// Field catalog.

inline ScalarField sphere_field(const Vec3& center, double r) {
  return {[center, r](const Vec3& p) { return distance(p, center) - r; },
          {center - Vec3{r, r, r}, center + Vec3{r, r, r}}};
}

/// Infinite cylinder of radius r about the coordinate axis `axis` (0, 1, 2)
/// through the origin; bounds are clipped to +-half_length along the axis.
inline ScalarField cylinder_field(int axis, double r, double half_length) {
  if (axis < 0 || axis > 2) throw InputError("cylinder axis must be 0, 1 or 2");
  Box b{{-r, -r, -r}, {r, r, r}};
  b.lo[axis] = -half_length;
  b.hi[axis] = half_length;
  return {[axis, r](const Vec3& p) {
            const double a = p[(axis + 1) % 3], c = p[(axis + 2) % 3];
            return std::sqrt(a * a + c * c) - r;
          },
          b};
}

/// Steinmetz solid of two cylinders about x and y.
inline ScalarField bicylinder_field(double r) {
  return field_intersection({cylinder_field(0, r, r), cylinder_field(1, r, r)});
}

/// Intersection of three orthogonal cylinders of radius r. The bounds are
/// padded by a quarter radius so the zero set is strictly interior.
inline ScalarField tricylinder_field(double r) {
  ScalarField f = field_intersection(
      {cylinder_field(0, r, r), cylinder_field(1, r, r), cylinder_field(2, r, r)});
  f.bounds = Box::cube(1.25 * r);
  return f;
}

/// Upper half of the bicylinder; its circumscribing prism
/// [-r, r]^2 x [0, r] has volume 4 r^3.
inline ScalarField archimedean_dome_field(double r) {
  const ScalarField bi = bicylinder_field(r);
  return {[bi](const Vec3& p) { return std::max(bi.eval(p), -p.z); },
          {{-1.25 * r, -1.25 * r, -0.2 * r}, {1.25 * r, 1.25 * r, 1.2 * r}}};
}

/// Unit cylinder 0 <= z <= 1, rho <= 1 with the cone rho < z removed.
inline ScalarField cylinder_minus_cone_field() {
  return {[](const Vec3& p) {
            const double rho = std::hypot(p.x, p.y);
            return std::max({rho - 1, -p.z, p.z - 1, p.z - rho});
          },
          {{-1.2, -1.2, -0.2}, {1.2, 1.2, 1.2}}};
}

struct MandelbulbOptions {
  int power = 8;
  int max_iter = 32;
  double escape_radius = 2.0;
};

/// Escape-time test for the orbit of 0 under x -> x^p + c with the
/// spherical power map.
inline bool mandelbulb_bounded(const Vec3& c, const MandelbulbOptions& o) {
  Vec3 x;
  for (int it = 0; it < o.max_iter; ++it) {
    const double r = norm(x);
    Vec3 xp;
    if (r > 0) {
      const double th = std::acos(std::clamp(x.z / r, -1.0, 1.0));
      const double ph = std::atan2(x.y, x.x);
      const double rp = std::pow(r, o.power);
      xp = {rp * std::sin(o.power * th) * std::cos(o.power * ph),
            rp * std::sin(o.power * th) * std::sin(o.power * ph),
            rp * std::cos(o.power * th)};
    }
    x = xp + c;
    if (norm(x) > o.escape_radius) return false;
  }
  return true;
}

/// -1 inside, +1 outside.
inline ScalarField mandelbulb_field(const MandelbulbOptions& o = {}) {
  if (o.power < 2) throw InputError("mandelbulb power must be at least 2");
  if (o.max_iter < 1) throw InputError("mandelbulb max_iter must be positive");
  return {[o](const Vec3& c) { return mandelbulb_bounded(c, o) ? -1.0 : 1.0; },
          Box::cube(1.5)};
}

struct ImplicitMesh {
  IndexedMesh mesh;
  bool touches_boundary = false;  // an inside node lies on the grid boundary
};

namespace detail {

/// Evaluates the field on every node, x fastest. Slices in z are farmed out
/// to threads; each node is written by exactly one thread.
inline std::vector<double> sample_nodes(const ScalarField& f, const GridSpec& g) {
  const int nx = g.resolution[0], ny = g.resolution[1], nz = g.resolution[2];
  std::vector<double> val(std::size_t(nx) * ny * nz);
  const Vec3 lo = g.bounds.lo, ext = g.bounds.extent();
  auto coord = [](double lo, double ext, int i, int n) {
    return i == n - 1 ? lo + ext : lo + ext * (double(i) / double(n - 1));
  };
  auto slab = [&](int z0, int z1) {
    for (int k = z0; k < z1; ++k)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
          val[(std::size_t(k) * ny + j) * nx + i] =
              f.eval({coord(lo.x, ext.x, i, nx), coord(lo.y, ext.y, j, ny),
                      coord(lo.z, ext.z, k, nz)});
  };
  const int threads =
      std::clamp(int(std::thread::hardware_concurrency()), 1, std::max(1, nz / 4));
  if (threads == 1) {
    slab(0, nz);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(slab, nz * t / threads, nz * (t + 1) / threads);
    for (auto& th : pool) th.join();
  }
  for (std::size_t n = 0; n < val.size(); ++n)
    if (!std::isfinite(val[n]))
      throw GenerationError("field is not finite at grid node " + std::to_string(n));
  return val;
}

}  // namespace detail

/**
 * Extracts the zero level set of `f` on the lattice `g` with the classic
 * 256-case table. One vertex is created per crossed lattice edge, linearly
 * interpolated (parameter clamped to [1e-6, 1 - 1e-6] so vertices never sit
 * on lattice nodes). Cells are visited in z, y, x order. Triangles face the
 * positive side of the field. Ambiguous cases follow the fixed table.
 */
inline ImplicitMesh marching_cubes(const ScalarField& f, const GridSpec& g) {
  if (!f.eval) throw InputError("field has no evaluator");
  const int nx = g.resolution[0], ny = g.resolution[1], nz = g.resolution[2];
  if (nx < 2 || ny < 2 || nz < 2)
    throw InputError("grid resolution must be at least 2 per axis");
  const Vec3 ext = g.bounds.extent();
  if (!(ext.x > 0 && ext.y > 0 && ext.z > 0) || !is_finite(g.bounds.lo) ||
      !is_finite(g.bounds.hi))
    throw InputError("grid bounds must have positive finite extent");
  if (std::size_t(nx) * ny * nz * 3 >= std::numeric_limits<std::uint32_t>::max())
    throw InputError("grid resolution too large");

  const std::vector<double> val = detail::sample_nodes(f, g);
  auto node = [&](int i, int j, int k) { return (std::size_t(k) * ny + j) * nx + i; };
  auto pos = [&](int i, int j, int k) {
    auto c = [](double lo, double e, int i, int n) {
      return i == n - 1 ? lo + e : lo + e * (double(i) / double(n - 1));
    };
    return Vec3{c(g.bounds.lo.x, ext.x, i, nx), c(g.bounds.lo.y, ext.y, j, ny),
                c(g.bounds.lo.z, ext.z, k, nz)};
  };

  ImplicitMesh out;
  for (int k = 0; k < nz && !out.touches_boundary; ++k)
    for (int j = 0; j < ny && !out.touches_boundary; ++j)
      for (int i = 0; i < nx; ++i) {
        const bool on_boundary = i == 0 || j == 0 || k == 0 || i == nx - 1 ||
                                 j == ny - 1 || k == nz - 1;
        if (on_boundary && val[node(i, j, k)] < 0) {
          out.touches_boundary = true;
          break;
        }
      }

  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> edge_vertex(val.size() * 3, kNone);
  IndexedMesh& m = out.mesh;

  for (int k = 0; k + 1 < nz; ++k)
    for (int j = 0; j + 1 < ny; ++j)
      for (int i = 0; i + 1 < nx; ++i) {
        int config = 0;
        double cv[8];
        for (int c = 0; c < 8; ++c) {
          const auto* o = detail::kCubeCorner[c];
          cv[c] = val[node(i + o[0], j + o[1], k + o[2])];
          if (cv[c] < 0) config |= 1 << c;
        }
        if (config == 0 || config == 255) continue;
        std::uint32_t ev[12];
        for (int e = 0; e < 12; ++e) ev[e] = kNone;
        auto vertex_on = [&](int e) {
          if (ev[e] != kNone) return ev[e];
          int a = detail::kCubeEdge[e][0], b = detail::kCubeEdge[e][1];
          const auto* oa = detail::kCubeCorner[a];
          const auto* ob = detail::kCubeCorner[b];
          // Orient the lattice edge from its lower node.
          int axis = 0;
          while (oa[axis] == ob[axis]) ++axis;
          if (oa[axis] > ob[axis]) std::swap(a, b);
          const auto* lo = detail::kCubeCorner[a];
          const auto* hi = detail::kCubeCorner[b];
          const std::size_t key = node(i + lo[0], j + lo[1], k + lo[2]) * 3 + axis;
          if (edge_vertex[key] == kNone) {
            const double fa = cv[a], fb = cv[b];
            const double t = std::clamp(fa / (fa - fb), 1e-6, 1 - 1e-6);
            const Vec3 pa = pos(i + lo[0], j + lo[1], k + lo[2]);
            const Vec3 pb = pos(i + hi[0], j + hi[1], k + hi[2]);
            edge_vertex[key] = m.add_vertex(pa + (pb - pa) * t);
          }
          return ev[e] = edge_vertex[key];
        };
        const auto* tri = detail::kTriTable[config];
        for (int t = 0; tri[t] != -1; t += 3) {
          // The table winds triangles toward the inside; swap to face out.
          const auto a = vertex_on(tri[t]), b = vertex_on(tri[t + 1]),
                     c = vertex_on(tri[t + 2]);
          m.add_face(a, c, b);
        }
      }
  return out;
}

/// Grid over the field's own bounds with n nodes per axis.
inline ImplicitMesh marching_cubes(const ScalarField& f, int n) {
  return marching_cubes(f, GridSpec::cube(f.bounds, n));
}

}  // namespace mathprint
