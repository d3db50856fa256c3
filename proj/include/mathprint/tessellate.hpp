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
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mathprint/measures.hpp"
#include "mathprint/mesh.hpp"
#include "mathprint/vec.hpp"

namespace mathprint {

struct Interval {
  double lo = 0, hi = 1;
  constexpr double length() const { return hi - lo; }
};

/// How the edges of a parameter rectangle are identified.
enum class Seam {
  open,
  u_periodic,          // map(u_lo, v) == map(u_hi, v)
  v_periodic,          // map(u, v_lo) == map(u, v_hi)
  uv_periodic,         // both of the above (torus-like)
  u_periodic_flipped,  // map(u_lo, v) == map(u_hi, v_lo + v_hi - v)
};

/// A map (u, v) -> R^3 sampled on an nu x nv grid over u_range x v_range.
/// For u_periodic_flipped patches the map must also be defined on
/// [u_lo, u_lo + 2 * (u_hi - u_lo)]; thicken() samples that double cover.
struct ParametricPatch {
  std::function<Vec3(double, double)> map;
  Interval u_range, v_range;
  int nu = 2, nv = 2;
  Seam seam = Seam::open;
};

struct Polyline3 {
  std::vector<Vec3> points;
  bool closed = false;
};

/// A curve in the (r, z) half-plane, revolved about the z axis.
struct Profile2 {
  struct Point {
    double r = 0, z = 0;
  };
  std::vector<Point> points;
};

/// Bottom-up stack of 0/1 matrices. Layer k, row i, column j fills the cube
/// [i, i+1] x [j, j+1] x [k, k+1], scaled by `cell`.
struct VoxelLayers {
  std::vector<std::vector<std::vector<int>>> layers;
  double cell = 1.0;
};

namespace detail {

inline std::string uv_location(double u, double v) {
  std::ostringstream os;
  os.precision(17);
  os << "(u, v) = (" << u << ", " << v << ")";
  return os.str();
}

inline double grid_param(const Interval& r, int i, int n) {
  if (i == n - 1) return r.hi;
  return r.lo + r.length() * (double(i) / double(n - 1));
}

/// Sampled patch plus per-vertex bookkeeping used by thicken().
struct PatchGrid {
  IndexedMesh mesh;
  std::vector<std::pair<double, double>> uv;  // parameters per vertex
  std::vector<std::pair<int, int>> cell;      // grid (i, j) per vertex
};

inline void check_patch(const ParametricPatch& p) {
  if (!p.map) throw GenerationError("patch has no map");
  if (p.nu < 2 || p.nv < 2)
    throw GenerationError("patch resolution must be at least 2 x 2");
  for (const Interval& r : {p.u_range, p.v_range})
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.hi > r.lo))
      throw GenerationError("patch parameter range must be finite and non-empty");
}

/**
 * Samples the grid, identifies seam columns/rows by index, then welds
 * coincident vertices that lie on the parameter-domain boundary (poles,
 * seams declared open) and drops the triangles that collapse. The doubled
 * cover of a flipped patch has both rim rows on the same curve, so it is
 * sampled with `weld_boundary` off.
 */
inline PatchGrid sample_grid(const std::function<Vec3(double, double)>& map,
                             Interval ur, Interval vr, int nu, int nv,
                             Seam seam, bool weld_boundary = true) {
  const bool u_wrap = seam == Seam::u_periodic || seam == Seam::uv_periodic ||
                      seam == Seam::u_periodic_flipped;
  const bool u_flip = seam == Seam::u_periodic_flipped;
  const bool v_wrap = seam == Seam::v_periodic || seam == Seam::uv_periodic;

  auto grid_index = [nv](int i, int j) { return std::size_t(i) * nv + j; };
  // Canonical grid node for (i, j) after seam identification.
  auto canonical = [&](int i, int j) {
    if (v_wrap && j == nv - 1) j = 0;
    if (u_wrap && i == nu - 1) {
      i = 0;
      if (u_flip) j = nv - 1 - j;
    }
    return std::pair{i, j};
  };

  PatchGrid g;
  std::vector<std::uint32_t> id(std::size_t(nu) * nv,
                                std::numeric_limits<std::uint32_t>::max());
  for (int i = 0; i < nu; ++i) {
    const double u = grid_param(ur, i, nu);
    for (int j = 0; j < nv; ++j) {
      if (canonical(i, j) != std::pair{i, j}) continue;
      const double v = grid_param(vr, j, nv);
      const Vec3 p = map(u, v);
      if (!is_finite(p))
        throw GenerationError("patch map is not finite at " + uv_location(u, v));
      id[grid_index(i, j)] = g.mesh.add_vertex(p);
      g.uv.emplace_back(u, v);
      g.cell.emplace_back(i, j);
    }
  }
  auto vid = [&](int i, int j) {
    auto [ci, cj] = canonical(i, j);
    return id[grid_index(ci, cj)];
  };
  for (int i = 0; i + 1 < nu; ++i)
    for (int j = 0; j + 1 < nv; ++j) {
      const auto a = vid(i, j), b = vid(i + 1, j), c = vid(i + 1, j + 1),
                 d = vid(i, j + 1);
      g.mesh.add_face(a, b, c);
      g.mesh.add_face(a, c, d);
    }

  // Weld boundary vertices by coordinate.
  std::vector<std::uint32_t> remap(g.mesh.vertices.size());
  std::unordered_map<QuantKey, std::uint32_t, QuantKeyHash> seen;
  for (std::size_t k = 0; k < g.mesh.vertices.size(); ++k) {
    remap[k] = static_cast<std::uint32_t>(k);
    const auto [i, j] = g.cell[k];
    if (!weld_boundary) continue;
    if (i != 0 && i != nu - 1 && j != 0 && j != nv - 1) continue;
    auto [it, inserted] = seen.try_emplace(
        quant_key(g.mesh.vertices[k], kDefaultWeldTolerance),
        static_cast<std::uint32_t>(k));
    remap[k] = it->second;
  }
  std::vector<Face> faces;
  faces.reserve(g.mesh.faces.size());
  for (Face f : g.mesh.faces) {
    for (auto& i : f) i = remap[i];
    if (!has_repeated_index(f)) faces.push_back(f);
  }
  g.mesh.faces = std::move(faces);

  // Compact, carrying the bookkeeping along.
  std::vector<std::uint32_t> keep(g.mesh.vertices.size(),
                                  std::numeric_limits<std::uint32_t>::max());
  for (const Face& f : g.mesh.faces)
    for (auto i : f) keep[i] = 0;
  PatchGrid out;
  for (std::size_t k = 0; k < keep.size(); ++k)
    if (keep[k] == 0) {
      keep[k] = static_cast<std::uint32_t>(out.mesh.vertices.size());
      out.mesh.vertices.push_back(g.mesh.vertices[k]);
      out.uv.push_back(g.uv[k]);
      out.cell.push_back(g.cell[k]);
    }
  for (const Face& f : g.mesh.faces)
    out.mesh.faces.push_back({keep[f[0]], keep[f[1]], keep[f[2]]});
  return out;
}

/// Angle-weighted vertex normals. Returns false in `ok` for vertices whose
/// weighted sum vanishes.
inline std::vector<Vec3> vertex_normals(const IndexedMesh& mesh,
                                        std::vector<char>& ok) {
  std::vector<Vec3> n(mesh.vertices.size());
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto [a, b, c] = mesh.corners(f);
    const Vec3 fn = face_normal(a, b, c);
    const Face& t = mesh.faces[f];
    n[t[0]] += fn * corner_angle(a, b, c);
    n[t[1]] += fn * corner_angle(b, c, a);
    n[t[2]] += fn * corner_angle(c, a, b);
  }
  ok.assign(n.size(), 1);
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double len = norm(n[i]);
    if (!(len > 1e-12)) {
      ok[i] = 0;
    } else {
      n[i] = n[i] / len;
    }
  }
  return n;
}

}  // namespace detail

/**
 * Samples a patch on its (nu x nv) grid in row-major order (u outer, v
 * inner) and triangulates each grid cell into two triangles oriented along
 * du x dv. Periodic seams are identified by index per `p.seam`; coincident
 * boundary vertices (poles, seams of maps declared open) are welded and the
 * triangles that collapse are culled.
 */
inline IndexedMesh sample_patch(const ParametricPatch& p) {
  detail::check_patch(p);
  return detail::sample_grid(p.map, p.u_range, p.v_range, p.nu, p.nv, p.seam)
      .mesh;
}

/**
 * Offsets a patch by +-thickness/2 along angle-weighted vertex normals and
 * closes the rim with walls, producing a closed shell.
 *
 * Flipped (Moebius-type) patches are sampled over the doubled u period,
 * which is an orientable annulus; its single offset sheet covers both sides
 * of the band and one rim wall joins the two boundary loops.
 */
inline IndexedMesh thicken(const ParametricPatch& p, double thickness) {
  detail::check_patch(p);
  if (!(thickness > 0) || !std::isfinite(thickness))
    throw GenerationError("thickness must be positive");
  const bool flipped_seam = p.seam == Seam::u_periodic_flipped;
  detail::PatchGrid g =
      flipped_seam
          ? detail::sample_grid(p.map,
                                {p.u_range.lo, p.u_range.lo + 2 * p.u_range.length()},
                                p.v_range, 2 * (p.nu - 1) + 1, p.nv,
                                Seam::u_periodic, /*weld_boundary=*/false)
          : detail::sample_grid(p.map, p.u_range, p.v_range, p.nu, p.nv, p.seam);
  const IndexedMesh& base = g.mesh;
  if (base.faces.empty()) throw GenerationError("patch has no area to thicken");

  std::vector<char> ok;
  const std::vector<Vec3> normals = detail::vertex_normals(base, ok);
  for (std::size_t i = 0; i < ok.size(); ++i)
    if (!ok[i])
      throw GenerationError("thicken: vanishing normal at " +
                            detail::uv_location(g.uv[i].first, g.uv[i].second));

  const double h = 0.5 * thickness;
  const auto n = static_cast<std::uint32_t>(base.vertices.size());
  IndexedMesh out;
  out.vertices.reserve(flipped_seam ? n : 2 * n);
  for (std::uint32_t i = 0; i < n; ++i)
    out.vertices.push_back(base.vertices[i] + normals[i] * h);
  out.faces = base.faces;
  if (!flipped_seam) {
    for (std::uint32_t i = 0; i < n; ++i)
      out.vertices.push_back(base.vertices[i] - normals[i] * h);
    for (const Face& f : base.faces) out.add_face(f[0] + n, f[2] + n, f[1] + n);
  }

  // Partner of a rim vertex on the opposite side of the shell.
  std::vector<std::uint32_t> partner(n, std::numeric_limits<std::uint32_t>::max());
  if (flipped_seam) {
    const int half = p.nu - 1;  // grid columns per original period
    std::map<std::pair<int, int>, std::uint32_t> by_cell;
    for (std::uint32_t i = 0; i < n; ++i) by_cell[g.cell[i]] = i;
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto [ci, cj] = g.cell[i];
      if (cj != 0) continue;
      auto it = by_cell.find({(ci + half) % (2 * half), p.nv - 1});
      if (it == by_cell.end())
        throw GenerationError("thicken: flipped seam has no matching rim vertex");
      partner[i] = it->second;
    }
  } else {
    for (std::uint32_t i = 0; i < n; ++i) partner[i] = i + n;
  }

  const detail::EdgeTable edges(base);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const detail::EdgeUse& use = edges.uses[e];
    if (use.count > 2)
      throw GenerationError("thicken: sampled patch is not a manifold surface");
    if (use.count != 1) continue;
    // Direction of the rim edge inside its face.
    std::uint32_t a = detail::EdgeTable::lo(edges.keys[e]);
    std::uint32_t b = detail::EdgeTable::hi(edges.keys[e]);
    if (!use.forward[0]) std::swap(a, b);
    if (flipped_seam && (g.cell[a].second != 0 || g.cell[b].second != 0))
      continue;
    const auto pa = partner[a], pb = partner[b];
    if (pa == std::numeric_limits<std::uint32_t>::max() ||
        pb == std::numeric_limits<std::uint32_t>::max())
      throw GenerationError("thicken: rim vertex without partner");
    out.add_face(b, a, pa);
    out.add_face(b, pa, pb);
  }
  return out;
}

namespace detail {

inline Vec3 any_perpendicular(const Vec3& t) {
  // Project the coordinate axis least aligned with t.
  const double ax = std::abs(t.x), ay = std::abs(t.y), az = std::abs(t.z);
  Vec3 e{0, 0, 1};
  if (ax <= ay && ax <= az)
    e = {1, 0, 0};
  else if (ay <= az)
    e = {0, 1, 0};
  return normalized(e - t * dot(e, t));
}

/// Rotates v about unit axis k by angle (Rodrigues).
inline Vec3 rotate_about(const Vec3& v, const Vec3& k, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return v * c + cross(k, v) * s + k * (dot(k, v) * (1 - c));
}

}  // namespace detail

/**
 * Sweeps a regular `sides`-gon of circumradius `radius` along `path` using
 * rotation-minimizing frames (double reflection). Closed paths distribute the
 * frame's holonomy along arc length and weld the last ring to the first;
 * open paths get flat end caps with one center vertex each. Vertex count is
 * points * sides (+2 for open paths). Self-intersection from a radius larger
 * than the local feature size is not detected.
 */
inline IndexedMesh tube(const Polyline3& path, double radius, int sides) {
  if (!(radius > 0) || !std::isfinite(radius))
    throw GenerationError("tube radius must be positive");
  if (sides < 3) throw GenerationError("tube needs at least 3 sides");
  std::vector<Vec3> pts = path.points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!is_finite(pts[i]))
      throw GenerationError("path point " + std::to_string(i) + " is not finite");
  if (path.closed && pts.size() > 1 &&
      distance(pts.front(), pts.back()) <= 1e-12)
    pts.pop_back();
  const std::size_t m = pts.size();
  if (m < 2 || (path.closed && m < 3))
    throw GenerationError("path error: too few points");
  const std::size_t segs = path.closed ? m : m - 1;
  for (std::size_t i = 0; i < segs; ++i)
    if (distance(pts[i], pts[(i + 1) % m]) <= 1e-12)
      throw GenerationError("path error: points " + std::to_string(i) + " and " +
                            std::to_string((i + 1) % m) + " coincide");

  std::vector<Vec3> tangent(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool has_prev = path.closed || i > 0;
    const bool has_next = path.closed || i + 1 < m;
    const Vec3 in = has_prev ? normalized(pts[i] - pts[(i + m - 1) % m]) : Vec3{};
    const Vec3 out = has_next ? normalized(pts[(i + 1) % m] - pts[i]) : Vec3{};
    Vec3 t = normalized(in + out);
    if (norm2(t) < 0.5) t = has_prev ? in : out;  // path reverses here
    tangent[i] = t;
  }

  std::vector<Vec3> normal(m);
  normal[0] = detail::any_perpendicular(tangent[0]);
  auto reflect_step = [&](std::size_t i, std::size_t j) {
    const Vec3 v1 = pts[j] - pts[i];
    const double c1 = dot(v1, v1);
    const Vec3 rl = normal[i] - v1 * (2.0 / c1 * dot(v1, normal[i]));
    const Vec3 tl = tangent[i] - v1 * (2.0 / c1 * dot(v1, tangent[i]));
    const Vec3 v2 = tangent[j] - tl;
    const double c2 = dot(v2, v2);
    Vec3 r = c2 > 1e-30 ? rl - v2 * (2.0 / c2 * dot(v2, rl)) : rl;
    // Re-orthonormalize against drift.
    return normalized(r - tangent[j] * dot(r, tangent[j]));
  };
  for (std::size_t i = 0; i + 1 < m; ++i) normal[i + 1] = reflect_step(i, i + 1);

  if (path.closed) {
    // Transport once more around the closing segment and spread the
    // mismatch angle over the loop.
    const Vec3 v1 = pts[0] - pts[m - 1];
    const double c1 = dot(v1, v1);
    const Vec3 rl = normal[m - 1] - v1 * (2.0 / c1 * dot(v1, normal[m - 1]));
    const Vec3 tl = tangent[m - 1] - v1 * (2.0 / c1 * dot(v1, tangent[m - 1]));
    const Vec3 v2 = tangent[0] - tl;
    const double c2 = dot(v2, v2);
    Vec3 back = c2 > 1e-30 ? rl - v2 * (2.0 / c2 * dot(v2, rl)) : rl;
    back = normalized(back - tangent[0] * dot(back, tangent[0]));
    const double mismatch = std::atan2(dot(cross(normal[0], back), tangent[0]),
                                       dot(normal[0], back));
    std::vector<double> arc(m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      arc[i + 1] = arc[i] + distance(pts[i], pts[(i + 1) % m]);
    for (std::size_t i = 1; i < m; ++i)
      normal[i] = detail::rotate_about(normal[i], tangent[i],
                                       -mismatch * arc[i] / arc[m]);
  }

  IndexedMesh out;
  out.vertices.reserve(m * sides + 2);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec3 b = cross(tangent[i], normal[i]);
    for (int k = 0; k < sides; ++k) {
      const double th = kTwoPi * (k + 0.5) / sides;
      out.vertices.push_back(pts[i] +
                             (normal[i] * std::cos(th) + b * std::sin(th)) * radius);
    }
  }
  auto ring = [sides](std::size_t i, int k) {
    return static_cast<std::uint32_t>(i * sides + (k % sides));
  };
  for (std::size_t i = 0; i < segs; ++i) {
    const std::size_t j = (i + 1) % m;
    for (int k = 0; k < sides; ++k) {
      out.add_face(ring(i, k), ring(i, k + 1), ring(j, k + 1));
      out.add_face(ring(i, k), ring(j, k + 1), ring(j, k));
    }
  }
  if (!path.closed) {
    const auto c0 = out.add_vertex(pts.front());
    const auto c1 = out.add_vertex(pts.back());
    for (int k = 0; k < sides; ++k) {
      out.add_face(c0, ring(0, k + 1), ring(0, k));
      out.add_face(c1, ring(m - 1, k), ring(m - 1, k + 1));
    }
  }
  return out;
}

/// Capped cylinder from `a` to `b`.
inline IndexedMesh cylinder(const Vec3& a, const Vec3& b, double radius,
                            int sides) {
  return tube(Polyline3{{a, b}, false}, radius, sides);
}

/**
 * Revolves a profile about the z axis in `segments` steps. Points with r = 0
 * become single axis vertices. Faces are oriented along dphi x ds, so a
 * profile that runs counterclockwise around the enclosed region of the
 * (r, z) half-plane (e.g. outward along the bottom, then up and back to the
 * axis) yields outward normals.
 */
inline IndexedMesh revolve(const Profile2& profile, int segments) {
  if (segments < 3) throw GenerationError("revolve needs at least 3 segments");
  const auto& pts = profile.points;
  if (pts.size() < 2) throw InputError("profile needs at least 2 points");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!std::isfinite(pts[i].r) || !std::isfinite(pts[i].z))
      throw InputError("profile point " + std::to_string(i) + " is not finite");
    if (pts[i].r < 0)
      throw InputError("profile error: point " + std::to_string(i) +
                       " has negative r");
    if (i > 0 && pts[i].r == pts[i - 1].r && pts[i].z == pts[i - 1].z)
      throw InputError("profile error: points " + std::to_string(i - 1) +
                       " and " + std::to_string(i) + " coincide");
  }
  IndexedMesh out;
  std::vector<std::uint32_t> first(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    first[i] = static_cast<std::uint32_t>(out.vertices.size());
    if (pts[i].r == 0) {
      out.add_vertex({0, 0, pts[i].z});
      continue;
    }
    for (int s = 0; s < segments; ++s) {
      const double phi = kTwoPi * s / segments;
      out.add_vertex({pts[i].r * std::cos(phi), pts[i].r * std::sin(phi), pts[i].z});
    }
  }
  auto at = [&](std::size_t i, int s) {
    return pts[i].r == 0 ? first[i]
                         : first[i] + static_cast<std::uint32_t>(s % segments);
  };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const bool axis0 = pts[i].r == 0, axis1 = pts[i + 1].r == 0;
    if (axis0 && axis1) continue;
    for (int s = 0; s < segments; ++s) {
      if (!axis0) out.add_face(at(i, s), at(i, s + 1), at(i + 1, s + 1));
      if (!axis1) out.add_face(at(i, s), at(i + 1, s + 1), at(i + 1, s));
    }
  }
  return out;
}

/**
 * Latitude/longitude sphere with `nu` longitudes (>= 3) and `nv` latitude
 * bands (>= 2); the poles are single vertices so there are no degenerate
 * triangles. nu * (nv - 1) + 2 vertices, 2 * nu * (nv - 1) faces.
 */
inline IndexedMesh uv_sphere(const Vec3& center, double r, int nu, int nv) {
  if (!(r > 0) || !std::isfinite(r)) throw GenerationError("sphere radius must be positive");
  if (nu < 3 || nv < 2) throw GenerationError("uv_sphere needs nu >= 3 and nv >= 2");
  IndexedMesh out;
  out.vertices.reserve(std::size_t(nu) * (nv - 1) + 2);
  const auto north = out.add_vertex(center + Vec3{0, 0, r});
  for (int k = 1; k < nv; ++k) {
    const double th = kPi * k / nv;
    for (int s = 0; s < nu; ++s) {
      const double phi = kTwoPi * s / nu;
      out.add_vertex(center + Vec3{r * std::sin(th) * std::cos(phi),
                                   r * std::sin(th) * std::sin(phi),
                                   r * std::cos(th)});
    }
  }
  const auto south = out.add_vertex(center - Vec3{0, 0, r});
  auto ring = [nu](int k, int s) {
    return static_cast<std::uint32_t>(1 + (k - 1) * nu + (s % nu));
  };
  for (int s = 0; s < nu; ++s) out.add_face(north, ring(1, s), ring(1, s + 1));
  for (int k = 1; k + 1 < nv; ++k)
    for (int s = 0; s < nu; ++s) {
      out.add_face(ring(k, s), ring(k + 1, s), ring(k + 1, s + 1));
      out.add_face(ring(k, s), ring(k + 1, s + 1), ring(k, s + 1));
    }
  for (int s = 0; s < nu; ++s)
    out.add_face(south, ring(nv - 1, s + 1), ring(nv - 1, s));
  return out;
}

/// Axis-aligned box with outward faces (8 vertices, 12 triangles).
inline IndexedMesh box(const Vec3& lo, const Vec3& hi) {
  IndexedMesh m;
  for (int i = 0; i < 8; ++i)
    m.add_vertex({(i & 1) ? hi.x : lo.x, (i & 2) ? hi.y : lo.y,
                  (i & 4) ? hi.z : lo.z});
  const std::uint32_t q[6][4] = {{0, 4, 6, 2}, {1, 3, 7, 5}, {0, 1, 5, 4},
                                 {2, 6, 7, 3}, {0, 2, 3, 1}, {4, 5, 7, 6}};
  for (const auto& f : q) {
    m.add_face(f[0], f[1], f[2]);
    m.add_face(f[0], f[2], f[3]);
  }
  return m;
}

inline IndexedMesh unit_cube() { return box({0, 0, 0}, {1, 1, 1}); }

inline constexpr double kGoldenRatio = std::numbers::phi;

/// The 12 cyclic permutations of (0, +-1, +-phi): an icosahedron with edge
/// length 2. Order: (0, n, m phi) for n, m in {-1, 1}, then the same four
/// rotated right, then rotated left.
inline std::vector<Vec3> icosahedron_vertices() {
  std::vector<Vec3> base;
  for (int n : {-1, 1})
    for (int m : {-1, 1}) base.push_back({0.0, double(n), m * kGoldenRatio});
  std::vector<Vec3> out = base;
  for (const Vec3& v : base) out.push_back({v.z, v.x, v.y});
  for (const Vec3& v : base) out.push_back({v.y, v.z, v.x});
  return out;
}

namespace detail {

/// Convex polyhedron from its vertices and outward face normals. Each face
/// collects the vertices on its supporting plane, sorts them by angle about
/// the normal and fan-triangulates.
inline IndexedMesh convex_from_planes(const std::vector<Vec3>& verts,
                                      const std::vector<Vec3>& normals) {
  IndexedMesh out;
  out.vertices = verts;
  for (const Vec3& n : normals) {
    double d = -std::numeric_limits<double>::infinity();
    for (const Vec3& v : verts) d = std::max(d, dot(n, v));
    std::vector<std::uint32_t> on;
    Vec3 c;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (std::abs(dot(n, verts[i]) - d) < 1e-9) {
        on.push_back(static_cast<std::uint32_t>(i));
        c += verts[i];
      }
    if (on.size() < 3) continue;
    c = c / double(on.size());
    const Vec3 e1 = any_perpendicular(normalized(n));
    const Vec3 e2 = cross(normalized(n), e1);
    std::sort(on.begin(), on.end(), [&](std::uint32_t a, std::uint32_t b) {
      const Vec3 pa = verts[a] - c, pb = verts[b] - c;
      return std::atan2(dot(pa, e2), dot(pa, e1)) <
             std::atan2(dot(pb, e2), dot(pb, e1));
    });
    for (std::size_t k = 1; k + 1 < on.size(); ++k)
      out.add_face(on[0], on[k], on[k + 1]);
  }
  return out;
}

}  // namespace detail

/// Regular icosahedron on icosahedron_vertices(), outward triangles.
inline IndexedMesh icosahedron() {
  const auto v = icosahedron_vertices();
  IndexedMesh out;
  out.vertices = v;
  for (std::uint32_t i = 0; i < v.size(); ++i)
    for (std::uint32_t j = i + 1; j < v.size(); ++j)
      for (std::uint32_t k = j + 1; k < v.size(); ++k) {
        auto edge2 = [](const Vec3& a, const Vec3& b) {
          return std::abs(distance(a, b) - 2.0) < 1e-9;
        };
        if (!edge2(v[i], v[j]) || !edge2(v[j], v[k]) || !edge2(v[i], v[k]))
          continue;
        const Vec3 c = (v[i] + v[j] + v[k]) / 3.0;
        if (dot(area_vector(v[i], v[j], v[k]), c) > 0)
          out.add_face(i, j, k);
        else
          out.add_face(i, k, j);
      }
  return out;
}

/// Truncated octahedron on the 24 permutations of (0, +-1, +-2): 6 squares
/// and 8 hexagons, fan-triangulated. Edge length sqrt(2), volume 32.
inline IndexedMesh truncated_octahedron() {
  std::vector<Vec3> verts;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms)
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1}) {
        // Coordinates 1 and 2 carry signs; 0 does not.
        double c[3];
        for (int axis = 0; axis < 3; ++axis) {
          const int val = p[axis];
          c[axis] = val == 0 ? 0.0 : (val == 1 ? s1 * 1.0 : s2 * 2.0);
        }
        verts.push_back({c[0], c[1], c[2]});
      }
  std::vector<Vec3> normals;
  for (int axis = 0; axis < 3; ++axis)
    for (int s : {-1, 1}) {
      Vec3 n;
      n[axis] = s;
      normals.push_back(n);
    }
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) normals.push_back({double(sx), double(sy), double(sz)});
  return detail::convex_from_planes(verts, normals);
}

/// Lattice offsets {k + l + 2m, k - l, 3m/2} for k, l in {-1, 1}, m in {0, 1}.
inline std::vector<Vec3> honeycomb_offsets() {
  std::vector<Vec3> out;
  for (int k : {-1, 1})
    for (int l : {-1, 1})
      for (int m : {0, 1}) out.push_back({double(k + l + 2 * m), double(k - l), 1.5 * m});
  return out;
}

/// The eight honeycomb cells: truncated_octahedron() scaled to unit edge
/// length, turned 45 degrees about z so the square faces of one layer meet
/// along the lattice diagonals, and translated by honeycomb_offsets().
inline std::vector<IndexedMesh> honeycomb_instances() {
  const IndexedMesh cell = truncated_octahedron();
  std::vector<IndexedMesh> out;
  for (const Vec3& t : honeycomb_offsets())
    out.push_back(apply_transform(
        cell, Transform{Mat3::rotation({0, 0, 1}, kPi / 4), t, 1 / std::sqrt(2.0)}));
  return out;
}

/// Merged (not welded) honeycomb cells.
inline IndexedMesh honeycomb() {
  const auto cells = honeycomb_instances();
  return merge(cells);
}

/**
 * One unit cube per filled cell; faces shared by two filled axis neighbours
 * are omitted. Corner vertices are shared through the integer lattice, so
 * the result is welded by construction. Ragged rows are padded with 0.
 */
inline IndexedMesh voxel_solid(const VoxelLayers& v) {
  if (!(v.cell > 0) || !std::isfinite(v.cell))
    throw InputError("voxel cell size must be positive");
  std::size_t rows = 0, cols = 0;
  for (std::size_t k = 0; k < v.layers.size(); ++k) {
    rows = std::max(rows, v.layers[k].size());
    for (std::size_t i = 0; i < v.layers[k].size(); ++i) {
      cols = std::max(cols, v.layers[k][i].size());
      for (std::size_t j = 0; j < v.layers[k][i].size(); ++j) {
        const int x = v.layers[k][i][j];
        if (x != 0 && x != 1)
          throw InputError("voxel layer " + std::to_string(k) + " entry (" +
                           std::to_string(i) + ", " + std::to_string(j) +
                           ") is " + std::to_string(x) + ", expected 0 or 1");
      }
    }
  }
  const long nk = long(v.layers.size()), ni = long(rows), nj = long(cols);
  auto filled = [&](long k, long i, long j) {
    if (k < 0 || i < 0 || j < 0 || k >= nk) return false;
    const auto& layer = v.layers[std::size_t(k)];
    if (std::size_t(i) >= layer.size()) return false;
    const auto& row = layer[std::size_t(i)];
    return std::size_t(j) < row.size() && row[std::size_t(j)] == 1;
  };

  IndexedMesh out;
  std::map<std::array<long, 3>, std::uint32_t> lattice;
  auto corner = [&](long i, long j, long k) {
    auto [it, inserted] = lattice.try_emplace(
        {i, j, k}, static_cast<std::uint32_t>(out.vertices.size()));
    if (inserted) out.add_vertex({i * v.cell, j * v.cell, k * v.cell});
    return it->second;
  };
  struct Side {
    int di, dj, dk;
    int c[4][3];
  };
  static constexpr Side kSides[6] = {
      {-1, 0, 0, {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, 0}}},
      {1, 0, 0, {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}},
      {0, -1, 0, {{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 0, 1}}},
      {0, 1, 0, {{0, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 1, 0}}},
      {0, 0, -1, {{0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}}},
      {0, 0, 1, {{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}}},
  };
  for (long k = 0; k < nk; ++k)
    for (long i = 0; i < ni; ++i)
      for (long j = 0; j < nj; ++j) {
        if (!filled(k, i, j)) continue;
        for (const Side& s : kSides) {
          if (filled(k + s.dk, i + s.di, j + s.dj)) continue;
          std::uint32_t q[4];
          for (int c = 0; c < 4; ++c)
            q[c] = corner(i + s.c[c][0], j + s.c[c][1], k + s.c[c][2]);
          out.add_face(q[0], q[1], q[2]);
          out.add_face(q[0], q[2], q[3]);
        }
      }
  return out;
}

// Standard patches.

/// Plane (u, v) -> origin + u * du + v * dv.
inline ParametricPatch plane_patch(Interval ur, Interval vr, int nu, int nv) {
  return {[](double u, double v) { return Vec3{u, v, 0}; }, ur, vr, nu, nv,
          Seam::open};
}

/// Sphere with u the polar angle in [0, pi] and v the azimuth (periodic).
/// Both poles collapse under sampling.
inline ParametricPatch sphere_patch(double r, int nu, int nv) {
  return {[r](double u, double v) {
            return Vec3{r * std::sin(u) * std::cos(v), r * std::sin(u) * std::sin(v),
                        r * std::cos(u)};
          },
          {0, kPi}, {0, kTwoPi}, nu, nv, Seam::v_periodic};
}

/// Torus of major radius R and tube radius r; outward orientation.
inline ParametricPatch torus_patch(double major, double minor, int nu, int nv) {
  return {[major, minor](double u, double v) {
            const double w = major + minor * std::cos(v);
            return Vec3{w * std::cos(u), w * std::sin(u), minor * std::sin(v)};
          },
          {0, kTwoPi}, {0, kTwoPi}, nu, nv, Seam::uv_periodic};
}

/// Standard half-twist band: center circle of radius R, width 2 * half_width.
/// The formula has period 4 pi in u, as the flipped seam requires.
inline ParametricPatch moebius_patch(double radius, double half_width, int nu,
                                     int nv) {
  return {[radius](double u, double v) {
            const double w = radius + v * std::cos(u / 2);
            return Vec3{w * std::cos(u), w * std::sin(u), v * std::sin(u / 2)};
          },
          {0, kTwoPi}, {-half_width, half_width}, nu, nv, Seam::u_periodic_flipped};
}

}  // namespace mathprint
