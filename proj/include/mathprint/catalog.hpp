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


// Named scene registry with typed, range-checked parameters.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mathprint/dynamics.hpp"
#include "mathprint/error.hpp"
#include "mathprint/implicit.hpp"
#include "mathprint/mesh.hpp"
#include "mathprint/tessellate.hpp"

#ifndef MATHPRINT_DATA_DIR
#define MATHPRINT_DATA_DIR "data"
#endif

namespace mathprint {

enum class ParamType { Real, Integer, Text };

struct ParamSpec {
  std::string name;
  ParamType type = ParamType::Real;
  std::string default_value;
  double min = -std::numeric_limits<double>::infinity();
  double max = std::numeric_limits<double>::infinity();
  std::string help;
};

struct SceneSpec {
  std::string name;
  std::string description;
  std::vector<ParamSpec> params;
  bool closed = true;  // repaired output must be watertight

  const ParamSpec* find(const std::string& key) const {
    for (const auto& p : params)
      if (p.name == key) return &p;
    return nullptr;
  }
};

/// Parameter values after defaults, parsing and range checks.
class SceneParams {
 public:
  double real(const std::string& k) const { return reals_.at(k); }
  int integer(const std::string& k) const { return int(reals_.at(k)); }
  const std::string& text(const std::string& k) const { return texts_.at(k); }

  void set_real(const std::string& k, double v) { reals_[k] = v; }
  void set_text(const std::string& k, std::string v) { texts_[k] = std::move(v); }

 private:
  std::map<std::string, double> reals_;
  std::map<std::string, std::string> texts_;
};

using ParamOverrides = std::map<std::string, std::string>;

namespace scenes {

// Geometry shared by the scene builders and their checks.

/// Unit vectors along the icosahedron vertices, scaled to length 2: the
/// centers of twelve unit spheres touching a unit sphere at the origin.
inline std::vector<Vec3> kissing_centers() {
  std::vector<Vec3> out;
  for (const Vec3& v : icosahedron_vertices()) out.push_back(v * (2.0 / norm(v)));
  return out;
}

/// Closed hemisphere of radius r over the disk z = 0: a quarter-circle
/// profile with `rings` arc steps revolved in `segments` steps.
inline IndexedMesh hemisphere(double r, int segments, int rings) {
  if (rings < 1) throw GenerationError("hemisphere needs at least one ring");
  Profile2 p;
  p.points.push_back({0, 0});
  for (int j = 0; j < rings; ++j) {
    const double th = 0.5 * kPi * j / rings;
    p.points.push_back({r * std::cos(th), r * std::sin(th)});
  }
  p.points.push_back({0, r});
  return revolve(p, segments);
}

/// Torus-knot space curve (2 + cos qt) (cos pt, sin pt) - sin(qt) e_z.
inline Vec3 torus_knot(int p, int q, double t) {
  const double w = 2 + std::cos(q * t);
  return {w * std::cos(p * t), w * std::sin(p * t), -std::sin(q * t)};
}

/// Component (k1, k2) of the degree-n Calabi-Yau cross-section with
/// z = u + i v; `alpha` mixes the two imaginary parts into the third
/// coordinate.
inline Vec3 calabi_yau_point(double u, double v, int k1, int k2, int n, double alpha) {
  const std::complex<double> z(u, v);
  auto root = [n](std::complex<double> w) {
    // Principal branch of w^(2/n), written out so w = 0 maps to 0.
    const double r = std::abs(w);
    return r == 0 ? std::complex<double>{} : std::polar(std::pow(r, 2.0 / n), std::arg(w) * 2.0 / n);
  };
  const std::complex<double> z1 = std::polar(1.0, kTwoPi * k1 / n) * root(std::cosh(z));
  const std::complex<double> z2 = std::polar(1.0, kTwoPi * k2 / n) * root(std::sinh(z));
  return {z1.real(), z2.real(), std::cos(alpha) * z1.imag() + std::sin(alpha) * z2.imag()};
}

/// Layers A0..A3 of the Escher staircase, bottom first.
inline std::vector<std::vector<std::vector<int>>> escher_layers() {
  return {{{1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0},
           {1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 0, 0}},
          {{0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1},
           {1, 0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 1}, {1, 1, 1, 1, 1, 1, 1}},
          {{0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1},
           {0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 1, 1, 1}},
          {{0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1},
           {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}}};
}

/// Attractor samples kept for one c of the bifurcation sweep: at most
/// `limit` of the distinct samples, evenly spaced in sorted order.
inline std::vector<double> thinned_attractor(double c, int limit) {
  const auto all = map_attractor(c).samples;
  if (int(all.size()) <= limit) return all;
  std::vector<double> out;
  for (int i = 0; i < limit; ++i)
    out.push_back(all[std::size_t(std::llround(double(i) * (all.size() - 1) / (limit - 1)))]);
  return out;
}

inline IndexedMesh welded(const IndexedMesh& m) { return compact(weld(m).mesh); }

// Builders.

inline IndexedMesh build_sphere(const SceneParams& p) {
  return uv_sphere({0, 0, 0}, p.real("r"), p.integer("n"), p.integer("n"));
}

inline IndexedMesh build_kissing12(const SceneParams& p) {
  const int n = p.integer("segments");
  std::vector<IndexedMesh> parts{uv_sphere({0, 0, 0}, 1, n, n / 2)};
  for (const Vec3& c : kissing_centers()) parts.push_back(uv_sphere(c, 1, n, n / 2));
  return merge(parts);
}

inline IndexedMesh build_moebius_thick(const SceneParams& p) {
  return thicken(moebius_patch(p.real("radius"), p.real("half_width"), p.integer("nu"),
                               p.integer("nv")),
                 p.real("thickness"));
}

inline IndexedMesh build_knot_sum_tube(const SceneParams& p) {
  const int n = p.integer("samples");
  const int p1 = p.integer("p1"), q1 = p.integer("q1"), p2 = p.integer("p2"),
            q2 = p.integer("q2");
  Polyline3 path{{}, true};
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    path.points.push_back(3.0 * torus_knot(p1, q1, t) - 4.0 * torus_knot(p2, q2, t));
  }
  return tube(path, p.real("radius"), p.integer("sides"));
}

inline IndexedMesh build_tricylinder(const SceneParams& p) {
  return marching_cubes(tricylinder_field(p.real("r")), p.integer("resolution")).mesh;
}

inline IndexedMesh build_archimedean_dome(const SceneParams& p) {
  return marching_cubes(archimedean_dome_field(p.real("r")), p.integer("resolution")).mesh;
}

inline IndexedMesh build_hemisphere_demo(const SceneParams& p) {
  const IndexedMesh half = hemisphere(1, p.integer("segments"), p.integer("rings"));
  const IndexedMesh rest =
      marching_cubes(cylinder_minus_cone_field(), p.integer("resolution")).mesh;
  return merge({half, apply_transform(rest, Transform::translate({p.real("spacing"), 0, 0}))});
}

inline IndexedMesh build_honeycomb(const SceneParams& p) {
  const double keep = 1 - p.real("gap");
  std::vector<IndexedMesh> cells = honeycomb_instances();
  for (auto& c : cells) {
    const Vec3 center = vertex_centroid(c);
    for (auto& v : c.vertices) v = center + (v - center) * keep;
  }
  return merge(cells);
}

inline IndexedMesh build_voxel_escher(const SceneParams& p) {
  return voxel_solid({escher_layers(), p.real("cell")});
}

/**
 * Cup-and-base assembly: a hemispherical bowl shell of thickness a with a
 * drain hole of angular radius b, a base whose cavity is a cylinder minus a
 * cone, and M connector posts of radius a/2 in the wall between them.
 */
inline IndexedMesh build_drinkable_proof(const SceneParams& p) {
  const int segments = p.integer("segments"), arc = p.integer("arc_steps");
  const int posts = p.integer("M"), sides = p.integer("post_sides");
  const double a = p.real("a"), b = p.real("b");
  const double b1 = std::sin(b), b2 = std::cos(b);
  const double b1a = std::asin(b1 / (1 + a)), b2a = (1 + a) * std::cos(b1a);

  // Base: bottom disk, outer wall, top ring, inner wall down to the cone
  // floor, cone to the apex at the origin.
  Profile2 base;
  base.points = {{0, -1}, {1 + a, -1}, {1 + a, 0}, {1, 0}, {1, -1 / (1 + a)}, {0, 0}};

  // Bowl shell about (0, 0, 2): drain wall, outer sphere up to the rim, rim
  // ring, inner sphere back down to the drain.
  Profile2 bowl;
  const Profile2::Point drain_top{b1, 2 - b2};
  bowl.points.push_back(drain_top);
  bowl.points.push_back({b1, 2 - b2a});
  for (int j = 1; j < arc; ++j) {
    const double s = (kPi - b1a) + (0.5 * kPi - (kPi - b1a)) * j / arc;
    bowl.points.push_back({(1 + a) * std::sin(s), 2 + (1 + a) * std::cos(s)});
  }
  bowl.points.push_back({1 + a, 2});
  bowl.points.push_back({1, 2});
  for (int j = 1; j < arc; ++j) {
    const double s = 0.5 * kPi + (0.5 * kPi - b) * j / arc;
    bowl.points.push_back({std::sin(s), 2 + std::cos(s)});
  }
  bowl.points.push_back(drain_top);

  std::vector<IndexedMesh> parts{welded(revolve(base, segments)), welded(revolve(bowl, segments))};
  for (int k = 1; k <= posts; ++k) {
    const double m = kTwoPi * k / posts, rr = 1 + a / 2;
    parts.push_back(cylinder({rr * std::cos(m), rr * std::sin(m), -1},
                             {rr * std::cos(m), rr * std::sin(m), 2}, a / 2, sides));
  }
  return merge(parts);
}

inline IndexedMesh build_lorenz_ribbon(const SceneParams& p) {
  const auto orbit =
      integrate(lorenz_field(), {0, 1, 0}, p.real("h"), p.integer("steps"));
  return tube(orbit.points, p.real("radius"), p.integer("sides"));
}

inline IndexedMesh build_abc_orbits(const SceneParams& p) {
  const FlowField f = abc_field(p.real("A"), p.real("B"), p.real("C"));
  const int orbits = p.integer("orbits");
  std::vector<IndexedMesh> parts;
  for (int k = 0; k < orbits; ++k) {
    const Vec3 start{kTwoPi * (k + 0.5) / orbits, 0.5 + 0.25 * k, 1.0};
    const auto orbit = integrate(f, start, p.real("h"), p.integer("steps"));
    for (const auto& piece : wrap_and_split(orbit.points))
      parts.push_back(tube(piece, p.real("radius"), p.integer("sides")));
  }
  return merge(parts);
}

inline IndexedMesh build_calabi_yau(const SceneParams& p) {
  const int n = p.integer("n"), res = p.integer("resolution");
  const double alpha = p.real("alpha"), t = p.real("thickness");
  std::vector<IndexedMesh> parts;
  for (int k1 = 0; k1 < n; ++k1)
    for (int k2 = 0; k2 < n; ++k2) {
      ParametricPatch patch{
          [=](double u, double v) { return calabi_yau_point(u, v, k1, k2, n, alpha); },
          {-1, 1}, {0, 0.5 * kPi}, 2 * res + 1, res + 1, Seam::open};
      parts.push_back(thicken(patch, t));
    }
  return merge(parts);
}

inline IndexedMesh build_feigenbaum3d(const SceneParams& p) {
  const double c0 = p.real("c_start"), c1 = p.real("c_stop"), dc = p.real("c_step");
  const double radius = p.real("radius");
  const int limit = p.integer("max_per_c");
  const int steps = int(std::floor((c1 - c0) / dc + 1e-9));
  // One low-resolution sphere, translated per sample.
  const IndexedMesh ball = uv_sphere({0, 0, 0}, radius, p.integer("sphere_nu"),
                                     p.integer("sphere_nv"));
  std::vector<IndexedMesh> parts;
  for (int i = 0; i <= steps; ++i) {
    const double c = c0 + dc * i;
    for (double x : thinned_attractor(c, limit))
      parts.push_back(apply_transform(
          ball, Transform::translate(
                    {std::cos(kTwoPi * x) * c, std::sin(kTwoPi * x) * c, 5 * c})));
  }
  return merge(parts);
}

inline IndexedMesh build_mandelbulb(const SceneParams& p) {
  MandelbulbOptions o;
  o.power = p.integer("power");
  o.max_iter = p.integer("max_iter");
  return marching_cubes(mandelbulb_field(o), p.integer("resolution")).mesh;
}

/**
 * Ball-and-stick model of a lattice walk: a ball at every distinct visited
 * point and a stick along every distinct unit step, so revisits do not
 * stack coincident geometry.
 */
inline IndexedMesh build_digit_walk(const SceneParams& p) {
  const int base = p.integer("base");
  std::vector<int> digits = read_digit_file(p.text("file"), base);
  const int count = p.integer("count");
  if (int(digits.size()) < count)
    throw InputError("digit file " + p.text("file") + " has " + std::to_string(digits.size()) +
                     " digits, " + std::to_string(count) + " requested");
  digits.resize(std::size_t(count));
  const double step = p.real("step"), r = p.real("radius");
  if (!(r < step / 2)) throw InputError("digit_walk radius must be below step / 2");
  const Polyline3 walk = digit_walk(digits, base, step);

  auto key = [step](const Vec3& v) {
    return std::array<long long, 3>{std::llround(v.x / step), std::llround(v.y / step),
                                    std::llround(v.z / step)};
  };
  std::map<std::array<long long, 3>, Vec3> balls;
  std::map<std::pair<std::array<long long, 3>, std::array<long long, 3>>, std::pair<Vec3, Vec3>>
      sticks;
  for (std::size_t i = 0; i < walk.points.size(); ++i) {
    const Vec3& q = walk.points[i];
    balls.try_emplace(key(q), q);
    if (i == 0) continue;
    const Vec3& prev = walk.points[i - 1];
    auto a = key(prev), b = key(q);
    if (b < a) std::swap(a, b);
    sticks.try_emplace({a, b}, std::pair{prev, q});
  }
  const int sides = p.integer("sides");
  std::vector<IndexedMesh> parts;
  for (const auto& [k, c] : balls) parts.push_back(uv_sphere(c, r, 2 * sides, sides));
  const double inset = 0.5 * r;
  for (const auto& [k, seg] : sticks) {
    const Vec3 d = normalized(seg.second - seg.first);
    parts.push_back(cylinder(seg.first + d * inset, seg.second - d * inset, 0.6 * r, sides));
  }
  return merge(parts);
}

}  // namespace scenes

namespace detail {

struct SceneEntry {
  SceneSpec spec;
  std::function<IndexedMesh(const SceneParams&)> build;
};

inline ParamSpec real_param(std::string name, std::string def, double lo, double hi,
                            std::string help) {
  return {std::move(name), ParamType::Real, std::move(def), lo, hi, std::move(help)};
}

inline ParamSpec int_param(std::string name, std::string def, double lo, double hi,
                           std::string help) {
  return {std::move(name), ParamType::Integer, std::move(def), lo, hi, std::move(help)};
}

inline const std::vector<SceneEntry>& registry() {
  static const std::vector<SceneEntry> entries = [] {
    using namespace scenes;
    const double kBig = 1e6;
    std::vector<SceneEntry> e = {
        {{"abc_orbits", "tubes along ABC-flow orbits wrapped onto the 2 pi torus",
          {real_param("A", "1", -10, 10, "flow coefficient A"),
           real_param("B", "1", -10, 10, "flow coefficient B"),
           real_param("C", "1", -10, 10, "flow coefficient C"),
           int_param("orbits", "3", 1, 64, "number of orbits"),
           int_param("steps", "3000", 1, 1e6, "RK4 steps per orbit"),
           real_param("h", "0.01", 1e-6, 1, "RK4 step size"),
           real_param("radius", "0.04", 1e-4, 1, "tube radius"),
           int_param("sides", "8", 3, 64, "tube sides")},
          true},
         build_abc_orbits},
        {{"archimedean_dome", "upper half of the two-cylinder intersection (marching cubes)",
          {real_param("r", "1", 1e-3, kBig, "cylinder radius"),
           int_param("resolution", "96", 8, 512, "grid nodes per axis")},
          true},
         build_archimedean_dome},
        {{"calabi_yau", "thickened patches of a Calabi-Yau cross-section",
          {int_param("n", "5", 2, 12, "degree; n*n patches"),
           real_param("alpha", "0.2", -kPi, kPi, "projection angle"),
           int_param("resolution", "10", 2, 200, "grid steps along v (2x along u)"),
           real_param("thickness", "0.02", 1e-4, 1, "shell thickness")},
          true},
         build_calabi_yau},
        {{"digit_walk", "ball-and-stick lattice walk driven by a digit file",
          {{"file", ParamType::Text, std::string(MATHPRINT_DATA_DIR) + "/pi_base6.txt", 0, 0,
            "digit file"},
           int_param("base", "6", 4, 6, "digit base, 4 (planar) or 6"),
           int_param("count", "1000", 1, 1e7, "digits used"),
           real_param("step", "1", 1e-3, kBig, "lattice step"),
           real_param("radius", "0.25", 1e-4, kBig, "ball radius; sticks use 0.6x"),
           int_param("sides", "8", 3, 64, "ball and stick resolution")},
          true},
         build_digit_walk},
        {{"drinkable_proof", "bowl draining into a cylinder-minus-cone cavity",
          {int_param("M", "6", 1, 64, "connector posts"),
           real_param("a", "0.1", 1e-3, 0.5, "wall thickness"),
           real_param("b", "0.06", 1e-3, 1, "drain angular radius"),
           int_param("segments", "64", 8, 1024, "revolution steps"),
           int_param("arc_steps", "24", 2, 512, "steps along each bowl arc"),
           int_param("post_sides", "16", 3, 128, "post cylinder sides")},
          true},
         build_drinkable_proof},
        {{"feigenbaum3d", "sine-map attractors stacked over the parameter sweep",
          {real_param("c_start", "0.55", 1e-3, 1, "first parameter"),
           real_param("c_stop", "1", 1e-3, 1, "last parameter"),
           real_param("c_step", "0.001", 1e-5, 1, "parameter step"),
           real_param("radius", "0.01", 1e-4, 1, "sphere radius"),
           int_param("max_per_c", "24", 2, 4000, "attractor samples kept per parameter"),
           int_param("sphere_nu", "6", 3, 64, "sphere longitudes"),
           int_param("sphere_nv", "3", 2, 64, "sphere latitude bands")},
          true},
         build_feigenbaum3d},
        {{"hemisphere_demo", "hemisphere beside the cylinder-minus-cone solid of equal volume",
          {int_param("segments", "64", 8, 1024, "hemisphere revolution steps"),
           int_param("rings", "32", 1, 1024, "hemisphere arc steps"),
           int_param("resolution", "96", 8, 512, "grid nodes per axis"),
           real_param("spacing", "3", 2.5, kBig, "x offset of the second solid")},
          true},
         build_hemisphere_demo},
        {{"honeycomb", "eight truncated octahedra from a space-filling tessellation",
          {real_param("gap", "0", 0, 0.5, "shrink each cell about its center by this fraction")},
          true},
         build_honeycomb},
        {{"kissing12", "twelve unit spheres touching a central unit sphere",
          {int_param("segments", "32", 6, 512, "sphere longitudes (half as many bands)")},
          true},
         build_kissing12},
        {{"knot_sum_tube", "tube along 3 u(t) - 4 v(t) for two torus knots u, v",
          {int_param("p1", "3", 1, 50, "first knot p"), int_param("q1", "5", 1, 50, "first knot q"),
           int_param("p2", "5", 1, 50, "second knot p"),
           int_param("q2", "11", 1, 50, "second knot q"),
           real_param("radius", "0.3", 1e-3, 10, "tube radius"),
           int_param("samples", "6283", 16, 1e6, "curve samples"),
           int_param("sides", "12", 3, 64, "tube sides")},
          true},
         build_knot_sum_tube},
        {{"lorenz_ribbon", "tube along an RK4 Lorenz orbit from (0, 1, 0)",
          {real_param("h", "0.01", 1e-6, 0.05, "RK4 step size"),
           int_param("steps", "1000", 1, 1e6, "RK4 steps"),
           real_param("radius", "0.25", 1e-3, 5, "tube radius"),
           int_param("sides", "10", 3, 64, "tube sides")},
          true},
         build_lorenz_ribbon},
        {{"mandelbulb", "escape-time set of the spherical power map (marching cubes)",
          {int_param("power", "8", 2, 16, "exponent"),
           int_param("max_iter", "32", 1, 1000, "iterations before a point counts as bounded"),
           int_param("resolution", "64", 8, 512, "grid nodes per axis")},
          true},
         build_mandelbulb},
        {{"moebius_thick", "half-twist band thickened into a closed shell",
          {real_param("radius", "1", 1e-3, kBig, "center circle radius"),
           real_param("half_width", "0.4", 1e-3, kBig, "half the band width"),
           real_param("thickness", "0.1", 1e-4, kBig, "shell thickness"),
           int_param("nu", "97", 4, 4096, "samples around the band"),
           int_param("nv", "9", 2, 1024, "samples across the band")},
          true},
         build_moebius_thick},
        {{"sphere", "latitude/longitude sphere",
          {real_param("r", "1", 1e-6, kBig, "radius"),
           int_param("n", "64", 3, 4096, "longitudes and latitude bands")},
          true},
         build_sphere},
        {{"tricylinder", "intersection of three orthogonal cylinders (marching cubes)",
          {real_param("r", "1", 1e-3, kBig, "cylinder radius"),
           int_param("resolution", "96", 8, 512, "grid nodes per axis")},
          true},
         build_tricylinder},
        {{"voxel_escher", "voxel model of the impossible staircase, four layers",
          {real_param("cell", "1", 1e-3, kBig, "voxel edge length")},
          true},
         build_voxel_escher},
    };
    std::sort(e.begin(), e.end(),
              [](const SceneEntry& x, const SceneEntry& y) { return x.spec.name < y.spec.name; });
    return e;
  }();
  return entries;
}

inline const SceneEntry& lookup(const std::string& name) {
  for (const auto& e : registry())
    if (e.spec.name == name) return e;
  std::string names;
  for (const auto& e : registry()) names += (names.empty() ? "" : ", ") + e.spec.name;
  throw LookupError("unknown scene '" + name + "'; valid scenes: " + names);
}

inline double parse_param_number(const SceneSpec& s, const ParamSpec& p, const std::string& text) {
  double v = 0;
  const char* end = text.data() + text.size();
  const auto r = std::from_chars(text.data(), end, v);
  if (text.empty() || r.ec != std::errc() || r.ptr != end || !std::isfinite(v))
    throw InputError("scene '" + s.name + "': parameter " + p.name + " = '" + text +
                     "' is not a number");
  if (p.type == ParamType::Integer && v != std::floor(v))
    throw InputError("scene '" + s.name + "': parameter " + p.name + " = '" + text +
                     "' is not an integer");
  if (v < p.min || v > p.max) {
    std::ostringstream os;
    os << "scene '" << s.name << "': parameter " << p.name << " = " << text
       << " is outside [" << p.min << ", " << p.max << "]";
    throw InputError(os.str());
  }
  return v;
}

}  // namespace detail

/// Every registered scene, in alphabetical order.
inline std::vector<SceneSpec> list_scenes() {
  std::vector<SceneSpec> out;
  for (const auto& e : detail::registry()) out.push_back(e.spec);
  return out;
}

/// Throws LookupError listing the valid names when `name` is unknown.
inline const SceneSpec& scene_spec(const std::string& name) { return detail::lookup(name).spec; }

/// Applies overrides to the defaults. Unknown keys and out-of-range or
/// unparsable values throw InputError.
inline SceneParams resolve_params(const SceneSpec& s, const ParamOverrides& overrides) {
  for (const auto& [k, v] : overrides)
    if (!s.find(k)) {
      std::string names;
      for (const auto& p : s.params) names += (names.empty() ? "" : ", ") + p.name;
      throw InputError("scene '" + s.name + "' has no parameter '" + k + "'; valid: " + names);
    }
  SceneParams out;
  for (const auto& p : s.params) {
    const auto it = overrides.find(p.name);
    const std::string& text = it == overrides.end() ? p.default_value : it->second;
    if (p.type == ParamType::Text)
      out.set_text(p.name, text);
    else
      out.set_real(p.name, detail::parse_param_number(s, p, text));
  }
  return out;
}

inline IndexedMesh build_scene(const std::string& name, const ParamOverrides& overrides = {}) {
  const auto& entry = detail::lookup(name);
  return entry.build(resolve_params(entry.spec, overrides));
}

}  // namespace mathprint
