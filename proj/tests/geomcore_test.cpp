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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mathprint/measures.hpp"
#include "mathprint/tessellate.hpp"

using namespace mathprint;

namespace {

IndexedMesh cube() { return unit_cube(); }

Transform random_rigid(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1, 1);
  const Vec3 axis{d(rng), d(rng), d(rng) + 2.0};
  return {Mat3::rotation(axis, 3 * d(rng)), {5 * d(rng), 5 * d(rng), 5 * d(rng)}, 1.0};
}

}  // namespace

TEST(Merge, EmptyListGivesEmptyMesh) {
  const IndexedMesh m = merge(std::span<const IndexedMesh>{});
  EXPECT_EQ(m.num_vertices(), 0u);
  EXPECT_EQ(m.num_faces(), 0u);
}

TEST(Merge, SingleInputIsUnchanged) { EXPECT_EQ(merge({cube()}), cube()); }

TEST(Merge, CountsAddAndIndicesOffset) {
  const IndexedMesh m = merge({cube(), cube()});
  EXPECT_EQ(m.num_vertices(), 16u);
  EXPECT_EQ(m.num_faces(), 24u);
  for (std::size_t f = 0; f < 12; ++f)
    for (int k = 0; k < 3; ++k) EXPECT_EQ(m.faces[f + 12][k], m.faces[f][k] + 8);
}

TEST(Merge, BadIndexNamesTheInput) {
  IndexedMesh bad = cube();
  bad.faces[3][1] = 99;
  try {
    merge({cube(), bad});
    FAIL();
  } catch (const MalformedMeshError& e) {
    EXPECT_NE(std::string(e.what()).find("merge input 1"), std::string::npos);
  }
}

TEST(Transform, IdentityIsBitExact) {
  const IndexedMesh m = icosahedron();
  EXPECT_EQ(apply_transform(m, Transform{}), m);
}

TEST(Transform, ScaleTwoCubeHasVolumeEight) {
  EXPECT_DOUBLE_EQ(signed_volume(apply_transform(cube(), Transform::uniform_scale(2))), 8.0);
}

TEST(Transform, TranslationShiftsCentroid) {
  const Vec3 c0 = vertex_centroid(cube());
  const Vec3 c1 = vertex_centroid(apply_transform(cube(), Transform::translate({1, 0, 0})));
  EXPECT_NEAR(c1.x - c0.x, 1.0, 1e-15);
  EXPECT_NEAR(c1.y - c0.y, 0.0, 1e-15);
  EXPECT_NEAR(c1.z - c0.z, 0.0, 1e-15);
}

TEST(Transform, NonOrthonormalRotationRejected) {
  Transform t;
  t.rotation.m[0][1] = 1e-6;
  EXPECT_THROW(apply_transform(cube(), t), InvalidTransformError);
  Transform s;
  s.scale = 0;
  EXPECT_THROW(apply_transform(cube(), s), InvalidTransformError);
  s.scale = -1;
  EXPECT_THROW(apply_transform(cube(), s), InvalidTransformError);
}

TEST(SurfaceArea, UnitCubeIsSix) { EXPECT_DOUBLE_EQ(surface_area(cube()), 6.0); }

TEST(SurfaceArea, CollinearTriangleContributesZero) {
  IndexedMesh m;
  m.add_vertex({0, 0, 0});
  m.add_vertex({1, 1, 1});
  m.add_vertex({2, 2, 2});
  m.add_face(0, 1, 2);
  EXPECT_EQ(surface_area(m), 0.0);
}

TEST(SurfaceArea, NonFiniteVertexThrows) {
  IndexedMesh m = cube();
  m.vertices[2].y = std::nan("");
  EXPECT_THROW(surface_area(m), MalformedMeshError);
}

TEST(SurfaceArea, SphereWithinOnePercentBelow) {
  const double a = surface_area(uv_sphere({}, 1, 64, 64));
  EXPECT_LT(a, 4 * kPi);
  EXPECT_LT(std::abs(a - 4 * kPi) / (4 * kPi), 0.01);
}

TEST(SignedVolume, CubeAndFlippedCube) {
  EXPECT_DOUBLE_EQ(signed_volume(cube()), 1.0);
  EXPECT_DOUBLE_EQ(signed_volume(flipped(cube())), -1.0);
}

TEST(SignedVolume, SphereWithinOnePercent) {
  const double v = signed_volume(uv_sphere({}, 1, 64, 64));
  EXPECT_LT(std::abs(v - 4 * kPi / 3) / (4 * kPi / 3), 0.01);
}

TEST(Euler, Cube) { EXPECT_EQ(euler_characteristic(cube()), 2); }

TEST(Euler, ClosedTorusTube) {
  Polyline3 circle;
  circle.closed = true;
  for (int i = 0; i < 48; ++i)
    circle.points.push_back({2 * std::cos(kTwoPi * i / 48), 2 * std::sin(kTwoPi * i / 48), 0});
  EXPECT_EQ(euler_characteristic(tube(circle, 0.5, 12)), 0);
}

TEST(Euler, TwoDisjointCubesAdd) {
  const IndexedMesh two =
      merge({cube(), apply_transform(cube(), Transform::translate({3, 0, 0}))});
  EXPECT_EQ(euler_characteristic(weld(two).mesh), 4);
}

TEST(Euler, OpenMeshReportsEdge) {
  IndexedMesh m = cube();
  m.faces.pop_back();
  try {
    euler_characteristic(m);
    FAIL();
  } catch (const TopologyError& e) {
    EXPECT_NE(std::string(e.what()).find("shared by 1"), std::string::npos);
  }
}

TEST(Euler, WeldsSeamDuplicates) {
  // Every face gets its own three vertices; welding restores the cube.
  const IndexedMesh c = cube();
  IndexedMesh soup;
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    const auto [a, b, d] = c.corners(f);
    const auto i = soup.add_vertex(a);
    soup.add_vertex(b);
    soup.add_vertex(d);
    soup.add_face(i, i + 1, i + 2);
  }
  EXPECT_EQ(euler_characteristic(soup), 2);
}

TEST(Curvature, CubeCornersQuarterEach) {
  EXPECT_NEAR(total_curvature(cube()), 2.0, 1e-12);
  const auto k = vertex_curvatures(cube());
  for (double x : k) EXPECT_NEAR(x, 0.25, 1e-12);
}

TEST(Curvature, IcosahedronSixthEach) {
  // 12 * (2 pi - 5 pi / 3) / (2 pi) = 12 / 6 = 2.
  const auto k = vertex_curvatures(icosahedron());
  ASSERT_EQ(k.size(), 12u);
  for (double x : k) EXPECT_NEAR(x, 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(total_curvature(icosahedron()), 2.0, 1e-12);
}

TEST(Curvature, ClosedTorusTubeIsZero) {
  Polyline3 circle;
  circle.closed = true;
  for (int i = 0; i < 64; ++i)
    circle.points.push_back({3 * std::cos(kTwoPi * i / 64), 3 * std::sin(kTwoPi * i / 64), 0});
  EXPECT_NEAR(total_curvature(tube(circle, 1, 16)), 0.0, 1e-9);
}

TEST(Weld, FirstOccurrenceKeepsExactCoordinates) {
  IndexedMesh m;
  m.add_vertex({0.1, 0, 0});
  m.add_vertex({1, 0, 0});
  m.add_vertex({0.1 + 1e-12, 0, 0});
  m.add_vertex({0, 1, 0});
  m.add_face(0, 1, 3);
  m.add_face(2, 3, 1);
  const WeldResult w = weld(m);
  EXPECT_EQ(w.merged, 1u);
  ASSERT_EQ(w.mesh.num_vertices(), 3u);
  EXPECT_EQ(w.mesh.vertices[0], (Vec3{0.1, 0, 0}));
  EXPECT_EQ(w.mesh.faces[1], (Face{0, 2, 1}));
}

// Properties.

TEST(Property, RigidMotionPreservesMeasures) {
  std::mt19937_64 rng(7);
  for (const IndexedMesh& m : {cube(), icosahedron(), truncated_octahedron(),
                               uv_sphere({0.3, -0.2, 1}, 1.5, 24, 12)}) {
    const double a = surface_area(m), v = signed_volume(m);
    const long long chi = euler_characteristic(m);
    for (int trial = 0; trial < 5; ++trial) {
      const IndexedMesh t = apply_transform(m, random_rigid(rng));
      EXPECT_NEAR(surface_area(t), a, 1e-9 * a);
      EXPECT_NEAR(signed_volume(t), v, 1e-9 * std::abs(v));
      EXPECT_EQ(euler_characteristic(t), chi);
    }
  }
}

TEST(Property, UniformScaleLaws) {
  for (const IndexedMesh& m : {cube(), icosahedron(), uv_sphere({}, 1, 16, 8)}) {
    const double a = surface_area(m), v = signed_volume(m);
    for (double s : {0.5, 2.0, 3.0}) {
      const IndexedMesh t = apply_transform(m, Transform::uniform_scale(s));
      EXPECT_NEAR(surface_area(t), s * s * a, 1e-12 * s * s * a);
      EXPECT_NEAR(signed_volume(t), s * s * s * v, 1e-12 * s * s * s * std::abs(v));
      EXPECT_EQ(euler_characteristic(t), euler_characteristic(m));
    }
  }
}

TEST(Property, GaussBonnetOnClosedMeshes) {
  for (const IndexedMesh& m : {cube(), icosahedron(), truncated_octahedron(),
                               uv_sphere({}, 1, 7, 5), uv_sphere({}, 2, 64, 64)})
    EXPECT_NEAR(total_curvature(m), double(euler_characteristic(m)), 1e-9);
}
