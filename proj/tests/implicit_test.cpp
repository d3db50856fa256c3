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

#include "mathprint/implicit.hpp"
#include "mathprint/measures.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mathprint;
using testutil::closed_and_oriented;

namespace {

// Monte-Carlo oracle, 2e7 samples, seed 12345 (oracle::tricylinder_volume_mc).
constexpr double kTricylinderMc = 4.686595;
const double kTricylinderExact = 16 - 8 * std::sqrt(2.0);

double sphere_error(int n) {
  const auto r = marching_cubes(sphere_field({}, 1), GridSpec::cube(Box::cube(1.5), n));
  return std::abs(signed_volume(r.mesh) - 4 * kPi / 3);
}

}  // namespace

TEST(Oracle, TricylinderMonteCarloAgreesWithClosedForm) {
  EXPECT_NEAR(kTricylinderMc, kTricylinderExact, 0.002 * kTricylinderExact);
  EXPECT_NEAR(oracle::tricylinder_volume_mc(1.0, 1000000, 99), kTricylinderExact,
              0.01 * kTricylinderExact);
}

TEST(FieldIntersection, SingleFieldKeepsSign) {
  const ScalarField s = sphere_field({0.2, 0, 0}, 1);
  const ScalarField i = field_intersection({s});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int n = 0; n < 1000; ++n) {
    const Vec3 p{d(rng), d(rng), d(rng)};
    EXPECT_EQ(i.eval(p), s.eval(p));
  }
}

TEST(FieldIntersection, SelfIntersectionIdentical) {
  const ScalarField s = tricylinder_field(1);
  const ScalarField i = field_intersection({s, s});
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int n = 0; n < 1000; ++n) {
    const Vec3 p{d(rng), d(rng), d(rng)};
    EXPECT_EQ(i.eval(p), s.eval(p));
  }
}

TEST(FieldIntersection, DisjointSpheresGiveEmptyMesh) {
  const ScalarField f =
      field_intersection({sphere_field({0, 0, 0}, 1), sphere_field({3, 0, 0}, 1)});
  const auto r = marching_cubes(f, GridSpec::cube(Box::cube(4), 32));
  EXPECT_TRUE(r.mesh.empty());
  EXPECT_FALSE(r.touches_boundary);
}

TEST(FieldIntersection, EmptyListRejected) {
  EXPECT_THROW(field_intersection({}), InputError);
}

TEST(FieldIntersection, UnionAndDifference) {
  const ScalarField a = sphere_field({0, 0, 0}, 1), b = sphere_field({1, 0, 0}, 1);
  EXPECT_LT(field_union({a, b}).eval({1.5, 0, 0}), 0);
  EXPECT_GT(field_difference(a, b).eval({0.5, 0, 0}), 0);
  EXPECT_LT(field_difference(a, b).eval({-0.5, 0, 0}), 0);
}

TEST(MarchingCubes, SphereClosedAndOutward) {
  const auto r = marching_cubes(sphere_field({}, 1), GridSpec::cube(Box::cube(1.5), 64));
  EXPECT_FALSE(r.touches_boundary);
  EXPECT_TRUE(closed_and_oriented(r.mesh));
  EXPECT_EQ(euler_characteristic(r.mesh), 2);
  EXPECT_GT(signed_volume(r.mesh), 0);
  EXPECT_LT(std::abs(signed_volume(r.mesh) - 4 * kPi / 3) / (4 * kPi / 3), 0.02);
}

TEST(MarchingCubes, NormalsPointTowardPositiveField) {
  const ScalarField f = sphere_field({}, 1);
  const auto r = marching_cubes(f, GridSpec::cube(Box::cube(1.5), 24));
  for (std::size_t t = 0; t < r.mesh.num_faces(); ++t) {
    const auto [a, b, c] = r.mesh.corners(t);
    const Vec3 centroid = (a + b + c) / 3.0;
    EXPECT_GT(f.eval(centroid + face_normal(a, b, c) * 0.05),
              f.eval(centroid - face_normal(a, b, c) * 0.05));
  }
}

TEST(MarchingCubes, Tricylinder) {
  const auto r = marching_cubes(tricylinder_field(1), 96);
  EXPECT_FALSE(r.touches_boundary);
  EXPECT_TRUE(closed_and_oriented(r.mesh));
  EXPECT_LT(std::abs(signed_volume(r.mesh) - kTricylinderMc) / kTricylinderMc, 0.02);
}

TEST(MarchingCubes, ArchimedeanDomeTwoThirdsOfPrism) {
  const auto r = marching_cubes(archimedean_dome_field(1), 128);
  EXPECT_FALSE(r.touches_boundary);
  EXPECT_TRUE(closed_and_oriented(r.mesh));
  EXPECT_NEAR(signed_volume(r.mesh) / 4.0, 2.0 / 3.0, 0.02 * 2.0 / 3.0);
}

TEST(MarchingCubes, CylinderMinusCone) {
  const auto r = marching_cubes(cylinder_minus_cone_field(), 96);
  EXPECT_TRUE(closed_and_oriented(r.mesh));
  EXPECT_LT(std::abs(signed_volume(r.mesh) - 2 * kPi / 3) / (2 * kPi / 3), 0.01);
}

TEST(MarchingCubes, BoundaryContactFlagged) {
  const auto r = marching_cubes(sphere_field({}, 1), GridSpec::cube(Box::cube(0.8), 16));
  EXPECT_TRUE(r.touches_boundary);
}

TEST(MarchingCubes, RandomSignFieldsAreClosed) {
  // Any sign pattern with an outside boundary layer must give a closed,
  // consistently oriented surface.
  for (unsigned seed = 1; seed <= 5; ++seed) {
    std::mt19937 rng(seed);
    const int n = 9;
    std::vector<double> v(n * n * n);
    for (auto& x : v) x = std::uniform_real_distribution<double>(-1, 1)(rng);
    ScalarField f{[v, n](const Vec3& p) {
                    const int i = int(std::lround(p.x)), j = int(std::lround(p.y)),
                              k = int(std::lround(p.z));
                    if (i == 0 || j == 0 || k == 0 || i == n - 1 || j == n - 1 || k == n - 1)
                      return 1.0;
                    return v[(k * n + j) * n + i];
                  },
                  {{0, 0, 0}, {double(n - 1), double(n - 1), double(n - 1)}}};
    const auto r = marching_cubes(f, n);
    EXPECT_FALSE(r.touches_boundary);
    EXPECT_TRUE(closed_and_oriented(r.mesh)) << "seed " << seed;
  }
}

TEST(MarchingCubes, BadGridRejected) {
  EXPECT_THROW(marching_cubes(sphere_field({}, 1), GridSpec{Box::cube(2), {1, 4, 4}}),
               InputError);
  EXPECT_THROW(marching_cubes(sphere_field({}, 1), GridSpec{{{0, 0, 0}, {0, 1, 1}}, {4, 4, 4}}),
               InputError);
}

TEST(MarchingCubes, Deterministic) {
  const auto a = marching_cubes(tricylinder_field(1), 40);
  const auto b = marching_cubes(tricylinder_field(1), 40);
  EXPECT_EQ(a.mesh, b.mesh);
}

TEST(Mandelbulb, OrbitOracle) {
  const ScalarField f = mandelbulb_field();
  EXPECT_LT(f.eval({0, 0, 0}), 0);
  EXPECT_GT(f.eval({3, 0, 0}), 0);
  EXPECT_GT(f.eval({0, 0, 3}), 0);
  // Direct iteration: (1.1, 0, 0) leaves radius 2 at the second step,
  // (0, 0, 1) at the third; (0.5, 0, 0) and (0.3, 0.3, 0.3) stay bounded.
  EXPECT_GT(f.eval({1.1, 0, 0}), 0);
  EXPECT_GT(f.eval({0, 0, 1}), 0);
  EXPECT_LT(f.eval({0.5, 0, 0}), 0);
  EXPECT_LT(f.eval({0.3, 0.3, 0.3}), 0);
  EXPECT_TRUE(mandelbulb_bounded({1.1, 0, 0}, {8, 1, 2.0}));
  EXPECT_FALSE(mandelbulb_bounded({1.1, 0, 0}, {8, 2, 2.0}));
  EXPECT_THROW(mandelbulb_field({1, 32, 2}), InputError);
}

TEST(Mandelbulb, MidpointVertices) {
  const auto r = marching_cubes(mandelbulb_field(), 24);
  ASSERT_FALSE(r.mesh.empty());
  EXPECT_FALSE(r.touches_boundary);
  // +-1 indicator puts every vertex halfway along a lattice edge.
  const double h = 3.0 / 23;
  for (const Vec3& v : r.mesh.vertices) {
    int off = 0;
    for (int a = 0; a < 3; ++a) {
      const double s = (v[a] + 1.5) / h;
      if (std::abs(s - std::round(s)) > 1e-9) {
        EXPECT_NEAR(s - std::floor(s), 0.5, 1e-9);
        ++off;
      }
    }
    EXPECT_EQ(off, 1);
  }
  EXPECT_TRUE(closed_and_oriented(r.mesh));
}

// Doubling resolution strictly shrinks the volume error.
TEST(Property, RefinementConverges) {
  EXPECT_LT(sphere_error(32), sphere_error(16));
  EXPECT_LT(sphere_error(64), sphere_error(32));
  double prev = 1e300;
  for (int n : {24, 48, 96}) {
    const auto r = marching_cubes(tricylinder_field(1), n);
    const double err = std::abs(signed_volume(r.mesh) - kTricylinderMc);
    EXPECT_LT(err, prev) << n;
    prev = err;
  }
}
