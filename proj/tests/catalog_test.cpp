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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mathprint/catalog.hpp"
#include "mathprint/validate.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace mp = mathprint;

namespace {

std::vector<std::string> scene_names() {
  std::vector<std::string> out;
  for (const auto& s : mp::list_scenes()) out.push_back(s.name);
  return out;
}

std::string default_of(const std::string& scene, const std::string& param) {
  const auto* p = mp::scene_spec(scene).find(param);
  return p ? p->default_value : "<missing>";
}

}  // namespace

TEST(Catalog, RegistryIsAlphabeticalAndComplete) {
  const auto names = scene_names();
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_EQ(std::adjacent_find(names.begin(), names.end()), names.end());
  for (const char* want :
       {"kissing12", "moebius_thick", "knot_sum_tube", "tricylinder", "archimedean_dome",
        "hemisphere_demo", "honeycomb", "voxel_escher", "drinkable_proof", "lorenz_ribbon",
        "abc_orbits", "calabi_yau", "feigenbaum3d", "mandelbulb", "digit_walk", "sphere"})
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
}

TEST(Catalog, CalabiYauDefaults) {
  EXPECT_EQ(default_of("calabi_yau", "n"), "5");
  EXPECT_EQ(std::stod(default_of("calabi_yau", "alpha")), 0.2);
}

TEST(Catalog, FeigenbaumSweepDefaults) {
  EXPECT_EQ(std::stod(default_of("feigenbaum3d", "c_start")), 0.55);
  EXPECT_EQ(std::stod(default_of("feigenbaum3d", "c_stop")), 1.0);
  EXPECT_EQ(std::stod(default_of("feigenbaum3d", "c_step")), 0.001);
  EXPECT_EQ(std::stod(default_of("feigenbaum3d", "radius")), 0.01);
}

TEST(Catalog, OtherDocumentedDefaults) {
  EXPECT_EQ(default_of("drinkable_proof", "M"), "6");
  EXPECT_EQ(std::stod(default_of("knot_sum_tube", "radius")), 0.3);
  EXPECT_EQ(std::stod(default_of("lorenz_ribbon", "h")), 0.01);
  EXPECT_EQ(default_of("lorenz_ribbon", "steps"), "1000");
}

TEST(Catalog, DefaultsResolveWithinTheirRanges) {
  for (const auto& s : mp::list_scenes()) {
    EXPECT_FALSE(s.description.empty()) << s.name;
    EXPECT_NO_THROW(mp::resolve_params(s, {})) << s.name;
  }
}

TEST(Catalog, UnknownSceneListsValidNames) {
  try {
    mp::build_scene("no_such_scene");
    FAIL() << "expected LookupError";
  } catch (const mp::LookupError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("no_such_scene"), std::string::npos);
    for (const auto& n : scene_names()) EXPECT_NE(msg.find(n), std::string::npos) << n;
  }
}

TEST(Catalog, BadParametersAreRejected) {
  EXPECT_THROW(mp::build_scene("sphere", {{"radius", "2"}}), mp::InputError);
  EXPECT_THROW(mp::build_scene("sphere", {{"r", "abc"}}), mp::InputError);
  EXPECT_THROW(mp::build_scene("sphere", {{"r", "1.5x"}}), mp::InputError);
  EXPECT_THROW(mp::build_scene("sphere", {{"r", ""}}), mp::InputError);
  EXPECT_THROW(mp::build_scene("sphere", {{"r", "-1"}}), mp::InputError);
  EXPECT_THROW(mp::build_scene("sphere", {{"r", "nan"}}), mp::InputError);
  EXPECT_THROW(mp::build_scene("sphere", {{"n", "12.5"}}), mp::InputError);
  EXPECT_THROW(mp::build_scene("sphere", {{"n", "2"}}), mp::InputError);
  EXPECT_THROW(mp::build_scene("digit_walk", {{"file", "/nonexistent/digits.txt"}}),
               mp::InputError);
}

TEST(Catalog, OverridesTakeEffect) {
  const auto m = mp::build_scene("sphere", {{"r", "2"}, {"n", "8"}});
  for (const auto& v : m.vertices) EXPECT_NEAR(mp::norm(v), 2.0, 1e-12);
  EXPECT_EQ(m, mp::uv_sphere({0, 0, 0}, 2, 8, 8));
}

TEST(Catalog, KissingTwelveConfiguration) {
  const auto centers = mp::scenes::kissing_centers();
  ASSERT_EQ(centers.size(), 12u);
  double min_gap = 1e9;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    EXPECT_NEAR(mp::norm(centers[i]), 2.0, 1e-12);
    for (std::size_t j = i + 1; j < centers.size(); ++j)
      min_gap = std::min(min_gap, mp::norm(centers[i] - centers[j]));
  }
  // Icosahedron edge over circumradius is 1 / sin(2 pi / 5).
  const double want = 2.0 / std::sin(0.4 * M_PI);
  EXPECT_NEAR(want, 2.103, 5e-4);
  EXPECT_NEAR(min_gap, want, 1e-12);

  const auto m = mp::build_scene("kissing12");
  EXPECT_EQ(mp::analyze(m).components, 13u);
  // Every vertex lies on one of the thirteen unit spheres.
  std::vector<mp::Vec3> all = centers;
  all.push_back({0, 0, 0});
  for (const auto& v : m.vertices) {
    double best = 1e9;
    for (const auto& c : all) best = std::min(best, std::abs(mp::norm(v - c) - 1.0));
    ASSERT_LT(best, 1e-12);
  }
}

TEST(Catalog, CalabiYauHasOneShellPerPatch) {
  const auto r = mp::analyze(mp::build_scene("calabi_yau"));
  EXPECT_EQ(r.components, 25u);
  EXPECT_TRUE(r.watertight);
  EXPECT_EQ(mp::analyze(mp::build_scene("calabi_yau", {{"n", "3"}})).components, 9u);
}

TEST(Catalog, HoneycombVolumeIsEightCells) {
  // The scene uses unit-edge cells; the oracle cell has edge sqrt 2.
  const double cell = oracle::truncated_octahedron_volume() / (2 * std::sqrt(2.0));
  const auto m = mp::build_scene("honeycomb");
  EXPECT_NEAR(mp::signed_volume(m), 8 * cell, 1e-12 * 8 * cell);
  const auto gapped = mp::build_scene("honeycomb", {{"gap", "0.1"}});
  EXPECT_EQ(mp::analyze(gapped).components, 8u);
  EXPECT_NEAR(mp::signed_volume(gapped), 8 * cell * std::pow(0.9, 3), 1e-12 * 8 * cell);
}

TEST(Catalog, HoneycombRepairsToOneSolid) {
  const double cell = oracle::truncated_octahedron_volume() / (2 * std::sqrt(2.0));
  const auto r = mp::repair(mp::build_scene("honeycomb"));
  EXPECT_TRUE(testutil::closed_and_oriented(r.mesh));
  EXPECT_GT(r.dropped_duplicate, 0u);
  EXPECT_NEAR(mp::signed_volume(r.mesh), 8 * cell, 1e-12 * 8 * cell);
}

TEST(Catalog, VoxelEscherCountsCubes) {
  std::size_t cubes = 0;
  for (const auto& layer : mp::scenes::escher_layers())
    for (const auto& row : layer)
      for (int v : row) cubes += v;
  EXPECT_NEAR(mp::signed_volume(mp::build_scene("voxel_escher")), double(cubes), 1e-12);
  EXPECT_NEAR(mp::signed_volume(mp::build_scene("voxel_escher", {{"cell", "2"}})), 8.0 * cubes,
              1e-9);
}

TEST(Catalog, TorusKnotLiesOnItsTorus) {
  for (int i = 0; i < 100; ++i) {
    const double t = 0.0628 * i;
    const mp::Vec3 p = mp::scenes::torus_knot(3, 5, t);
    const double rho = std::hypot(p.x, p.y);
    EXPECT_NEAR(std::hypot(rho - 2, p.z), 1.0, 1e-12);
  }
}

// Each closed scene repairs to a watertight, consistently oriented solid
// with positive volume whose angle defects sum to its Euler characteristic.
class ClosedScene : public testing::TestWithParam<std::string> {};

TEST_P(ClosedScene, RepairsToAValidSolid) {
  const auto& spec = mp::scene_spec(GetParam());
  ASSERT_TRUE(spec.closed);
  const auto r = mp::repair(mp::build_scene(GetParam()));
  const auto rep = mp::analyze(r.mesh);
  EXPECT_TRUE(rep.watertight);
  EXPECT_TRUE(rep.orientation_consistent);
  EXPECT_EQ(rep.degenerate_faces, 0u);
  ASSERT_TRUE(rep.signed_volume && rep.total_curvature && rep.euler_characteristic);
  EXPECT_GT(*rep.signed_volume, 0);
  EXPECT_NEAR(*rep.total_curvature, double(*rep.euler_characteristic),
              1e-8 * std::max<double>(1, std::abs(*rep.euler_characteristic)));
  EXPECT_EQ(mp::repair(r.mesh).mesh, r.mesh) << "repair is not idempotent";
}

TEST_P(ClosedScene, BuildIsDeterministic) {
  EXPECT_EQ(mp::build_scene(GetParam()), mp::build_scene(GetParam()));
}

INSTANTIATE_TEST_SUITE_P(All, ClosedScene, testing::ValuesIn(scene_names()),
                         [](const auto& info) { return info.param; });
