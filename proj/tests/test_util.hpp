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
#include <vector>

#include "mathprint/mesh.hpp"
#include "oracles.hpp"

namespace testutil {

inline std::vector<oracle::P3> points(const mathprint::IndexedMesh& m) {
  std::vector<oracle::P3> out;
  for (const auto& v : m.vertices) out.push_back({v.x, v.y, v.z});
  return out;
}

inline bool closed_and_oriented(const mathprint::IndexedMesh& m) {
  return oracle::closed_and_oriented(points(m), m.faces);
}

inline std::size_t degenerate_faces(const mathprint::IndexedMesh& m) {
  std::size_t n = 0;
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    const auto [a, b, c] = m.corners(f);
    n += mathprint::is_degenerate_triangle(a, b, c) ? 1 : 0;
  }
  return n;
}

}  // namespace testutil
