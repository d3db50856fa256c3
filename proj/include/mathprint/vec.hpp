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
#include <numbers>

#include "mathprint/error.hpp"

namespace mathprint {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr double operator[](int i) const {
    return i == 0 ? x : (i == 1 ? y : z);
  }

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator/(const Vec3& a, double s) {
  return {a.x / s, a.y / s, a.z / s};
}

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
constexpr double norm2(const Vec3& a) { return dot(a, a); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// Unit vector along `a`; the zero vector maps to itself.
inline Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  return n > 0 ? a / n : a;
}

inline bool is_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// det(a, b, c) = a . (b x c)
constexpr double triple(const Vec3& a, const Vec3& b, const Vec3& c) {
  return dot(a, cross(b, c));
}

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

  static constexpr Mat3 identity() { return {}; }

  /// Right-handed rotation by `angle` radians about the unit vector `axis`.
  static Mat3 rotation(const Vec3& axis, double angle) {
    const Vec3 k = normalized(axis);
    const double c = std::cos(angle), s = std::sin(angle), t = 1 - c;
    Mat3 r;
    r.m = {{{t * k.x * k.x + c, t * k.x * k.y - s * k.z,
             t * k.x * k.z + s * k.y},
            {t * k.x * k.y + s * k.z, t * k.y * k.y + c,
             t * k.y * k.z - s * k.x},
            {t * k.x * k.z - s * k.y, t * k.y * k.z + s * k.x,
             t * k.z * k.z + c}}};
    return r;
  }

  constexpr Vec3 operator*(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }

  constexpr Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        r.m[i][j] = 0;
        for (int k = 0; k < 3; ++k) r.m[i][j] += m[i][k] * o.m[k][j];
      }
    return r;
  }

  constexpr Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  friend constexpr bool operator==(const Mat3&, const Mat3&) = default;
};

/// Similarity transform v -> scale * (rotation * v) + translation.
struct Transform {
  Mat3 rotation;
  Vec3 translation;
  double scale = 1.0;

  static constexpr double kOrthonormalTolerance = 1e-9;

  static Transform translate(const Vec3& t) { return {Mat3{}, t, 1.0}; }
  static Transform uniform_scale(double s) { return {Mat3{}, Vec3{}, s}; }
  static Transform rotate(const Vec3& axis, double angle) {
    return {Mat3::rotation(axis, angle), Vec3{}, 1.0};
  }

  /// Throws InvalidTransformError unless the rotation is orthonormal within
  /// 1e-9 (entrywise on R^T R - I) and the scale is positive and finite.
  void validate() const {
    if (!(scale > 0) || !std::isfinite(scale))
      throw InvalidTransformError("transform scale must be positive and finite");
    if (!is_finite(translation))
      throw InvalidTransformError("transform translation is not finite");
    const Mat3 g = rotation.transposed() * rotation;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double want = i == j ? 1.0 : 0.0;
        if (!(std::abs(g.m[i][j] - want) <= kOrthonormalTolerance))
          throw InvalidTransformError("transform rotation is not orthonormal");
      }
  }

  Vec3 apply(const Vec3& v) const {
    return (rotation * v) * scale + translation;
  }
};

/// Axis-aligned box.
struct Box {
  Vec3 lo, hi;

  constexpr bool contains(const Vec3& p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y &&
           p.z >= lo.z && p.z <= hi.z;
  }
  constexpr bool empty() const {
    return !(lo.x <= hi.x && lo.y <= hi.y && lo.z <= hi.z);
  }
  constexpr Vec3 extent() const { return hi - lo; }

  static constexpr Box cube(double half) {
    return {{-half, -half, -half}, {half, half, half}};
  }
};

inline Box intersect(const Box& a, const Box& b) {
  return {{std::max(a.lo.x, b.lo.x), std::max(a.lo.y, b.lo.y),
           std::max(a.lo.z, b.lo.z)},
          {std::min(a.hi.x, b.hi.x), std::min(a.hi.y, b.hi.y),
           std::min(a.hi.z, b.hi.z)}};
}

inline Box hull(const Box& a, const Box& b) {
  return {{std::min(a.lo.x, b.lo.x), std::min(a.lo.y, b.lo.y),
           std::min(a.lo.z, b.lo.z)},
          {std::max(a.hi.x, b.hi.x), std::max(a.hi.y, b.hi.y),
           std::max(a.hi.z, b.hi.z)}};
}

}  // namespace mathprint
