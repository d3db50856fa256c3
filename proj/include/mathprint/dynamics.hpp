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
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mathprint/tessellate.hpp"
#include "mathprint/vec.hpp"

namespace mathprint {

struct FlowField {
  std::string name;
  std::function<Vec3(const Vec3&)> eval;
  std::map<std::string, double> params = {};
};

inline FlowField lorenz_field(double sigma = 10, double rho = 28,
                              double beta = 8.0 / 3.0) {
  return {"lorenz",
          [=](const Vec3& p) {
            return Vec3{sigma * (p.y - p.x), -p.x * p.z + rho * p.x - p.y,
                        p.x * p.y - beta * p.z};
          },
          {{"sigma", sigma}, {"rho", rho}, {"beta", beta}}};
}

/// Arnold-Beltrami-Childress flow.
inline FlowField abc_field(double a = 1, double b = 1, double c = 1) {
  return {"abc",
          [=](const Vec3& p) {
            return Vec3{a * std::sin(p.z) + c * std::cos(p.y),
                        b * std::sin(p.x) + a * std::cos(p.z),
                        c * std::sin(p.y) + b * std::cos(p.x)};
          },
          {{"A", a}, {"B", b}, {"C", c}}};
}

/// One classical Runge-Kutta step:
/// u = h f(x), v = h f(x + u/2), w = h f(x + v/2), q = h f(x + w),
/// x + (u + 2v + 2w + q) / 6.
inline Vec3 rk4_step(const FlowField& f, const Vec3& x, double h) {
  if (!(h > 0) || !std::isfinite(h)) throw IntegrationError("step size must be positive");
  const Vec3 u = h * f.eval(x);
  const Vec3 v = h * f.eval(x + u / 2.0);
  const Vec3 w = h * f.eval(x + v / 2.0);
  const Vec3 q = h * f.eval(x + w);
  const Vec3 out = x + (u + 2.0 * v + 2.0 * w + q) / 6.0;
  if (!is_finite(u) || !is_finite(v) || !is_finite(w) || !is_finite(q) ||
      !is_finite(out))
    throw IntegrationError(f.name + ": non-finite state in rk4 step");
  return out;
}

struct OrbitSample {
  Polyline3 points;
  double h = 0;
  int n = 0;
};

/// n steps from x0; n + 1 points including x0.
inline OrbitSample integrate(const FlowField& f, const Vec3& x0, double h, int n) {
  if (n < 1) throw IntegrationError("step count must be at least 1");
  if (!is_finite(x0)) throw IntegrationError("initial state is not finite");
  OrbitSample s{{{x0}, false}, h, n};
  s.points.points.reserve(std::size_t(n) + 1);
  Vec3 x = x0;
  for (int i = 0; i < n; ++i) {
    try {
      x = rk4_step(f, x, h);
    } catch (const IntegrationError& e) {
      throw IntegrationError(std::string(e.what()) + " at step " + std::to_string(i));
    }
    s.points.points.push_back(x);
  }
  return s;
}

/// Coordinates reduced into [0, 2 pi).
inline Vec3 wrap_torus(const Vec3& p) {
  Vec3 out;
  for (int a = 0; a < 3; ++a) {
    double v = std::fmod(p[a], kTwoPi);
    if (v < 0) v += kTwoPi;
    if (v >= kTwoPi) v = 0;
    out[a] = v;
  }
  return out;
}

/// Wraps an orbit onto the 2 pi torus and splits it wherever consecutive
/// points land in different periodic cells. Pieces shorter than two points
/// are dropped.
inline std::vector<Polyline3> wrap_and_split(const Polyline3& orbit) {
  std::vector<Polyline3> out;
  Polyline3 cur;
  auto cell = [](const Vec3& p) {
    return std::array<double, 3>{std::floor(p.x / kTwoPi), std::floor(p.y / kTwoPi),
                                 std::floor(p.z / kTwoPi)};
  };
  for (std::size_t i = 0; i < orbit.points.size(); ++i) {
    if (i > 0 && cell(orbit.points[i]) != cell(orbit.points[i - 1])) {
      if (cur.points.size() >= 2) out.push_back(cur);
      cur.points.clear();
    }
    cur.points.push_back(wrap_torus(orbit.points[i]));
  }
  if (cur.points.size() >= 2) out.push_back(cur);
  return out;
}

// One-dimensional maps.

inline double sine_map(double c, double x) { return c * std::sin(kPi * x); }

inline constexpr double kAttractorDedupTolerance = 1e-7;

/// |f'| at or below this on the attractor counts as superstable.
inline constexpr double kSuperstableDerivative = 1e-12;

struct MapAttractor {
  double c = 0;
  std::vector<double> samples;  // sorted, pairwise further apart than 1e-7
  double lyapunov = 0;          // -infinity at a superstable orbit
};

/// Sorts and keeps values more than `tol` above the last kept one.
inline std::vector<double> dedup_sorted(std::vector<double> v, double tol) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v)
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  return out;
}

/**
 * Iterates x -> c sin(pi x) from 0.3, keeping the `keep` values after the
 * first `burn_in` iterates. The Lyapunov exponent is the mean of
 * log |c pi cos(pi x)| over the distinct kept values; an orbit through a
 * critical point (|f'| <= 1e-12 in floating point) reports -infinity.
 */
inline MapAttractor map_attractor(double c, int burn_in = 400, int keep = 3101) {
  if (!(c > 0 && c <= 1)) throw InputError("map parameter c must lie in (0, 1]");
  if (burn_in < 0 || keep < 1) throw InputError("burn_in must be >= 0 and keep >= 1");
  double x = 0.3;
  for (int i = 0; i < burn_in; ++i) x = sine_map(c, x);
  std::vector<double> kept;
  kept.reserve(std::size_t(keep));
  for (int i = 0; i < keep; ++i) {
    kept.push_back(x);
    x = sine_map(c, x);
  }
  MapAttractor a{c, dedup_sorted(std::move(kept), kAttractorDedupTolerance), 0};
  double sum = 0;
  for (double s : a.samples) {
    const double d = std::abs(c * kPi * std::cos(kPi * s));
    if (d <= kSuperstableDerivative) {
      a.lyapunov = -std::numeric_limits<double>::infinity();
      return a;
    }
    sum += std::log(d);
  }
  a.lyapunov = sum / double(a.samples.size());
  return a;
}

struct PeriodOptions {
  int burn_in = 50000;
  int max_period = 64;
  double tol = 1e-7;
  int run = 100;  // consecutive matches required
};

/// Smallest p <= max_period with |x_{i+p} - x_i| < tol for `run`
/// consecutive i after burn-in, or 0 if none.
inline int detect_period(double c, const PeriodOptions& o = {}) {
  double x = 0.3;
  for (int i = 0; i < o.burn_in; ++i) x = sine_map(c, x);
  std::vector<double> orbit(std::size_t(o.run + o.max_period));
  for (auto& v : orbit) {
    v = x;
    x = sine_map(c, x);
  }
  for (int p = 1; p <= o.max_period; ++p) {
    bool ok = true;
    for (int i = 0; i < o.run && ok; ++i) ok = std::abs(orbit[i + p] - orbit[i]) < o.tol;
    if (ok) return p;
  }
  return 0;
}

struct DoublingSearch {
  double start = 0.55;
  double stop = 1.0;
  double step = 0.0005;
  int count = 4;
  int bisection_steps = 40;
  PeriodOptions period;
};

/**
 * Parameters of the first `count` period doublings of the sine map. A scan
 * records where the detected period first becomes 2p; each transition is
 * then bisected on "orbit has period p".
 */
inline std::vector<double> find_period_doublings(const DoublingSearch& s = {}) {
  std::vector<double> out;
  int p = detect_period(s.start, s.period);
  if (p == 0) throw InputError("no periodic attractor at the scan start");
  double last_p = s.start;
  const int steps = int(std::floor((s.stop - s.start) / s.step + 0.5));
  for (int i = 1; i <= steps && int(out.size()) < s.count; ++i) {
    const double c = s.start + s.step * i;
    const int q = detect_period(c, s.period);
    if (q == p) {
      last_p = c;
    } else if (q == 2 * p) {
      double lo = last_p, hi = c;
      for (int b = 0; b < s.bisection_steps; ++b) {
        const double mid = 0.5 * (lo + hi);
        (detect_period(mid, s.period) == p ? lo : hi) = mid;
      }
      out.push_back(0.5 * (lo + hi));
      p = q;
      last_p = c;
    } else if (q != 0) {
      break;  // skipped a doubling; the scan step is too coarse here
    }
  }
  if (int(out.size()) < s.count)
    throw InputError("found only " + std::to_string(out.size()) + " period doublings");
  return out;
}

struct FeigenbaumEstimate {
  std::vector<double> ratios;  // (c_{k+1} - c_k) / (c_{k+2} - c_{k+1})
  double delta = 0;            // last ratio
};

inline FeigenbaumEstimate feigenbaum_delta(const std::vector<double>& c) {
  if (c.size() < 4) throw InputError("need at least 4 bifurcation parameters");
  for (std::size_t i = 1; i < c.size(); ++i)
    if (!(c[i] > c[i - 1]))
      throw InputError("bifurcation parameters must be strictly increasing");
  FeigenbaumEstimate e;
  for (std::size_t i = 0; i + 2 < c.size(); ++i)
    e.ratios.push_back((c[i + 1] - c[i]) / (c[i + 2] - c[i + 1]));
  e.delta = e.ratios.back();
  return e;
}

// Digit walks.

/// Unit steps: base 6 uses +x, -x, +y, -y, +z, -z; base 4 the first four.
inline Polyline3 digit_walk(const std::vector<int>& digits, int base, double step = 1.0) {
  if (base != 4 && base != 6) throw InputError("digit walk base must be 4 or 6");
  static constexpr Vec3 kDir[6] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                   {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
  Polyline3 out;
  out.points.reserve(digits.size() + 1);
  Vec3 p;
  out.points.push_back(p);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= base)
      throw InputError("digit " + std::to_string(digits[i]) + " at index " +
                       std::to_string(i) + " is out of range for base " +
                       std::to_string(base));
    p += kDir[digits[i]] * step;
    out.points.push_back(p);
  }
  return out;
}

/// Digits from text; whitespace is ignored, anything else must be a digit
/// below `base`.
inline std::vector<int> parse_digits(const std::string& text, int base) {
  std::vector<int> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch < '0' || ch >= '0' + base)
      throw InputError(std::string("invalid digit '") + ch + "' at offset " +
                       std::to_string(i) + " for base " + std::to_string(base));
    out.push_back(ch - '0');
  }
  return out;
}

inline std::vector<int> read_digit_file(const std::string& path, int base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open digit file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_digits(ss.str(), base);
}

}  // namespace mathprint
