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
#include <fstream>
#include <random>

#include "mathprint/dynamics.hpp"
#include "oracles.hpp"

using namespace mathprint;

namespace {

FlowField linear_field(Vec3 diag) {
  return {"linear", [diag](const Vec3& p) {
            return Vec3{diag.x * p.x, diag.y * p.y, diag.z * p.z};
          }};
}

FlowField oscillator() {
  return {"oscillator", [](const Vec3& p) { return Vec3{p.y, -p.x, 0}; }};
}

double oscillator_error(double h) {
  const int n = int(std::lround(10 / h));
  const Vec3 end = integrate(oscillator(), {1, 0, 0}, h, n).points.points.back();
  return norm(end - Vec3{std::cos(10.0), -std::sin(10.0), 0});
}

double taylor4(double z) { return 1 + z + z * z / 2 + z * z * z / 6 + z * z * z * z / 24; }

// Bisection oracle (multiplier = -1) for the first four doublings.
const double kFlips[4] = {oracle::sine_flip_point(1, 0.70, 0.75),
                          oracle::sine_flip_point(2, 0.80, 0.85),
                          oracle::sine_flip_point(4, 0.85, 0.862),
                          oracle::sine_flip_point(8, 0.862, 0.866)};

}  // namespace

TEST(Rk4, ConstantFieldExact) {
  const FlowField f{"const", [](const Vec3&) { return Vec3{1, 0, 0}; }};
  EXPECT_EQ(rk4_step(f, {2, 3, 4}, 0.5), (Vec3{2.5, 3, 4}));
}

TEST(Rk4, DecayOneStep) {
  const Vec3 x = rk4_step(linear_field({-1, -1, -1}), {1, 1, 1}, 0.1);
  EXPECT_NEAR(x.x, 0.904837418, 1e-6);
  EXPECT_NEAR(x.x, taylor4(-0.1), 1e-15);
}

TEST(Rk4, BadStepAndNonFinite) {
  EXPECT_THROW(rk4_step(lorenz_field(), {0, 1, 0}, 0), IntegrationError);
  const FlowField blow{"blow", [](const Vec3& p) { return Vec3{1 / p.x, 0, 0}; }};
  EXPECT_THROW(rk4_step(blow, {0, 0, 0}, 0.1), IntegrationError);
  try {
    const FlowField grow{"grow", [](const Vec3& p) { return Vec3{p.x * p.x * 1e200, 0, 0}; }};
    integrate(grow, {1, 0, 0}, 0.1, 10);
    FAIL();
  } catch (const IntegrationError& e) {
    EXPECT_NE(std::string(e.what()).find("at step"), std::string::npos);
  }
}

TEST(Rk4, FourthOrderConvergence) {
  const double e1 = oscillator_error(0.1), e2 = oscillator_error(0.05),
               e3 = oscillator_error(0.025);
  EXPECT_GE(e1 / e2, 12);
  EXPECT_LE(e1 / e2, 20);
  EXPECT_GE(e2 / e3, 12);
  EXPECT_LE(e2 / e3, 20);
}

TEST(Integrate, CountsAndSingleStep) {
  const auto s = integrate(lorenz_field(), {0, 1, 0}, 0.01, 1);
  ASSERT_EQ(s.points.points.size(), 2u);
  EXPECT_EQ(s.points.points[1], rk4_step(lorenz_field(), {0, 1, 0}, 0.01));
  EXPECT_EQ(s.n, 1);
  EXPECT_THROW(integrate(lorenz_field(), {0, 1, 0}, 0.01, 0), IntegrationError);
}

TEST(Integrate, LorenzStaysBounded) {
  const auto s = integrate(lorenz_field(), {0, 1, 0}, 0.01, 1000);
  ASSERT_EQ(s.points.points.size(), 1001u);
  double worst = 0;
  for (const Vec3& p : s.points.points) worst = std::max(worst, norm(p));
  EXPECT_LT(worst, 60);
  // Reference run with a 100x finer step has the same bound.
  const auto fine = integrate(lorenz_field(), {0, 1, 0}, 0.0001, 100000);
  double fine_worst = 0;
  for (const Vec3& p : fine.points.points) fine_worst = std::max(fine_worst, norm(p));
  EXPECT_LT(fine_worst, 60);
  // Before chaos amplifies the difference, the two runs agree closely.
  EXPECT_LT(distance(s.points.points[100], fine.points.points[10000]), 1e-3);
}

TEST(Integrate, AbcOrbitWrapsOntoTorus) {
  const auto s = integrate(abc_field(), {0, 0, 0}, 0.05, 100);
  for (const Vec3& p : s.points.points) {
    ASSERT_TRUE(is_finite(p));
    const Vec3 w = wrap_torus(p);
    for (int a = 0; a < 3; ++a) {
      EXPECT_GE(w[a], 0);
      EXPECT_LT(w[a], kTwoPi);
    }
  }
  // Long orbit leaves the fundamental cell and gets split.
  const auto long_orbit = integrate(abc_field(), {0.1, 0.2, 0.3}, 0.05, 4000);
  const auto pieces = wrap_and_split(long_orbit.points);
  EXPECT_GT(pieces.size(), 1u);
  for (const auto& piece : pieces)
    for (std::size_t i = 1; i < piece.points.size(); ++i)
      EXPECT_LT(distance(piece.points[i], piece.points[i - 1]), 1.0);
}

TEST(Property, Rk4MatchesTaylorOnLinearFields) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 a{d(rng), d(rng), d(rng)}, x{d(rng), d(rng), d(rng)};
    const double h = 0.1;
    const Vec3 y = rk4_step(linear_field(a), x, h);
    EXPECT_NEAR(y.x, taylor4(h * a.x) * x.x, 1e-12);
    EXPECT_NEAR(y.y, taylor4(h * a.y) * x.y, 1e-12);
    EXPECT_NEAR(y.z, taylor4(h * a.z) * x.z, 1e-12);
  }
}

TEST(Property, IntegrateTimeTranslation) {
  const auto whole = integrate(lorenz_field(), {0, 1, 0}, 0.01, 500);
  const auto first = integrate(lorenz_field(), {0, 1, 0}, 0.01, 200);
  const auto second = integrate(lorenz_field(), first.points.points.back(), 0.01, 300);
  EXPECT_EQ(whole.points.points.back(), second.points.points.back());
}

TEST(MapAttractor, FixedPointAtZero) {
  const MapAttractor a = map_attractor(0.2);
  ASSERT_EQ(a.samples.size(), 1u);
  EXPECT_NEAR(a.samples[0], 0, 1e-7);
  EXPECT_NEAR(a.lyapunov, std::log(0.2 * kPi), 1e-6);
  EXPECT_NEAR(a.lyapunov, -0.4647080, 1e-6);
}

TEST(MapAttractor, SweepStartIsPeriodic) {
  const MapAttractor a = map_attractor(0.55);
  EXPECT_LE(a.samples.size(), 2u);
  EXPECT_LT(a.lyapunov, 0);
}

TEST(MapAttractor, ChaoticBand) {
  const MapAttractor a = map_attractor(0.99);
  EXPECT_GT(a.lyapunov, 0);
  EXPECT_GT(a.samples.size(), 1000u);
}

TEST(MapAttractor, SuperstableIsMinusInfinity) {
  // c = 1/2 makes 1/2 a superstable fixed point.
  EXPECT_EQ(map_attractor(0.5, 400, 10).lyapunov, -std::numeric_limits<double>::infinity());
  EXPECT_THROW(map_attractor(1.5), InputError);
}

TEST(Property, AttractorSamplesDistinct) {
  for (double c = 0.55; c <= 1.0; c += 0.05) {
    const MapAttractor a = map_attractor(c);
    for (std::size_t i = 1; i < a.samples.size(); ++i)
      EXPECT_GT(a.samples[i] - a.samples[i - 1], kAttractorDedupTolerance);
  }
}

TEST(Period, DetectsKnownWindows) {
  EXPECT_EQ(detect_period(0.6), 1);
  EXPECT_EQ(detect_period(0.8), 2);
  EXPECT_EQ(detect_period(0.85), 4);
  EXPECT_EQ(detect_period(0.99), 0);
}

TEST(Feigenbaum, SyntheticRatioFour) {
  const auto e = feigenbaum_delta({0, 1, 1.25, 1.3125});
  ASSERT_EQ(e.ratios.size(), 2u);
  EXPECT_EQ(e.ratios[0], 4.0);
  EXPECT_EQ(e.delta, 4.0);
}

TEST(Feigenbaum, ContractErrors) {
  EXPECT_THROW(feigenbaum_delta({0, 1, 2}), InputError);
  EXPECT_THROW(feigenbaum_delta({0, 1, 1, 2}), InputError);
}

TEST(Feigenbaum, OracleValues) {
  // Frozen from the multiplier bisection.
  EXPECT_NEAR(kFlips[0], 0.71996168, 1e-8);
  EXPECT_NEAR(kFlips[1], 0.83326635, 1e-8);
  EXPECT_NEAR(kFlips[2], 0.85860906, 1e-8);
  EXPECT_NEAR(kFlips[3], 0.86408417, 1e-8);
}

TEST(Feigenbaum, DetectedDoublingsMatchOracle) {
  const auto c = find_period_doublings();
  ASSERT_EQ(c.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(c[i], kFlips[i], 1e-4) << i;
  const auto e = feigenbaum_delta(c);
  EXPECT_NEAR(e.delta, 4.669, 0.1 * 4.669);
}

TEST(DigitWalk, ReturnsToOrigin) {
  const Polyline3 w = digit_walk({0, 1}, 6);
  ASSERT_EQ(w.points.size(), 3u);
  EXPECT_EQ(w.points.back(), (Vec3{0, 0, 0}));
}

TEST(DigitWalk, PlanarBaseFour) {
  const Polyline3 w = digit_walk({0, 2, 3, 1, 0}, 4, 0.5);
  for (const Vec3& p : w.points) EXPECT_EQ(p.z, 0);
  EXPECT_EQ(w.points.back(), (Vec3{0.5, 0, 0}));
  EXPECT_THROW(digit_walk({0, 4}, 4), InputError);
  EXPECT_THROW(digit_walk({0}, 5), InputError);
}

TEST(DigitWalk, ErrorNamesIndex) {
  try {
    digit_walk({0, 1, 7}, 6);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("index 2"), std::string::npos);
  }
}

TEST(Property, DigitWalkLength) {
  std::mt19937 rng(1);
  std::vector<int> digits(500);
  for (int& d : digits) d = int(rng() % 6);
  const double step = 0.25;
  const Polyline3 w = digit_walk(digits, 6, step);
  ASSERT_EQ(w.points.size(), 501u);
  double len = 0;
  for (std::size_t i = 1; i < w.points.size(); ++i) len += distance(w.points[i], w.points[i - 1]);
  EXPECT_EQ(len, 500 * step);
}

TEST(DigitWalk, ParseIgnoresWhitespace) {
  EXPECT_EQ(parse_digits("3 0\n5\t1", 6), (std::vector<int>{3, 0, 5, 1}));
  EXPECT_THROW(parse_digits("3.0", 6), InputError);
  EXPECT_THROW(parse_digits("36", 6), InputError);
}

TEST(DigitWalk, PiFileReproducible) {
  const std::string path = std::string(MATHPRINT_DATA_DIR) + "/pi_base6.txt";
  const auto d1 = read_digit_file(path, 6);
  const auto d2 = read_digit_file(path, 6);
  ASSERT_EQ(d1.size(), 1000u);
  // pi = 3.0503300514151241052344140531253211023012144420... in base 6.
  EXPECT_EQ(d1[0], 3);
  EXPECT_EQ(d1[1], 0);
  EXPECT_EQ(d1[2], 5);
  EXPECT_EQ(digit_walk(d1, 6).points, digit_walk(d2, 6).points);
  EXPECT_THROW(read_digit_file("/nonexistent/digits.txt", 6), InputError);
}
