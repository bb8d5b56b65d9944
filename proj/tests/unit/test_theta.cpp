// Copyright 2026 The tropjac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tropjac/error.hpp"
#include "tropjac/lattice.hpp"
#include "tropjac/theta.hpp"

namespace tropjac {
namespace {

PeriodMatrix one(const Rational& x) {
  Matrix m(1, 1);
  m(0, 0) = x;
  return PeriodMatrix(m);
}

PeriodMatrix hex() {
  Matrix m(2, 2);
  m(0, 0) = m(1, 1) = 2;
  m(0, 1) = m(1, 0) = 1;
  return PeriodMatrix(m);
}

TEST(Theta, AtZero) {
  const ThetaValue t = theta(hex(), zeros(2));
  EXPECT_EQ(t.value, 0);
  EXPECT_EQ(t.maximizers, (std::vector<IntVector>{{0, 0}}));
}

TEST(Theta, TwoMaximizersOnCircle) {
  const ThetaValue t = theta(one(2), {1});
  EXPECT_EQ(t.value, 0);
  EXPECT_EQ(t.maximizers, (std::vector<IntVector>{{0}, {1}}));
}

TEST(Theta, ThreeMaximizersOnHexagonalLattice) {
  const ThetaValue t = theta(hex(), {1, 1});
  EXPECT_EQ(t.value, 0);
  EXPECT_EQ(t.maximizers, (std::vector<IntVector>{{0, 0}, {0, 1}, {1, 0}}));
}

TEST(Theta, Translated) {
  EXPECT_EQ(theta_translated(hex(), {1, 1}, zeros(2)).maximizers, theta(hex(), {1, 1}).maximizers);
  const ThetaValue t = theta_translated(one(2), {1}, {1});
  EXPECT_EQ(t.value, 0);
  EXPECT_EQ(t.maximizers, (std::vector<IntVector>{{0}}));
  EXPECT_TRUE(on_theta_divisor(one(2), Vector{0} - Vector{1}));
}

TEST(Theta, CornerLocus) {
  EXPECT_FALSE(on_theta_divisor(one(2), {0}));
  EXPECT_TRUE(on_theta_divisor(one(2), {1}));
  EXPECT_FALSE(on_theta_divisor(one(2), {Rational(1, 2)}));
}

TEST(Theta, QuasiPeriodExamples) {
  EXPECT_TRUE(quasiperiod_check(one(2), {Rational(1, 2)}, {0}));
  EXPECT_TRUE(quasiperiod_check(one(2), {Rational(1, 2)}, {1}));
  EXPECT_EQ(theta(one(2), {Rational(5, 2)}).value, Rational(3, 2));
  EXPECT_EQ(theta(one(2), {Rational(1, 2)}).value + Rational(1, 2) + 1, Rational(3, 2));
}

TEST(Theta, Legendre) {
  EXPECT_EQ(legendre(hex(), {0, 0}), 0);
  EXPECT_EQ(legendre(one(2), {3}), 9);
}

TEST(Theta, DimensionMismatch) { EXPECT_THROW((void)theta(hex(), {1}), Error); }

TEST(Theta, GenusZero) {
  const PeriodMatrix empty{Matrix(0, 0)};
  const ThetaValue t = theta(empty, {});
  EXPECT_EQ(t.value, 0);
  EXPECT_EQ(t.maximizers.size(), 1U);
}

TEST(Theta, RandomIdentities) {
  oracle::Rng rng(500);
  for (int t = 0; t < 500; ++t) {
    const std::size_t g = 1 + t % 4;
    const PeriodMatrix q(oracle::random_spd(rng, g));
    const Vector u = oracle::random_vector(rng, g, -4, 4, 6);
    const ThetaValue th = theta(q, u);

    // brute force over a certified box
    const auto brute = oracle::brute_theta(q.matrix(), u, oracle::certified_box(q.matrix(), u));
    EXPECT_EQ(th.value, brute.value);
    EXPECT_EQ(th.maximizers, brute.maximizers);

    // evenness
    const ThetaValue neg = theta(q, -u);
    EXPECT_EQ(neg.value, th.value);
    std::vector<IntVector> flipped;
    for (auto n : th.maximizers) {
      for (auto& x : n) x = -x;
      flipped.push_back(n);
    }
    std::sort(flipped.begin(), flipped.end());
    EXPECT_EQ(neg.maximizers, flipped);

    // quasi-periodicity and periodicity of the corner locus
    IntVector m(g);
    for (auto& x : m) x = static_cast<std::int64_t>(rng() % 5) - 2;
    EXPECT_TRUE(quasiperiod_check(q, u, m));
    EXPECT_EQ(on_theta_divisor(q, u), on_theta_divisor(q, u + q.matrix() * m));

    // Legendre re-evaluation
    for (const auto& n : th.maximizers) EXPECT_EQ(dot(n, u) - legendre(q, n), th.value);
  }
}

TEST(Theta, SectionUniquenessSurrogate) {
  oracle::Rng rng(77);
  for (int t = 0; t < 50; ++t) {
    const std::size_t g = 1 + t % 3;
    const PeriodMatrix q(oracle::random_spd(rng, g));
    IntVector m(g);
    for (auto& x : m) x = static_cast<std::int64_t>(rng() % 7) - 3;
    // at Qm only the piece m is active
    const ThetaValue at = theta(q, q.matrix() * m);
    ASSERT_EQ(at.maximizers, (std::vector<IntVector>{m}));
    EXPECT_EQ(at.value, legendre(q, m));
  }
}

TEST(Lattice, EllipsoidPointsAndClosest) {
  Matrix q(2, 2);
  q(0, 0) = q(1, 1) = 2;
  q(0, 1) = q(1, 0) = 1;
  const auto pts = lattice_points_in_ellipsoid(q, {0, 0}, 2);
  EXPECT_EQ(pts.size(), 7U);  // origin and the six minimal vectors
  const ClosestVectors cv = closest_vectors(q, {Rational(1, 3), Rational(1, 3)});
  EXPECT_EQ(cv.points, (std::vector<IntVector>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(cv.distance, Rational(2, 3));
}

}  // namespace
}  // namespace tropjac
