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
#include "samples.hpp"
#include "tropjac/chipfire.hpp"
#include "tropjac/error.hpp"
#include "tropjac/inversion.hpp"
#include "tropjac/theta.hpp"

namespace tropjac {
namespace {

const GraphPoint kV1 = GraphPoint::vertex(0);
const GraphPoint kV2 = GraphPoint::vertex(1);

Vector scaled(const Vector& v, std::int64_t k) {
  Vector out = v;
  for (auto& x : out) x *= k;
  return out;
}

TEST(Pullback, CircleAntipode) {
  const MetricGraph c = samples::loop(2);
  const Jacobian jac(c);
  EXPECT_EQ(pullback_theta(jac, kV1, {0}), Divisor::point(GraphPoint::on_edge(c, 0, 1)));
}

TEST(Pullback, CircleTranslates) {
  oracle::Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const Rational len = oracle::random_rational(rng, 1, 5, 6);
    const MetricGraph c = samples::loop(len);
    const Jacobian jac(c);
    const Vector lambda{oracle::random_rational(rng, -8, 8, 12)};
    const Divisor d = pullback_theta(jac, kV1, lambda);
    ASSERT_EQ(d.degree(), 1);
    ASSERT_TRUE(d.is_effective());
    EXPECT_TRUE(jac.equal(jac.abel_jacobi(d, kV1), {lambda[0] + len / 2}));
  }
}

TEST(Pullback, ThetaGraphDegreeAndEffectivity) {
  const MetricGraph th = samples::theta();
  const Jacobian jac(th);
  oracle::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const Divisor d = pullback_theta(jac, kV1, oracle::random_vector(rng, 2, -3, 3, 10));
    EXPECT_EQ(d.degree(), 2);
    for (const auto& [p, c] : d.terms()) EXPECT_GT(c, 0);
  }
}

TEST(Pullback, AllSamples) {
  oracle::Rng rng(7);
  for (const auto& s : samples::all()) {
    const Jacobian jac(*s.graph);
    const auto g = static_cast<std::int64_t>(jac.genus());
    const Vector k = kappa(jac, kV1);
    for (int t = 0; t < 50; ++t) {
      const Vector lambda = oracle::random_vector(rng, jac.genus(), -4, 4, 9);
      const Divisor d = pullback_theta(jac, kV1, lambda);
      ASSERT_EQ(d.degree(), g) << s.name;
      ASSERT_TRUE(d.is_effective()) << s.name;
      Vector sum = jac.abel_jacobi(d, kV1);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += k[i];
      EXPECT_TRUE(jac.equal(sum, lambda)) << s.name;
      if (t < 10) EXPECT_TRUE(is_break_divisor(*s.graph, d)) << s.name << " " << d.str(*s.graph);
    }
  }
  EXPECT_THROW((void)pullback_theta(Jacobian(samples::theta()), kV1, {0}), Error);
}

TEST(Pullback, EnvelopeSlopesAreIntegersAndBreakpointsIncrease) {
  const MetricGraph th = samples::theta(Rational(2, 3), 1, Rational(5, 2));
  const Jacobian jac(th);
  oracle::Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    const Vector lambda = oracle::random_vector(rng, 2, -2, 2, 7);
    for (int e = 0; e < 3; ++e) {
      const EdgeEnvelope env = edge_envelope(jac, kV1, lambda, e);
      Rational prev = 0;
      for (const auto& b : env.breakpoints) {
        EXPECT_GT(b.offset, prev);
        EXPECT_LT(b.offset, th.edge(e).length);
        EXPECT_GT(b.multiplicity, 0);
        EXPECT_EQ(b.right_slope - b.left_slope, Rational(b.multiplicity));
        EXPECT_TRUE(is_integer(b.left_slope));
        prev = b.offset;
      }
    }
  }
}

TEST(Kappa, Circle) {
  for (const Rational len : {Rational(1), Rational(2), Rational(7, 3)}) {
    const MetricGraph c = samples::loop(len);
    const Jacobian jac(c);
    EXPECT_TRUE(jac.equal(kappa(jac, kV1), {len / 2}));
  }
}

TEST(Kappa, TwiceKappaIsMinusCanonical) {
  oracle::Rng rng(1);
  for (const auto& s : samples::all()) {
    const Jacobian jac(*s.graph);
    for (const GraphPoint& base : {kV1, oracle::random_point(*s.graph, rng)}) {
      const Vector k = kappa(jac, base);
      Vector lhs = scaled(k, 2);
      const Vector mk = jac.abel_jacobi(canonical_divisor(*s.graph), base);
      for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += mk[i];
      EXPECT_TRUE(jac.equal(lhs, Vector(jac.genus(), Rational(0)))) << s.name;
    }
  }
}

TEST(Kappa, ConstantOverTenProbes) {
  for (const auto& s : samples::all()) {
    const Jacobian jac(*s.graph);
    const Vector k0 = kappa(jac, kV1);
    const Vector k10 = kappa(Jacobian(*s.graph), kV1, 10);
    EXPECT_TRUE(jac.equal(k0, k10)) << s.name;
  }
}

TEST(CanonicalEffective, Examples) {
  const MetricGraph c = samples::loop(3);
  const Jacobian jc(c);
  const Divisor q = Divisor::point(GraphPoint::on_edge(c, 0, Rational(5, 4)));
  EXPECT_EQ(canonical_effective(jc, q, kV1), q);
  EXPECT_THROW((void)canonical_effective(jc, 2 * q, kV1), Error);

  const MetricGraph th = samples::theta();
  const Jacobian jac(th);
  oracle::Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const Divisor d = oracle::random_effective(th, rng, 2);
    const Divisor e1 = canonical_effective(jac, d, kV1);
    EXPECT_EQ(e1, canonical_effective(jac, d, kV2));
    EXPECT_EQ(e1, canonical_effective(jac, e1, kV1));
    EXPECT_TRUE(jac.is_principal(e1 - d, kV1));
    const Divisor dl = pullback_theta(jac, kV1, oracle::random_vector(rng, 2, -2, 2, 5));
    EXPECT_EQ(canonical_effective(jac, dl, kV2), dl);
  }
}

TEST(SupportTest, GenusOne) {
  const MetricGraph c = samples::loop(2);
  const Jacobian jac(c);
  const GraphPoint q1 = GraphPoint::on_edge(c, 0, Rational(1, 3));
  const GraphPoint q2 = GraphPoint::on_edge(c, 0, Rational(3, 2));
  EXPECT_TRUE(theta_support_test(jac, Divisor::point(q1), q1, kV1));
  EXPECT_FALSE(theta_support_test(jac, Divisor::point(q1), q2, kV1));
  EXPECT_THROW((void)theta_support_test(jac, Divisor(), q1, kV1), Error);
}

TEST(SupportTest, AgreesWithChipFiring) {
  oracle::Rng rng(13);
  for (const auto& s : samples::all()) {
    const Jacobian jac(*s.graph);
    const ChipFiring cf(jac);
    const int trials = s.name == "theta111" ? 50 : 15;
    for (int t = 0; t < trials; ++t) {
      const Divisor d = oracle::random_effective(*s.graph, rng, static_cast<int>(jac.genus()), 6);
      const GraphPoint q = t % 4 == 0 && !d.empty() ? d.support().front() : oracle::random_point(*s.graph, rng, 6);
      EXPECT_EQ(theta_support_test(jac, d, q, kV1), cf.linear_system_nonempty(d - Divisor::point(q)))
          << s.name << " D=" << d.str(*s.graph) << " q=" << q.str(*s.graph);
    }
  }
}

TEST(Riemann, Examples) {
  const MetricGraph c = samples::loop(3);
  EXPECT_TRUE(riemann_membership(Jacobian(c), {0}, kV1));
  EXPECT_FALSE(riemann_membership(Jacobian(c), {1}, kV1));

  oracle::Rng rng(17);
  for (const auto& s : samples::all()) {
    const Jacobian jac(*s.graph);
    const ChipFiring cf(jac);
    const int gm1 = static_cast<int>(jac.genus()) - 1;
    for (int t = 0; t < 20; ++t) {
      const Divisor d = oracle::random_effective(*s.graph, rng, gm1);
      EXPECT_TRUE(riemann_membership(jac, jac.abel_jacobi(d, kV1), kV1)) << s.name;
    }
    const Model m(*s.graph, std::vector<GraphPoint>{});
    const Vector mk = jac.abel_jacobi(canonical_divisor(*s.graph), kV1);
    for (const auto& o : enumerate_acyclic_orientations(m)) {
      const Divisor kp = moderator(o);
      const Vector c_value = jac.abel_jacobi(kp, kV1);
      EXPECT_FALSE(riemann_membership(jac, c_value, kV1)) << s.name;
      EXPECT_FALSE(cf.linear_system_nonempty(kp));
      Vector dual = mk;
      for (std::size_t i = 0; i < dual.size(); ++i) dual[i] -= c_value[i];
      EXPECT_FALSE(riemann_membership(jac, dual, kV1)) << s.name;
    }
    for (int t = 0; t < 10; ++t) {
      const Divisor d = oracle::random_divisor(*s.graph, rng, 3);
      Divisor adj = d;
      adj.add(kV1, gm1 - d.degree());
      const Vector c_value = jac.abel_jacobi(adj, kV1);
      EXPECT_EQ(riemann_membership(jac, c_value, kV1), cf.linear_system_nonempty(adj)) << s.name << " " << adj.str(*s.graph);
    }
  }
}

TEST(BreakDivisor, Examples) {
  const MetricGraph c = samples::loop(2);
  EXPECT_TRUE(is_break_divisor(c, Divisor::point(GraphPoint::on_edge(c, 0, Rational(1, 2)))));
  EXPECT_TRUE(is_break_divisor(c, Divisor::point(kV1)));
  EXPECT_FALSE(is_break_divisor(c, Divisor()));

  const MetricGraph th = samples::theta();
  const GraphPoint a = GraphPoint::on_edge(th, 0, Rational(1, 2));
  const GraphPoint cc = GraphPoint::on_edge(th, 2, Rational(1, 3));
  EXPECT_TRUE(is_break_divisor(th, Divisor::point(a) + Divisor::point(cc)));
  EXPECT_FALSE(is_break_divisor(th, 2 * Divisor::point(a)));
  EXPECT_TRUE(is_break_divisor(th, 2 * Divisor::point(kV1)));
  EXPECT_FALSE(is_break_divisor(th, 3 * Divisor::point(kV1) - Divisor::point(kV2)));
}

TEST(ResidueAudit, Random) {
  EXPECT_TRUE(refined_residue_audit(Jacobian(samples::loop(1)), kV1, {0}));
  oracle::Rng rng(19);
  const MetricGraph th = samples::theta();
  const Jacobian jac(th);
  for (int t = 0; t < 20; ++t) EXPECT_TRUE(refined_residue_audit(jac, kV1, oracle::random_vector(rng, 2, -3, 3, 8)));
  for (const auto& s : samples::all()) {
    const Jacobian j(*s.graph);
    EXPECT_TRUE(refined_residue_audit(j, kV1, oracle::random_vector(rng, j.genus(), -2, 2, 5))) << s.name;
  }
}

}  // namespace
}  // namespace tropjac
