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
#include "tropjac/error.hpp"
#include "tropjac/homology.hpp"
#include "tropjac/plfunc.hpp"

namespace tropjac {
namespace {

Matrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

// Random connected multigraph with up to `max_edges` edges.
MetricGraph random_graph(oracle::Rng& rng, int max_edges) {
  std::uniform_int_distribution<int> nv_dist(1, 4);
  const int nv = nv_dist(rng);
  std::vector<std::string> vs;
  for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<MetricGraph::EdgeSpec> es;
  for (int i = 1; i < nv; ++i) {
    std::uniform_int_distribution<int> back(0, i - 1);
    es.push_back({"t" + std::to_string(i), vs[static_cast<std::size_t>(back(rng))], vs[static_cast<std::size_t>(i)],
                  oracle::random_rational(rng, 1, 3, 4)});
  }
  std::uniform_int_distribution<int> any(0, nv - 1);
  while (static_cast<int>(es.size()) < max_edges) {
    es.push_back({"x" + std::to_string(es.size()), vs[static_cast<std::size_t>(any(rng))], vs[static_cast<std::size_t>(any(rng))],
                  oracle::random_rational(rng, 1, 3, 4)});
  }
  return MetricGraph(vs, es);
}

TEST(CycleBasis, TreeAndCircle) {
  const MetricGraph tree({"a", "b", "c"}, {{"e", "a", "b", 1}, {"f", "b", "c", 2}});
  EXPECT_EQ(cycle_basis(tree).genus(), 0U);
  const MetricGraph c = samples::circle(1, 2);
  const CycleBasis b = cycle_basis(c);
  ASSERT_EQ(b.genus(), 1U);
  for (int e = 0; e < 2; ++e) EXPECT_EQ(std::abs(b.coefficients[0][static_cast<std::size_t>(e)]), 1);
  EXPECT_EQ(period_matrix(c, b).matrix(), mat({{3}}));
}

TEST(CycleBasis, ThetaWithTreeB) {
  const MetricGraph th = samples::theta();
  const std::vector<int> tree{1};
  const CycleBasis b = cycle_basis(th, tree);
  EXPECT_EQ(b.coefficients[0], (std::vector<int>{1, -1, 0}));
  EXPECT_EQ(b.coefficients[1], (std::vector<int>{0, -1, 1}));
  EXPECT_EQ(period_matrix(th, b).matrix(), mat({{2, 1}, {1, 2}}));
  const std::vector<int> bad{0, 1};
  EXPECT_THROW((void)cycle_basis(th, bad), Error);
}

TEST(PeriodMatrix, TorelliCounterexample) {
  const Matrix q1 = Jacobian(samples::dumbbell(1, 2, 1)).period().matrix();
  const Matrix q2 = Jacobian(samples::dumbbell(1, 2, 2)).period().matrix();
  EXPECT_EQ(q1, mat({{1, 0}, {0, 2}}));
  EXPECT_EQ(q1, q2);
}

TEST(PeriodMatrix, RejectsIndefinite) {
  EXPECT_THROW(PeriodMatrix(mat({{1, 2}, {2, 1}})), Error);
  EXPECT_THROW(PeriodMatrix(mat({{1, 2}, {0, 1}})), Error);
}

TEST(PeriodMatrix, PositiveDefiniteAndMatchesNaivePairing) {
  oracle::Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    const MetricGraph g = random_graph(rng, 1 + static_cast<int>(rng() % 6));
    const CycleBasis b = cycle_basis(g);
    const Matrix q = period_matrix(g, b).matrix();
    EXPECT_TRUE(q.is_symmetric());
    for (const auto& minor : q.leading_minors()) EXPECT_GT(minor, 0);
    EXPECT_EQ(q, oracle::naive_period_matrix(g, b.tree_edges));
  }
}

TEST(AbelJacobi, Examples) {
  const MetricGraph th = samples::theta(2, Rational(1, 3), 5);
  const std::vector<int> tree{1};
  const Jacobian jac(th, cycle_basis(th, tree));
  const GraphPoint v1 = GraphPoint::vertex(0);
  EXPECT_EQ(jac.abel_jacobi(Divisor::point(v1), v1), zeros(2));
  EXPECT_EQ(jac.abel_jacobi(Divisor::point(GraphPoint::vertex(1)), v1), (Vector{Rational(-1, 3), Rational(-1, 3)}));

  const MetricGraph c = samples::loop(2);
  const Jacobian cj(c);
  const GraphPoint p = GraphPoint::on_edge(c, 0, Rational(1, 2));
  const Vector u = cj.abel_jacobi(Divisor::point(p), GraphPoint::vertex(0));
  EXPECT_TRUE(cj.equal(u, {Rational(1, 2)}));
  EXPECT_TRUE(cj.equal(u, {Rational(-3, 2)}));
  EXPECT_FALSE(cj.equal(u, {Rational(1)}));
}

TEST(JacEqual, CircleOfLengthTwo) {
  const PeriodMatrix q(mat({{2}}));
  EXPECT_TRUE(jac_equal({Rational(1, 2)}, {Rational(1, 2)}, q));
  EXPECT_TRUE(jac_equal({Rational(1, 2)}, {Rational(5, 2)}, q));
  EXPECT_FALSE(jac_equal({Rational(1, 2)}, {Rational(1)}, q));
  EXPECT_EQ(jac_canonical({Rational(5, 2)}, q), (Vector{Rational(1, 2)}));
  EXPECT_EQ(jac_canonical({Rational(1)}, q), (Vector{Rational(1)}));
}

TEST(IsPrincipal, Examples) {
  const MetricGraph c = samples::loop(3);
  const Jacobian jac(c);
  const GraphPoint v = GraphPoint::vertex(0);
  EXPECT_TRUE(jac.is_principal(Divisor(), v));
  const Divisor pq = Divisor::point(GraphPoint::on_edge(c, 0, 1)) - Divisor::point(GraphPoint::on_edge(c, 0, 2));
  EXPECT_FALSE(jac.is_principal(pq, v));
  EXPECT_FALSE(jac.is_principal(Divisor::point(v), v));
}

TEST(IsPrincipal, DivisorsOfFunctions) {
  oracle::Rng rng(4);
  for (const auto& s : samples::all()) {
    const Jacobian jac(*s.graph);
    for (int t = 0; t < 30; ++t) {
      const Divisor d = divisor_of(oracle::random_plfunction(*s.graph, rng));
      EXPECT_TRUE(jac.is_principal(d, GraphPoint::vertex(0))) << s.name << ": " << d.str(*s.graph);
    }
  }
}

TEST(AbelJacobi, DegreeZeroIsBaseIndependent) {
  oracle::Rng rng(17);
  for (const auto& s : samples::all()) {
    const MetricGraph& g = *s.graph;
    const Jacobian jac(g);
    for (int t = 0; t < 20; ++t) {
      const Divisor d = oracle::random_effective(g, rng, 2) - oracle::random_effective(g, rng, 2);
      const GraphPoint b1 = oracle::random_point(g, rng), b2 = oracle::random_point(g, rng);
      EXPECT_TRUE(jac.equal(jac.abel_jacobi(d, b1), jac.abel_jacobi(d, b2)));
    }
  }
}

TEST(AbelJacobi, BasisIndependentVerdicts) {
  oracle::Rng rng(23);
  const MetricGraph k4 = samples::k4();
  const Jacobian j1(k4);
  const std::vector<int> path{0, 3, 5};  // a, d, f
  const Jacobian j2(k4, cycle_basis(k4, path));
  const GraphPoint base = GraphPoint::vertex(0);
  int equal_count = 0;
  for (int t = 0; t < 100; ++t) {
    const Divisor d = oracle::random_effective(k4, rng, 2, 2);
    const Divisor e = t % 2 ? oracle::random_effective(k4, rng, 2, 2) : oracle::random_equivalent(d, k4, rng);
    const bool a = j1.is_principal(d - e, base);
    EXPECT_EQ(a, j2.is_principal(d - e, base));
    equal_count += a;
  }
  EXPECT_GT(equal_count, 40);
}

}  // namespace
}  // namespace tropjac
