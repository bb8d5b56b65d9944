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
#include "tropjac/graph.hpp"

namespace tropjac {
namespace {

std::string error_name(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

MetricGraph path_tree(int edges) {
  std::vector<std::string> vs;
  std::vector<MetricGraph::EdgeSpec> es;
  for (int i = 0; i <= edges; ++i) vs.push_back("t" + std::to_string(i));
  for (int i = 0; i < edges; ++i) es.push_back({"e" + std::to_string(i), vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(i + 1)], 1});
  return MetricGraph(vs, es);
}

TEST(Genus, Examples) {
  EXPECT_EQ(genus(samples::loop(1)), 1);
  EXPECT_EQ(genus(samples::theta()), 2);
  EXPECT_EQ(genus(path_tree(5)), 0);
  EXPECT_EQ(genus(samples::k4()), 3);
}

TEST(MetricGraph, ValidationErrors) {
  EXPECT_EQ(error_name([] { MetricGraph({}, {}); }), "graph.EmptyGraph");
  EXPECT_EQ(error_name([] { MetricGraph({"a", "a"}, {}); }), "graph.DuplicateIdentifier");
  EXPECT_EQ(error_name([] { MetricGraph({"a"}, {{"e", "a", "b", 1}}); }), "graph.UnknownVertex");
  EXPECT_EQ(error_name([] { MetricGraph({"a", "b"}, {{"e", "a", "b", 0}}); }), "graph.NonPositiveLength");
  EXPECT_EQ(error_name([] { MetricGraph({"a", "b"}, {}); }), "graph.DisconnectedGraph");
  EXPECT_EQ(error_name([] { MetricGraph({"a", "b"}, {{"e", "a", "b", 1}, {"e", "b", "a", 1}}); }), "graph.DuplicateIdentifier");
}

TEST(MetricGraph, SortedAndCompactness) {
  const MetricGraph g({"z", "a"}, {{"y", "a", "z", 1}, {"x", "z", "a", 2}});
  EXPECT_EQ(g.vertex_id(0), "a");
  EXPECT_EQ(g.edge(0).id, "x");
  EXPECT_TRUE(g.is_compact_curve());
  EXPECT_FALSE(path_tree(2).is_compact_curve());
  EXPECT_EQ(samples::dumbbell(1, 2, 1).valence(0), 3);
}

TEST(Canonical, Examples) {
  EXPECT_TRUE(canonical_divisor(samples::circle(1, 1)).empty());
  const MetricGraph th = samples::theta();
  EXPECT_EQ(canonical_divisor(th), Divisor::point(GraphPoint::vertex(0)) + Divisor::point(GraphPoint::vertex(1)));
  const MetricGraph db = samples::dumbbell(1, 2, 1);
  EXPECT_EQ(canonical_divisor(db).str(db), "v1 + v2");
  EXPECT_EQ(canonical_divisor(th).str(th), "v1 + v2");
}

TEST(Canonical, DegreeIsTwoGMinusTwo) {
  // Every connected multigraph on up to 3 vertices with up to 5 edges.
  const std::vector<std::string> names{"a", "b", "c"};
  oracle::Rng rng(3);
  int checked = 0;
  for (std::size_t nv = 1; nv <= 3; ++nv) {
    std::vector<std::pair<int, int>> slots;
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = i; j < nv; ++j) slots.emplace_back(static_cast<int>(i), static_cast<int>(j));
    for (int ne = 1; ne <= 5; ++ne) {
      std::vector<int> pick(static_cast<std::size_t>(ne), 0);
      while (true) {
        std::vector<std::string> vs(names.begin(), names.begin() + static_cast<long>(nv));
        std::vector<MetricGraph::EdgeSpec> es;
        for (int k = 0; k < ne; ++k) {
          const auto [a, b] = slots[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])];
          es.push_back({"e" + std::to_string(k), vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)],
                        oracle::random_rational(rng, 1, 4, 5)});
        }
        try {
          const MetricGraph g(vs, es);
          EXPECT_EQ(canonical_divisor(g).degree(), 2 * genus(g) - 2);
          ++checked;
        } catch (const Error& e) {
          EXPECT_EQ(e.name(), "graph.DisconnectedGraph");
        }
        std::size_t k = 0;
        while (k < pick.size() && pick[k] == static_cast<int>(slots.size()) - 1) pick[k++] = 0;
        if (k == pick.size()) break;
        ++pick[k];
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(GraphPoint, CanonicalForm) {
  const MetricGraph c = samples::circle(1, 1);
  EXPECT_EQ(GraphPoint::on_edge(c, 0, 0), GraphPoint::vertex(0));
  EXPECT_EQ(GraphPoint::on_edge(c, 0, 1), GraphPoint::vertex(1));
  EXPECT_EQ(GraphPoint::on_edge(c, 0, Rational(1, 2)).str(c), "A@1/2");
  EXPECT_LT(GraphPoint::vertex(1), GraphPoint::on_edge(c, 0, Rational(1, 2)));
  EXPECT_EQ(error_name([&] { (void)GraphPoint::on_edge(c, 0, 2); }), "graph.PointOffEdge");
}

TEST(Divisor, Arithmetic) {
  const MetricGraph c = samples::circle(1, 1);
  const GraphPoint p = GraphPoint::on_edge(c, 0, Rational(1, 2));
  Divisor d = 2 * Divisor::point(GraphPoint::vertex(0)) - Divisor::point(p);
  EXPECT_EQ(d.degree(), 1);
  EXPECT_FALSE(d.is_effective());
  EXPECT_TRUE(d.is_effective_away_from(p));
  EXPECT_EQ(d.str(c), "2*v1 - A@1/2");
  EXPECT_EQ((d - d).str(c), "0");
  EXPECT_TRUE((d - d).empty());
}

TEST(Refine, LoopSplit) {
  const MetricGraph l = samples::loop(2);
  const std::vector<GraphPoint> pts{GraphPoint::on_edge(l, 0, Rational(1, 2))};
  const Model m = refine(l, pts);
  ASSERT_EQ(m.num_edges(), 2U);
  std::vector<Rational> lengths{m.edge(0).length(), m.edge(1).length()};
  std::sort(lengths.begin(), lengths.end());
  EXPECT_EQ(lengths[0], Rational(1, 2));
  EXPECT_EQ(lengths[1], Rational(3, 2));
}

TEST(Refine, IdentityAndAdditivity) {
  const MetricGraph th = samples::theta(1, 2, 3);
  const std::vector<GraphPoint> at_vertex{GraphPoint::vertex(1)};
  const Model same = refine(th, at_vertex);
  EXPECT_EQ(same.num_edges(), 3U);
  EXPECT_EQ(same.num_vertices(), 2U);
  const std::vector<GraphPoint> two{GraphPoint::on_edge(th, 1, Rational(1, 3)), GraphPoint::on_edge(th, 1, Rational(3, 2))};
  const Model m = refine(th, two);
  Rational on_b = 0;
  int pieces = 0;
  for (const auto& e : m.edges())
    if (e.parent == 1) {
      on_b += e.length();
      ++pieces;
    }
  EXPECT_EQ(pieces, 3);
  EXPECT_EQ(on_b, 2);
  EXPECT_EQ(m.genus(), 2);
  EXPECT_EQ(m.vertex_of(two[0]), 2);
  EXPECT_EQ(error_name([&] { (void)m.vertex_of(GraphPoint::on_edge(th, 0, Rational(1, 2))); }), "graph.NotAModelVertex");
}

TEST(Refine, PreservesInvariants) {
  oracle::Rng rng(8);
  for (const auto& s : samples::all()) {
    const MetricGraph& g = *s.graph;
    for (int t = 0; t < 10; ++t) {
      std::vector<GraphPoint> pts;
      for (int k = 0; k < 3; ++k) pts.push_back(oracle::random_point(g, rng));
      const Model m = refine(g, pts);
      Rational total = 0;
      for (const auto& e : m.edges()) total += e.length();
      EXPECT_EQ(total, g.total_length());
      EXPECT_EQ(m.genus(), genus(g));
      for (const auto& p : pts) EXPECT_TRUE(m.find_vertex(p).has_value());
      const auto d = distances_from(m, pts[0]);
      for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v)
        EXPECT_EQ(d[static_cast<std::size_t>(v)], distance(g, pts[0], GraphPoint::vertex(v)));
    }
  }
}

TEST(Distance, Examples) {
  const MetricGraph th = samples::theta();
  EXPECT_EQ(distance(th, GraphPoint::vertex(0), GraphPoint::vertex(0)), 0);
  EXPECT_EQ(distance(th, GraphPoint::vertex(0), GraphPoint::vertex(1)), 1);
  const MetricGraph c = samples::circle(1, 1);
  EXPECT_EQ(distance(c, GraphPoint::on_edge(c, 0, Rational(1, 4)), GraphPoint::on_edge(c, 1, Rational(1, 4))), 1);
  const MetricGraph l = samples::loop(3);
  EXPECT_EQ(distance(l, GraphPoint::on_edge(l, 0, Rational(1, 2)), GraphPoint::on_edge(l, 0, Rational(5, 2))), 1);
}

TEST(Distance, MetricAxioms) {
  oracle::Rng rng(21);
  for (const auto& s : samples::all()) {
    const MetricGraph& g = *s.graph;
    for (int t = 0; t < 30; ++t) {
      const GraphPoint a = oracle::random_point(g, rng), b = oracle::random_point(g, rng), c = oracle::random_point(g, rng);
      EXPECT_EQ(distance(g, a, b), distance(g, b, a));
      EXPECT_LE(distance(g, a, c), distance(g, a, b) + distance(g, b, c));
      EXPECT_EQ(distance(g, a, b) == 0, a == b);
    }
  }
}

}  // namespace
}  // namespace tropjac
