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

#include "tropjac/chipfire.hpp"

#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "tropjac/error.hpp"
#include "tropjac/inversion.hpp"

namespace tropjac {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::vector<GraphPoint> with_point(std::vector<GraphPoint> pts, const GraphPoint& p) {
  pts.push_back(p);
  return pts;
}

GraphPoint random_point(const MetricGraph& graph, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> edge(0, static_cast<int>(graph.num_edges()) - 1);
  std::uniform_int_distribution<int> num(0, 96);
  const int e = edge(rng);
  return GraphPoint::on_edge(graph, e, graph.edge(e).length * Rational(num(rng), 96));
}

}  // namespace

std::int64_t default_iteration_cap() {
  if (const char* env = std::getenv("TROPJAC_ITER_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

BurningResult dhar_burn(const MetricGraph& graph, const Divisor& d, const GraphPoint& p) {
  if (!d.is_effective_away_from(p))
    throw Error("chipfire", "NegativeOffBase", "divisor " + d.str(graph) + " is negative away from " + p.str(graph));
  Model m(graph, with_point(d.support(), p));
  const std::size_t nv = m.num_vertices();
  std::vector<bool> burnt(nv, false);
  std::vector<int> fire(nv, 0);
  std::vector<std::int64_t> chips(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) chips[v] = d.coefficient(m.point(static_cast<int>(v)));

  std::deque<int> queue{m.vertex_of(p)};
  burnt[idx(queue.front())] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& end : m.ends(v)) {
      const int w = m.other_end(end);
      if (burnt[idx(w)]) continue;
      if (++fire[idx(w)] > chips[idx(w)]) {
        burnt[idx(w)] = true;
        queue.push_back(w);
      }
    }
  }

  Subgraph unburnt{m, std::vector<bool>(nv, false), std::vector<bool>(m.num_edges(), false)};
  std::map<int, int> boundary;
  for (std::size_t v = 0; v < nv; ++v) {
    unburnt.vertices[v] = !burnt[v];
    if (!burnt[v] && fire[v] > 0) boundary[static_cast<int>(v)] = fire[v];
  }
  for (std::size_t e = 0; e < m.num_edges(); ++e)
    unburnt.edges[e] = !burnt[idx(m.edge(static_cast<int>(e)).tail)] && !burnt[idx(m.edge(static_cast<int>(e)).head)];
  return {m, std::move(burnt), std::move(unburnt), std::move(boundary)};
}

FiringStep fire_unburnt(const Divisor& d, const BurningResult& burning) {
  const Model& m = burning.model;
  const MetricGraph& graph = m.graph();
  if (burning.boundary.empty()) throw Error("chipfire", "NothingToFire", "every point burns");

  std::vector<EdgeEnd> leaving;
  for (const auto& [v, count] : burning.boundary) {
    for (const auto& end : m.ends(v))
      if (burning.burnt[idx(m.other_end(end))]) leaving.push_back(end);
  }
  Rational eps = m.edge(leaving.front().edge).length();
  for (const auto& end : leaving) eps = std::min(eps, m.edge(end.edge).length());
  if (eps <= 0) throw Error("chipfire", "InternalError", "firing step has zero length");

  Divisor next = d;
  std::vector<GraphPoint> points = m.points();
  for (const auto& end : leaving) {
    const int v = end.at_tail ? m.edge(end.edge).tail : m.edge(end.edge).head;
    const GraphPoint q = m.point_along(end, eps);
    next.add(m.point(v), -1);
    next.add(q, 1);
    points.push_back(q);
  }

  // f = min(eps, distance to the unburnt set); it is eps on every burnt
  // model vertex because each leaving edge has length at least eps.
  Model fine(graph, points);
  std::vector<Rational> values(fine.num_vertices(), eps);
  for (std::size_t v = 0; v < m.num_vertices(); ++v)
    if (!burning.burnt[v]) values[idx(fine.vertex_of(m.point(static_cast<int>(v))))] = 0;
  return {std::move(next), PLFunction(std::move(fine), std::move(values)), eps};
}

AcyclicOrientation AcyclicOrientation::reversed() const {
  AcyclicOrientation r{model, forward};
  r.forward.flip();
  return r;
}

bool AcyclicOrientation::is_acyclic() const {
  const std::size_t nv = model.num_vertices();
  std::vector<int> indegree(nv, 0);
  std::vector<std::vector<int>> out(nv);
  for (std::size_t e = 0; e < model.num_edges(); ++e) {
    const ModelEdge& me = model.edge(static_cast<int>(e));
    const int from = forward[e] ? me.tail : me.head;
    const int to = forward[e] ? me.head : me.tail;
    out[idx(from)].push_back(to);
    ++indegree[idx(to)];
  }
  std::deque<int> queue;
  for (std::size_t v = 0; v < nv; ++v)
    if (indegree[v] == 0) queue.push_back(static_cast<int>(v));
  std::size_t seen = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    ++seen;
    for (int w : out[idx(v)])
      if (--indegree[idx(w)] == 0) queue.push_back(w);
  }
  return seen == nv;
}

Divisor moderator(const AcyclicOrientation& orientation) {
  if (orientation.forward.size() != orientation.model.num_edges())
    throw Error("chipfire", "CyclicOrientation", "orientation does not match its model");
  if (!orientation.is_acyclic()) throw Error("chipfire", "CyclicOrientation", "orientation has a directed cycle");
  const Model& m = orientation.model;
  std::vector<std::int64_t> coeff(m.num_vertices(), -1);
  for (std::size_t e = 0; e < m.num_edges(); ++e) {
    const ModelEdge& me = m.edge(static_cast<int>(e));
    ++coeff[idx(orientation.forward[e] ? me.tail : me.head)];
  }
  Divisor k;
  for (std::size_t v = 0; v < coeff.size(); ++v) k.add(m.point(static_cast<int>(v)), coeff[v]);
  return k;
}

std::vector<AcyclicOrientation> enumerate_acyclic_orientations(const Model& model, int edge_bound) {
  const std::size_t ne = model.num_edges();
  if (static_cast<int>(ne) > edge_bound || ne >= 63)
    throw Error("chipfire", "EdgeBoundExceeded",
                std::to_string(ne) + " model edges exceed the bound " + std::to_string(edge_bound));
  std::vector<AcyclicOrientation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
    AcyclicOrientation o{model, std::vector<bool>(ne, true)};
    for (std::size_t e = 0; e < ne; ++e) o.forward[e] = ((mask >> e) & 1U) == 0;
    if (o.is_acyclic()) out.push_back(std::move(o));
  }
  return out;
}

Divisor pseudo_break_divisor(const MetricGraph& graph, const std::vector<CutPoint>& cuts) {
  std::vector<GraphPoint> pts;
  for (const auto& c : cuts) pts.push_back(c.point);
  const Model m(graph, pts);

  // Torn model: the cut end of a model edge is reattached to a fresh node.
  std::map<EdgeEnd, int> detached;
  for (const auto& c : cuts) {
    const int v = m.vertex_of(c.point);
    std::optional<EdgeEnd> found;
    for (const auto& end : m.ends(v))
      if (m.edge(end.edge).parent == c.edge && end.at_tail == c.toward_head) found = end;
    if (!found)
      throw Error("chipfire", "MalformedDomain", "cut at " + c.point.str(graph) + " does not touch edge " + graph.edge(c.edge).id);
    const int node = static_cast<int>(m.num_vertices() + detached.size());
    if (!detached.emplace(*found, node).second)
      throw Error("chipfire", "MalformedDomain", "repeated cut at " + c.point.str(graph));
  }

  std::vector<int> parent(m.num_vertices() + detached.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[idx(x)] == x ? x : parent[idx(x)] = find(parent[idx(x)]); };
  for (int e = 0; e < static_cast<int>(m.num_edges()); ++e) {
    int a = m.edge(e).tail, b = m.edge(e).head;
    if (auto it = detached.find({e, true}); it != detached.end()) a = it->second;
    if (auto it = detached.find({e, false}); it != detached.end()) b = it->second;
    const int ra = find(a), rb = find(b);
    if (ra == rb) throw Error("chipfire", "MalformedDomain", "the torn curve still contains a cycle");
    parent[idx(ra)] = rb;
  }

  Divisor d;
  for (const auto& c : cuts) d.add(c.point, 1);
  return d;
}

std::vector<CutPoint> spanning_tree_domain(const MetricGraph& graph, const CycleBasis& basis) {
  std::vector<CutPoint> cuts;
  for (int e : basis.non_tree_edges) cuts.push_back({GraphPoint::vertex(graph.edge(e).head), e, false});
  return cuts;
}

ChipFiring::ChipFiring(const Jacobian& jac, ChipfireOptions options) : jac_(&jac), options_(options) {}

namespace {

// Representative effective away from p: a degree-g effective divisor
// equivalent to D + (g - d) p, shifted back.
Divisor effectivize(const Jacobian& jac, const Divisor& d, const GraphPoint& p) {
  const std::int64_t k = static_cast<std::int64_t>(jac.genus()) - d.degree();
  return canonical_effective(jac, d + Divisor::point(p, k), p) - Divisor::point(p, k);
}

}  // namespace

ReduceResult ChipFiring::reduce_with_stats(const Divisor& d, const GraphPoint& p) const {
  const MetricGraph& g = graph();
  Divisor cur = d.is_effective_away_from(p) ? d : effectivize(*jac_, d, p);
  if (options_.check_phase1 && !cur.is_effective_away_from(p))
    throw Error("chipfire", "InternalError", "effectivization left " + cur.str(g) + " negative away from the base");
  ReduceResult out;
  while (true) {
    const BurningResult burning = dhar_burn(g, cur, p);
    if (burning.boundary.empty()) break;
    if (out.events >= options_.iteration_cap)
      throw Error("chipfire", "IterationCap", "reduce exceeded " + std::to_string(options_.iteration_cap) + " firing events");
    cur = fire_unburnt(cur, burning).divisor;
    ++out.events;
  }
  out.divisor = std::move(cur);
  return out;
}

bool ChipFiring::linear_system_nonempty(const Divisor& d) const { return linear_system_nonempty(d, GraphPoint::vertex(0)); }

bool ChipFiring::linear_system_nonempty(const Divisor& d, const GraphPoint& p) const {
  if (d.degree() < 0) return false;
  if (d.is_effective()) return true;
  // Firing never removes chips from p, so an effective representative after
  // effectivization already decides the question.
  const Divisor start = d.is_effective_away_from(p) ? d : effectivize(*jac_, d, p);
  if (start.coefficient(p) >= 0) return true;
  return reduce(start, p).coefficient(p) >= 0;
}

std::int64_t ChipFiring::rank(const Divisor& d) const { return rank(d, GraphPoint::vertex(0)); }

std::int64_t ChipFiring::rank(const Divisor& d, const GraphPoint& p) const {
  if (!linear_system_nonempty(d, p)) return -1;
  const MetricGraph& g = graph();
  const Model m(g, with_point(d.support(), p));
  const std::vector<GraphPoint>& cand = m.points();

  // Every multiset of size k drawn from the candidates leaves |D - R| nonempty.
  auto all_subtractions = [&](std::int64_t k) {
    std::function<bool(std::size_t, std::int64_t, Divisor&)> rec = [&](std::size_t start, std::int64_t left, Divisor& cur) {
      if (left == 0) return linear_system_nonempty(cur, p);
      for (std::size_t i = start; i < cand.size(); ++i) {
        cur.add(cand[i], -1);
        const bool ok = rec(i, left - 1, cur);
        cur.add(cand[i], 1);
        if (!ok) return false;
      }
      return true;
    };
    Divisor cur = d;
    return rec(0, k, cur);
  };

  std::int64_t r = 0;
  while (r < d.degree() && all_subtractions(r + 1)) ++r;

  if (r > 0) {
    std::mt19937_64 rng(options_.audit_seed);
    for (int t = 0; t < options_.rank_audit_trials; ++t) {
      Divisor rest = d;
      for (std::int64_t i = 0; i < r; ++i) rest.add(random_point(g, rng), -1);
      if (!linear_system_nonempty(rest, p))
        throw Error("chipfire", "RankAuditFailure",
                    "rank " + std::to_string(r) + " of " + d.str(g) + " refuted by " + rest.str(g));
    }
  }
  return r;
}

RiemannRochReport ChipFiring::riemann_roch(const Divisor& d) const {
  const Divisor k = canonical_divisor(graph());
  RiemannRochReport rep;
  rep.degree = d.degree();
  rep.rank = rank(d);
  rep.dual_rank = rank(k - d);
  rep.holds = rep.rank - rep.dual_rank == rep.degree - static_cast<std::int64_t>(jac_->genus()) + 1;
  return rep;
}

bool ChipFiring::dichotomy_check(const Divisor& d, const GraphPoint& p) const {
  const bool effective = linear_system_nonempty(d, p);
  const Divisor reduced = reduce(d, p);
  std::vector<GraphPoint> pts = with_point(d.support(), p);
  for (const auto& q : reduced.support()) pts.push_back(q);
  const Model m(graph(), pts);

  bool moderated = false;
  bool reduced_is_moderator = false;
  for (const auto& o : enumerate_acyclic_orientations(m, options_.orientation_edge_bound)) {
    const Divisor kp = moderator(o);
    if (kp == reduced) reduced_is_moderator = true;
    if (!moderated && linear_system_nonempty(kp - d, p)) moderated = true;
    if (moderated && (effective || reduced_is_moderator)) break;
  }
  if (effective == moderated) return false;
  const bool degree_g_minus_1 = d.degree() == static_cast<std::int64_t>(jac_->genus()) - 1;
  if (degree_g_minus_1 && !effective && !reduced_is_moderator) return false;
  return true;
}

bool ChipFiring::support_lemma_check(const Subgraph& gamma, const Divisor& d_b, int samples, std::uint64_t seed) const {
  const Model& m = gamma.model;
  if (&m.graph() != &graph()) throw Error("chipfire", "InvalidSubgraph", "subgraph lives on another graph");
  if (!gamma.is_connected()) throw Error("chipfire", "InvalidSubgraph", "subgraph is not connected");
  if (std::all_of(gamma.edges.begin(), gamma.edges.end(), [](bool b) { return b; }))
    throw Error("chipfire", "InvalidSubgraph", "subgraph is not proper");
  bool is_break = false;
  try {
    is_break = is_break_divisor(gamma, d_b);
  } catch (const Error& e) {
    throw Error("chipfire", "NotABreakDivisor", e.what());
  }
  if (!is_break) throw Error("chipfire", "NotABreakDivisor", d_b.str(graph()) + " is not a break divisor of the subgraph");

  Divisor d = d_b;
  for (int v : gamma.boundary()) d.add(m.point(v), 1);
  const GraphPoint base = GraphPoint::vertex(0);
  for (int v = 0; v < static_cast<int>(m.num_vertices()); ++v) {
    if (gamma.vertices[idx(v)] && !linear_system_nonempty(d - Divisor::point(m.point(v)), base)) return false;
  }
  std::vector<int> inside;
  for (int e = 0; e < static_cast<int>(m.num_edges()); ++e)
    if (gamma.edges[idx(e)]) inside.push_back(e);
  if (inside.empty()) return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, inside.size() - 1);
  std::uniform_int_distribution<int> num(1, 96);
  for (int t = 0; t < samples; ++t) {
    const ModelEdge& me = m.edge(inside[pick(rng)]);
    const GraphPoint q = GraphPoint::on_edge(graph(), me.parent, me.from + me.length() * Rational(num(rng), 97));
    if (!linear_system_nonempty(d - Divisor::point(q), base)) return false;
  }
  return true;
}

}  // namespace tropjac
