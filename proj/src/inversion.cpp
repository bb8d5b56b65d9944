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

#include "tropjac/inversion.hpp"

#include <deque>
#include <functional>
#include <numeric>
#include <random>

#include "tropjac/error.hpp"
#include "tropjac/theta.hpp"

namespace tropjac {

namespace {

struct Sample {
  Rational t;
  Rational value;
  ThetaSlopes slopes;
};

// Sandwich refinement of a convex piecewise-linear function with integer
// slopes on [a, b]: the tangent lines at both ends meet at t*; if f(t*) lies
// on them there is exactly one breakpoint, otherwise split at t*. Each split
// strictly narrows the integer slope range, so this terminates.
void refine_envelope(const std::function<Sample(const Rational&)>& eval, const Sample& a, const Sample& b,
                     std::vector<EnvelopeBreakpoint>& out) {
  const Rational& sa = a.slopes.right;
  const Rational& sb = b.slopes.left;
  if (sa == sb) return;
  const Rational t = (b.value - a.value + sa * a.t - sb * b.t) / (sa - sb);
  const Sample mid = eval(t);
  if (mid.value == a.value + sa * (t - a.t)) {
    out.push_back({t, sa, sb, to_int64_exact(sb - sa)});
    return;
  }
  refine_envelope(eval, a, mid, out);
  if (mid.slopes.left != mid.slopes.right)
    out.push_back({t, mid.slopes.left, mid.slopes.right, to_int64_exact(mid.slopes.right - mid.slopes.left)});
  refine_envelope(eval, mid, b, out);
}

}  // namespace

EdgeEnvelope edge_envelope(const Jacobian& jac, const GraphPoint& base, const Vector& lambda, int edge) {
  const MetricGraph& graph = jac.graph();
  const Edge& e = graph.edge(edge);
  const PeriodMatrix& q = jac.period();
  const Vector w = jac.basis().direction(edge);
  const Vector start = jac.lift(GraphPoint::vertex(e.tail), base) - lambda;

  auto eval = [&](const Rational& t) {
    ThetaValue th = theta(q, start + t * w);
    return Sample{t, th.value, theta_slopes(th, w)};
  };
  const Sample a = eval(Rational(0));
  const Sample b = eval(e.length);
  EdgeEnvelope env{edge, w, a.slopes.right, b.slopes.left, {}};
  refine_envelope(eval, a, b, env.breakpoints);
  return env;
}

Divisor pullback_theta(const Jacobian& jac, const GraphPoint& base, const Vector& lambda) {
  const MetricGraph& graph = jac.graph();
  const PeriodMatrix& q = jac.period();
  if (lambda.size() != jac.genus()) throw Error("inversion", "DimensionMismatch", "lambda has wrong dimension");
  Divisor d;
  for (int v = 0; v < static_cast<int>(graph.num_vertices()); ++v) {
    const ThetaValue th = theta(q, jac.lift(GraphPoint::vertex(v), base) - lambda);
    Rational c = 0;
    for (const auto& end : graph.ends(v)) {
      const Vector w = jac.basis().direction(end.edge);
      c += theta_slopes(th, end.at_tail ? w : -w).right;
    }
    d.add(GraphPoint::vertex(v), to_int64_exact(c));
  }
  for (int e = 0; e < static_cast<int>(graph.num_edges()); ++e) {
    for (const auto& bp : edge_envelope(jac, base, lambda, e).breakpoints)
      d.add(GraphPoint::on_edge(graph, e, bp.offset), bp.multiplicity);
  }
  if (!d.is_effective() || d.degree() != static_cast<std::int64_t>(jac.genus()))
    throw Error("inversion", "InternalError", "theta pullback is not effective of degree g: " + d.str(graph));
  return d;
}

Vector kappa(const Jacobian& jac, const GraphPoint& base, int probes) {
  if (auto cached = jac.cached_kappa(base)) return *cached;
  const std::size_t g = jac.genus();
  const Vector k = jac.canonical(-jac.abel_jacobi(pullback_theta(jac, base, zeros(g)), base));
  std::mt19937_64 rng(0x6b617070ULL);
  std::uniform_int_distribution<int> num(-60, 60);
  std::uniform_int_distribution<int> den(1, 13);
  for (int i = 0; i < probes; ++i) {
    Vector lambda(g);
    for (auto& x : lambda) x = Rational(num(rng), den(rng));
    const Vector other = lambda - jac.abel_jacobi(pullback_theta(jac, base, lambda), base);
    if (!jac.equal(k, other))
      throw Error("inversion", "KappaNotConstant",
                  "kappa " + format_vector(k) + " differs from " + format_vector(other) + " at lambda " + format_vector(lambda));
  }
  jac.store_kappa(base, k);
  return k;
}

Divisor canonical_effective(const Jacobian& jac, const Divisor& d, const GraphPoint& base) {
  if (d.degree() != static_cast<std::int64_t>(jac.genus()))
    throw Error("inversion", "DegreeMismatch", "canonical_effective needs degree g = " + std::to_string(jac.genus()));
  return pullback_theta(jac, base, jac.abel_jacobi(d, base) + kappa(jac, base));
}

bool theta_support_test(const Jacobian& jac, const Divisor& d, const GraphPoint& q, const GraphPoint& base) {
  if (d.degree() != static_cast<std::int64_t>(jac.genus()))
    throw Error("inversion", "DegreeMismatch", "theta_support_test needs degree g = " + std::to_string(jac.genus()));
  const Vector shift = jac.abel_jacobi(d, base) + kappa(jac, base);
  return on_theta_divisor(jac.period(), jac.lift(q, base) - shift);
}

bool riemann_membership(const Jacobian& jac, const Vector& c_value, const GraphPoint& base) {
  return on_theta_divisor(jac.period(), c_value + kappa(jac, base));
}

bool is_break_divisor(const MetricGraph& graph, const Divisor& d) {
  const auto support = d.support();
  return is_break_divisor(whole(Model(graph, support)), d);
}

bool is_break_divisor(const Subgraph& gamma, const Divisor& d) {
  const Model& m = gamma.model;
  if (!d.is_effective() || d.degree() != gamma.genus()) return false;
  if (!gamma.is_connected()) throw Error("inversion", "InvalidSubgraph", "subgraph must be connected");

  struct Chip {
    int vertex;
    int count;
    std::vector<EdgeEnd> ends;
  };
  std::vector<Chip> chips;
  for (const auto& [p, c] : d.terms()) {
    auto v = m.find_vertex(p);
    if (!v || !gamma.vertices[static_cast<std::size_t>(*v)])
      throw Error("inversion", "PointOffSubgraph", "chip at " + p.str(m.graph()) + " is not a subgraph vertex");
    Chip chip{*v, static_cast<int>(c), {}};
    for (const auto& end : m.ends(*v))
      if (gamma.edges[static_cast<std::size_t>(end.edge)]) chip.ends.push_back(end);
    if (static_cast<std::size_t>(chip.count) > chip.ends.size()) return false;
    chips.push_back(std::move(chip));
  }

  std::vector<int> cut_count(m.num_edges(), 0);
  auto remaining_connected = [&]() {
    std::vector<int> parent(m.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
    };
    for (int e = 0; e < static_cast<int>(m.num_edges()); ++e) {
      if (!gamma.edges[static_cast<std::size_t>(e)] || cut_count[static_cast<std::size_t>(e)] > 0) continue;
      parent[static_cast<std::size_t>(find(m.edge(e).tail))] = find(m.edge(e).head);
    }
    int root = -1;
    for (int v = 0; v < static_cast<int>(m.num_vertices()); ++v) {
      if (!gamma.vertices[static_cast<std::size_t>(v)]) continue;
      if (root < 0) root = find(v);
      else if (find(v) != root) return false;
    }
    return true;
  };

  // Choose `count` distinct directions per chip; an edge cut from both ends
  // would strand its middle, so it is pruned immediately.
  std::function<bool(std::size_t, std::size_t, int)> search = [&](std::size_t chip, std::size_t start, int left) -> bool {
    if (chip == chips.size()) return remaining_connected();
    if (left == 0) return search(chip + 1, 0, chip + 1 < chips.size() ? chips[chip + 1].count : 0);
    const auto& ends = chips[chip].ends;
    for (std::size_t i = start; i + static_cast<std::size_t>(left) <= ends.size(); ++i) {
      auto& cc = cut_count[static_cast<std::size_t>(ends[i].edge)];
      if (cc > 0) continue;
      ++cc;
      const bool ok = search(chip, i + 1, left - 1);
      --cc;
      if (ok) return true;
    }
    return false;
  };
  if (chips.empty()) return remaining_connected();
  return search(0, 0, chips[0].count);
}

bool refined_residue_audit(const Jacobian& jac, const GraphPoint& base, const Vector& lambda) {
  const MetricGraph& graph = jac.graph();
  const PeriodMatrix& q = jac.period();
  const std::size_t g = jac.genus();
  const Divisor d = pullback_theta(jac, base, lambda);
  const auto support = d.support();
  const Model m(graph, support);

  // Continuous lift on a spanning tree of the model (the fundamental domain).
  std::vector<std::optional<Vector>> lift(m.num_vertices());
  std::vector<bool> tree_edge(m.num_edges(), false);
  lift[0] = jac.lift(m.point(0), base);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& end : m.ends(v)) {
      const int w = m.other_end(end);
      if (lift[static_cast<std::size_t>(w)]) continue;
      const ModelEdge& me = m.edge(end.edge);
      const Vector step = me.length() * jac.basis().direction(me.parent);
      lift[static_cast<std::size_t>(w)] = end.at_tail ? *lift[static_cast<std::size_t>(v)] + step : *lift[static_cast<std::size_t>(v)] - step;
      tree_edge[static_cast<std::size_t>(end.edge)] = true;
      queue.push_back(w);
    }
  }

  Vector lhs = zeros(g);
  for (const auto& [p, c] : d.terms()) lhs = lhs + Rational(c) * *lift[static_cast<std::size_t>(m.vertex_of(p))];

  // Each non-tree model edge is broken at its midpoint, giving two boundary
  // ends whose outward direction continues into the removed point.
  Vector rhs = zeros(g);
  auto boundary_term = [&](const Vector& z, const Vector& nu) {
    const ThetaValue th = theta(q, z - lambda);
    const Rational slope = theta_slopes(th, nu).right;
    rhs = rhs + (slope * z - th.value * nu);
  };
  for (int e = 0; e < static_cast<int>(m.num_edges()); ++e) {
    if (tree_edge[static_cast<std::size_t>(e)]) continue;
    const ModelEdge& me = m.edge(e);
    const Vector dir = jac.basis().direction(me.parent);
    const Rational half = me.length() / 2;
    boundary_term(*lift[static_cast<std::size_t>(me.tail)] + half * dir, dir);
    boundary_term(*lift[static_cast<std::size_t>(me.head)] - half * dir, -dir);
  }
  return lhs == rhs;
}

}  // namespace tropjac
