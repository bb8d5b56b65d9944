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

#include "tropjac/plfunc.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "tropjac/error.hpp"

namespace tropjac {

std::vector<int> Subgraph::boundary() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(model.num_vertices()); ++v) {
    if (!vertices[static_cast<std::size_t>(v)]) continue;
    for (const auto& end : model.ends(v)) {
      if (!edges[static_cast<std::size_t>(end.edge)]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

bool Subgraph::is_connected() const {
  int start = -1, count = 0;
  for (int v = 0; v < static_cast<int>(model.num_vertices()); ++v) {
    if (vertices[static_cast<std::size_t>(v)]) {
      if (start < 0) start = v;
      ++count;
    }
  }
  if (start < 0) return false;
  std::vector<bool> seen(model.num_vertices(), false);
  std::deque<int> queue{start};
  seen[static_cast<std::size_t>(start)] = true;
  int reached = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    ++reached;
    for (const auto& end : model.ends(v)) {
      if (!edges[static_cast<std::size_t>(end.edge)]) continue;
      const int w = model.other_end(end);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        queue.push_back(w);
      }
    }
  }
  return reached == count;
}

int Subgraph::genus() const {
  const auto nv = std::count(vertices.begin(), vertices.end(), true);
  const auto ne = std::count(edges.begin(), edges.end(), true);
  return static_cast<int>(ne - nv + 1);
}

Subgraph whole(const Model& model) {
  return {model, std::vector<bool>(model.num_vertices(), true), std::vector<bool>(model.num_edges(), true)};
}

PLFunction::PLFunction(Model model, std::vector<Rational> values) : model_(std::move(model)), values_(std::move(values)) {
  if (values_.size() != model_.num_vertices())
    throw Error("plfunc", "ValueCount", "expected one value per model vertex");
  slopes_.reserve(model_.num_edges());
  for (const auto& e : model_.edges()) {
    const Rational s = (values_[static_cast<std::size_t>(e.head)] - values_[static_cast<std::size_t>(e.tail)]) / e.length();
    if (!is_integer(s))
      throw Error("plfunc", "NonIntegerSlope",
                  "slope " + to_string(s) + " on a sub-edge of '" + model_.graph().edge(e.parent).id + "'");
    slopes_.push_back(to_int64_exact(s));
  }
}

Rational PLFunction::value_at(const GraphPoint& p) const {
  if (auto v = model_.find_vertex(p)) return values_[static_cast<std::size_t>(*v)];
  const auto loc = model_.locate(p);
  const ModelEdge& e = model_.edge(loc.edge);
  return values_[static_cast<std::size_t>(e.tail)] + Rational(slope(loc.edge)) * loc.offset;
}

PLFunction PLFunction::refined(std::span<const GraphPoint> points) const {
  std::vector<GraphPoint> all(model_.points());
  all.insert(all.end(), points.begin(), points.end());
  Model finer(model_.graph(), all);
  std::vector<Rational> vals;
  vals.reserve(finer.num_vertices());
  for (const auto& p : finer.points()) vals.push_back(value_at(p));
  return PLFunction(std::move(finer), std::move(vals));
}

PLFunction PLFunction::operator+(const PLFunction& other) const {
  if (&model_.graph() != &other.model_.graph()) throw Error("plfunc", "ModelMismatch", "functions live on different graphs");
  PLFunction a = refined(other.model_.points());
  std::vector<Rational> vals(a.values_);
  for (std::size_t v = 0; v < vals.size(); ++v) vals[v] += other.value_at(a.model_.point(static_cast<int>(v)));
  return PLFunction(a.model_, std::move(vals));
}

PLFunction PLFunction::operator-() const {
  std::vector<Rational> vals(values_);
  for (auto& x : vals) x = -x;
  return PLFunction(model_, std::move(vals));
}

Divisor divisor_of(const PLFunction& f) {
  Divisor d;
  const Model& m = f.model();
  for (int v = 0; v < static_cast<int>(m.num_vertices()); ++v) {
    std::int64_t c = 0;
    for (const auto& end : m.ends(v)) c += f.outgoing_slope(end);
    d.add(m.point(v), c);
  }
  return d;
}

bool residue_check(const PLFunction& f, const Subgraph& u) {
  if (u.model.points() != f.model().points()) throw Error("plfunc", "ModelMismatch", "subgraph is not on the function's model");
  const Model& m = f.model();
  const auto boundary = u.boundary();
  std::set<int> on_boundary(boundary.begin(), boundary.end());
  const Divisor div = divisor_of(f);

  std::int64_t interior_degree = 0;
  std::int64_t outward = 0;
  for (int v = 0; v < static_cast<int>(m.num_vertices()); ++v) {
    if (!u.vertices[static_cast<std::size_t>(v)]) continue;
    const std::int64_t c = div.coefficient(m.point(v));
    if (on_boundary.count(v)) {
      if (c != 0)
        throw Error("plfunc", "BoundaryInSupport", "boundary point " + m.point(v).str(m.graph()) + " is in supp (f)");
      for (const auto& end : m.ends(v))
        if (!u.edges[static_cast<std::size_t>(end.edge)]) outward += f.outgoing_slope(end);
    } else {
      interior_degree += c;
    }
  }
  return interior_degree == outward;
}

namespace {

std::vector<int> bfs_tree(const Model& model, int root) {
  std::vector<int> tree;
  std::vector<bool> seen(model.num_vertices(), false);
  std::deque<int> queue{root};
  seen[static_cast<std::size_t>(root)] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& end : model.ends(v)) {
      const int w = model.other_end(end);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      tree.push_back(end.edge);
      queue.push_back(w);
    }
  }
  return tree;
}

}  // namespace

std::optional<PLFunction> equivalence_witness(const Divisor& d, const Divisor& e, const GraphPoint& base,
                                              const Jacobian& jac) {
  std::vector<GraphPoint> pts = d.support();
  for (const auto& p : e.support()) pts.push_back(p);
  pts.push_back(base);
  Model model(jac.graph(), pts);
  return equivalence_witness(d, e, base, jac, bfs_tree(model, model.vertex_of(base)));
}

std::optional<PLFunction> equivalence_witness(const Divisor& d, const Divisor& e, const GraphPoint& base,
                                              const Jacobian& jac, std::span<const int> model_tree_edges) {
  if (d.degree() != e.degree())
    throw Error("plfunc", "DegreeMismatch",
                "degrees " + std::to_string(d.degree()) + " and " + std::to_string(e.degree()) + " differ");
  const MetricGraph& graph = jac.graph();
  std::vector<GraphPoint> pts = d.support();
  for (const auto& p : e.support()) pts.push_back(p);
  pts.push_back(base);
  Model model(graph, pts);
  const std::size_t nv = model.num_vertices();
  const int root = model.vertex_of(base);

  // Tree structure from the root.
  if (model_tree_edges.size() + 1 != nv) throw Error("plfunc", "NotASpanningTree", "tree has the wrong number of edges");
  std::vector<bool> in_tree(model.num_edges(), false);
  for (int t : model_tree_edges) in_tree.at(static_cast<std::size_t>(t)) = true;
  std::vector<int> parent_end_edge(nv, -1), parent(nv, -1), order;
  std::vector<bool> seen(nv, false);
  std::deque<int> queue{root};
  seen[static_cast<std::size_t>(root)] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (const auto& end : model.ends(v)) {
      if (!in_tree[static_cast<std::size_t>(end.edge)]) continue;
      const int w = model.other_end(end);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      parent_end_edge[static_cast<std::size_t>(w)] = end.edge;
      parent[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    }
  }
  if (order.size() != nv) throw Error("plfunc", "NotASpanningTree", "tree does not span the model");

  // c0 = -sum_x (D - E)(x) * path(base -> x); coefficients per model edge.
  std::vector<std::int64_t> chain(model.num_edges(), 0);
  const Divisor diff = d - e;
  for (const auto& [p, coeff] : diff.terms()) {
    int v = model.vertex_of(p);
    while (v != root) {
      const int pe = parent_end_edge[static_cast<std::size_t>(v)];
      // path(base -> v) traverses pe from parent to v: along orientation iff v is the head.
      const std::int64_t along = model.edge(pe).head == v ? 1 : -1;
      chain[static_cast<std::size_t>(pe)] -= coeff * along;
      v = parent[static_cast<std::size_t>(v)];
    }
  }

  const CycleBasis& basis = jac.basis();
  const std::size_t g = basis.genus();
  Vector pairing = zeros(g);
  for (int me = 0; me < static_cast<int>(model.num_edges()); ++me) {
    const auto c = chain[static_cast<std::size_t>(me)];
    if (c == 0) continue;
    const ModelEdge& edge = model.edge(me);
    for (std::size_t i = 0; i < g; ++i)
      pairing[i] += Rational(basis.coefficients[i][static_cast<std::size_t>(edge.parent)] * c) * edge.length();
  }
  Vector m = g == 0 ? Vector{} : jac.period().matrix().solve(pairing);
  for (const auto& x : m)
    if (!is_integer(x)) return std::nullopt;
  for (int me = 0; me < static_cast<int>(model.num_edges()); ++me) {
    const int parent_edge = model.edge(me).parent;
    for (std::size_t j = 0; j < g; ++j)
      chain[static_cast<std::size_t>(me)] -= to_int64_exact(m[j]) * basis.coefficients[j][static_cast<std::size_t>(parent_edge)];
  }

  // f(x) = Q(c, path(base -> x)).
  std::vector<Rational> values(nv, Rational(0));
  for (int v : order) {
    if (v == root) continue;
    const int pe = parent_end_edge[static_cast<std::size_t>(v)];
    const ModelEdge& edge = model.edge(pe);
    const Rational step = Rational(chain[static_cast<std::size_t>(pe)]) * edge.length();
    values[static_cast<std::size_t>(v)] = values[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] + (edge.head == v ? step : Rational(-step));
  }
  PLFunction f(std::move(model), std::move(values));
  for (int me = 0; me < static_cast<int>(f.model().num_edges()); ++me)
    if (f.slope(me) != chain[static_cast<std::size_t>(me)])
      throw Error("plfunc", "InternalError", "corrected chain is not closed against the cycle lattice");
  return f;
}

Subgraph max_locus(const PLFunction& f) {
  const Model& m = f.model();
  const Rational top = *std::max_element(f.values().begin(), f.values().end());
  Subgraph s{m, std::vector<bool>(m.num_vertices(), false), std::vector<bool>(m.num_edges(), false)};
  for (std::size_t v = 0; v < m.num_vertices(); ++v) s.vertices[v] = f.values()[v] == top;
  for (std::size_t e = 0; e < m.num_edges(); ++e)
    s.edges[e] = s.vertices[static_cast<std::size_t>(m.edges()[e].tail)] && s.vertices[static_cast<std::size_t>(m.edges()[e].head)];
  return s;
}

}  // namespace tropjac
