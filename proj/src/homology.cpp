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

#include "tropjac/homology.hpp"

#include <algorithm>
#include <deque>

#include "tropjac/error.hpp"
#include "tropjac/lattice.hpp"

namespace tropjac {

namespace {

struct TreeLinks {
  std::vector<int> parent_edge;  // -1 at the root
  std::vector<int> parent_vertex;
  std::vector<int> order;        // BFS order from the root
};

TreeLinks tree_links(const MetricGraph& graph, const std::vector<bool>& in_tree) {
  const std::size_t n = graph.num_vertices();
  TreeLinks t{std::vector<int>(n, -1), std::vector<int>(n, -1), {}};
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    t.order.push_back(v);
    for (const auto& end : graph.ends(v)) {
      if (!in_tree[static_cast<std::size_t>(end.edge)]) continue;
      const Edge& e = graph.edge(end.edge);
      const int w = end.at_tail ? e.head : e.tail;
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      t.parent_edge[static_cast<std::size_t>(w)] = end.edge;
      t.parent_vertex[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    }
  }
  if (t.order.size() != n) throw Error("homology", "NotASpanningTree", "tree edges do not reach every vertex");
  return t;
}

CycleBasis basis_from_tree(const MetricGraph& graph, std::vector<bool> in_tree) {
  const TreeLinks links = tree_links(graph, in_tree);
  CycleBasis basis;
  for (int e = 0; e < static_cast<int>(graph.num_edges()); ++e)
    (in_tree[static_cast<std::size_t>(e)] ? basis.tree_edges : basis.non_tree_edges).push_back(e);

  // Adds the tree path from v up to the root with the given sign.
  auto add_path_to_root = [&](std::vector<int>& coeff, int v, int sign) {
    while (links.parent_edge[static_cast<std::size_t>(v)] >= 0) {
      const int pe = links.parent_edge[static_cast<std::size_t>(v)];
      // Moving from v to its parent: with the edge's orientation iff v is the tail.
      coeff[static_cast<std::size_t>(pe)] += sign * (graph.edge(pe).tail == v ? 1 : -1);
      v = links.parent_vertex[static_cast<std::size_t>(v)];
    }
  };
  for (int e : basis.non_tree_edges) {
    std::vector<int> coeff(graph.num_edges(), 0);
    coeff[static_cast<std::size_t>(e)] = 1;
    // After e we stand at its head and must return to its tail.
    add_path_to_root(coeff, graph.edge(e).head, 1);
    add_path_to_root(coeff, graph.edge(e).tail, -1);
    basis.coefficients.push_back(std::move(coeff));
  }
  return basis;
}

}  // namespace

Vector CycleBasis::direction(int edge) const {
  Vector w(genus());
  for (std::size_t i = 0; i < genus(); ++i) w[i] = Rational(coefficients[i][static_cast<std::size_t>(edge)]);
  return w;
}

CycleBasis cycle_basis(const MetricGraph& graph) {
  std::vector<bool> in_tree(graph.num_edges(), false);
  std::vector<bool> seen(graph.num_vertices(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& end : graph.ends(v)) {
      const Edge& e = graph.edge(end.edge);
      const int w = end.at_tail ? e.head : e.tail;
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      in_tree[static_cast<std::size_t>(end.edge)] = true;
      queue.push_back(w);
    }
  }
  return basis_from_tree(graph, std::move(in_tree));
}

CycleBasis cycle_basis(const MetricGraph& graph, std::span<const int> tree_edges) {
  if (tree_edges.size() + 1 != graph.num_vertices())
    throw Error("homology", "NotASpanningTree", "a spanning tree has #vertices - 1 edges");
  std::vector<bool> in_tree(graph.num_edges(), false);
  for (int e : tree_edges) {
    if (e < 0 || e >= static_cast<int>(graph.num_edges()) || in_tree[static_cast<std::size_t>(e)])
      throw Error("homology", "NotASpanningTree", "invalid or repeated tree edge");
    if (graph.edge(e).is_loop()) throw Error("homology", "NotASpanningTree", "a loop cannot be a tree edge");
    in_tree[static_cast<std::size_t>(e)] = true;
  }
  return basis_from_tree(graph, std::move(in_tree));
}

PeriodMatrix::PeriodMatrix(Matrix q) : q_(std::move(q)) {
  if (!q_.is_symmetric()) throw Error("homology", "NotSymmetric", "period matrix must be symmetric");
  for (const auto& m : q_.leading_minors())
    if (m <= 0) throw Error("homology", "NotPositiveDefinite", "period matrix must be positive definite");
}

Rational chain_pairing(const MetricGraph& graph, std::span<const int> a, std::span<const int> b) {
  Rational s = 0;
  for (std::size_t e = 0; e < graph.num_edges(); ++e)
    if (a[e] != 0 && b[e] != 0) s += Rational(a[e] * b[e]) * graph.edge(static_cast<int>(e)).length;
  return s;
}

PeriodMatrix period_matrix(const MetricGraph& graph, const CycleBasis& basis) {
  const std::size_t g = basis.genus();
  Matrix q(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) q(i, j) = chain_pairing(graph, basis.coefficients[i], basis.coefficients[j]);
  return PeriodMatrix(std::move(q));
}

bool jac_equal(const Vector& u, const Vector& v, const PeriodMatrix& q) {
  if (u.size() != v.size() || u.size() != q.genus())
    throw Error("homology", "DimensionMismatch", "Jacobian points of different dimension");
  if (q.genus() == 0) return true;
  const Vector n = q.matrix().solve(u - v);
  return std::all_of(n.begin(), n.end(), [](const Rational& x) { return is_integer(x); });
}

Vector jac_canonical(const Vector& u, const PeriodMatrix& q) {
  if (q.genus() == 0) return {};
  const Vector c = q.matrix().solve(u);
  const ClosestVectors nearest = closest_vectors(q.matrix(), c);
  return u - q.matrix() * nearest.points.front();
}

Jacobian::Jacobian(const MetricGraph& graph) : Jacobian(graph, cycle_basis(graph)) {}

Jacobian::Jacobian(const MetricGraph& graph, CycleBasis basis)
    : graph_(&graph), basis_(std::move(basis)), q_(period_matrix(graph, basis_)) {
  std::vector<bool> in_tree(graph.num_edges(), false);
  for (int e : basis_.tree_edges) in_tree[static_cast<std::size_t>(e)] = true;
  const TreeLinks links = tree_links(graph, in_tree);
  vertex_lifts_.assign(graph.num_vertices(), zeros(genus()));
  for (int v : links.order) {
    const int pe = links.parent_edge[static_cast<std::size_t>(v)];
    if (pe < 0) continue;
    const Edge& e = graph.edge(pe);
    const Vector step = e.length * basis_.direction(pe);
    const Vector& from = vertex_lifts_[static_cast<std::size_t>(links.parent_vertex[static_cast<std::size_t>(v)])];
    vertex_lifts_[static_cast<std::size_t>(v)] = e.head == v ? from + step : from - step;
  }
}

Jacobian::Jacobian(const Jacobian& other)
    : graph_(other.graph_), basis_(other.basis_), q_(other.q_), vertex_lifts_(other.vertex_lifts_) {
  std::lock_guard<std::mutex> lock(other.kappa_mutex_);
  kappa_cache_ = other.kappa_cache_;
}

Vector Jacobian::lift(const GraphPoint& p) const {
  if (p.is_vertex()) return vertex_lifts_.at(static_cast<std::size_t>(p.vertex_index()));
  const Edge& e = graph_->edge(p.edge_index());
  return vertex_lifts_[static_cast<std::size_t>(e.tail)] + p.offset() * basis_.direction(p.edge_index());
}

Vector Jacobian::lift(const GraphPoint& p, const GraphPoint& base) const { return lift(p) - lift(base); }

Vector Jacobian::abel_jacobi(const Divisor& d, const GraphPoint& base) const {
  Vector u = zeros(genus());
  const Vector base_lift = lift(base);
  for (const auto& [p, c] : d.terms()) u = u + Rational(c) * (lift(p) - base_lift);
  return u;
}

bool Jacobian::is_principal(const Divisor& d, const GraphPoint& base) const {
  return d.degree() == 0 && equal(abel_jacobi(d, base), zeros(genus()));
}

std::optional<Vector> Jacobian::cached_kappa(const GraphPoint& base) const {
  std::lock_guard<std::mutex> lock(kappa_mutex_);
  auto it = kappa_cache_.find(base);
  if (it == kappa_cache_.end()) return std::nullopt;
  return it->second;
}

void Jacobian::store_kappa(const GraphPoint& base, const Vector& kappa) const {
  std::lock_guard<std::mutex> lock(kappa_mutex_);
  kappa_cache_.emplace(base, kappa);
}

Vector abel_jacobi(const Divisor& d, const GraphPoint& base, const Jacobian& jac) { return jac.abel_jacobi(d, base); }

bool is_principal(const Divisor& d, const GraphPoint& base, const Jacobian& jac) { return jac.is_principal(d, base); }

}  // namespace tropjac
