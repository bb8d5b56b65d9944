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

#include "tropjac/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "tropjac/error.hpp"

namespace tropjac {

MetricGraph::MetricGraph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  if (vertices.empty()) throw Error("graph", "EmptyGraph", "graph has no vertices");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw Error("graph", "DuplicateIdentifier", "duplicate vertex identifier '" + *std::adjacent_find(vertices.begin(), vertices.end()) + "'");
  vertex_ids_ = std::move(vertices);

  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].id == edges[i - 1].id)
      throw Error("graph", "DuplicateIdentifier", "duplicate edge identifier '" + edges[i].id + "'");

  auto index_of = [&](const std::string& id) {
    auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
    if (it == vertex_ids_.end() || *it != id) throw Error("graph", "UnknownVertex", "edge end '" + id + "' is not a vertex");
    return static_cast<int>(it - vertex_ids_.begin());
  };

  ends_.assign(vertex_ids_.size(), {});
  for (const auto& spec : edges) {
    if (spec.length <= 0)
      throw Error("graph", "NonPositiveLength", "edge '" + spec.id + "' has non-positive length " + to_string(spec.length));
    if (std::binary_search(vertex_ids_.begin(), vertex_ids_.end(), spec.id))
      throw Error("graph", "DuplicateIdentifier", "identifier '" + spec.id + "' names both a vertex and an edge");
    Edge e{spec.id, index_of(spec.tail), index_of(spec.head), spec.length};
    const int idx = static_cast<int>(edges_.size());
    ends_[static_cast<std::size_t>(e.tail)].push_back({idx, true});
    ends_[static_cast<std::size_t>(e.head)].push_back({idx, false});
    edges_.push_back(std::move(e));
  }

  // Connectivity.
  std::vector<int> parent(vertex_ids_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
  int components = static_cast<int>(vertex_ids_.size());
  for (const auto& e : edges_) {
    int a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  if (components != 1) throw Error("graph", "DisconnectedGraph", "graph has " + std::to_string(components) + " components");
}

std::optional<int> MetricGraph::find_vertex(const std::string& id) const {
  auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
  if (it == vertex_ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - vertex_ids_.begin());
}

std::optional<int> MetricGraph::find_edge(const std::string& id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id, [](const Edge& e, const std::string& s) { return e.id < s; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

Rational MetricGraph::total_length() const {
  Rational total = 0;
  for (const auto& e : edges_) total += e.length;
  return total;
}

bool MetricGraph::is_compact_curve() const {
  for (const auto& ends : ends_)
    if (ends.size() == 1) return false;
  return true;
}

int genus(const MetricGraph& graph) {
  return static_cast<int>(graph.num_edges()) - static_cast<int>(graph.num_vertices()) + 1;
}

GraphPoint GraphPoint::vertex(int v) {
  GraphPoint p;
  p.vertex_ = v;
  return p;
}

GraphPoint GraphPoint::on_edge(const MetricGraph& graph, int edge, const Rational& offset) {
  const Edge& e = graph.edge(edge);
  if (offset < 0 || offset > e.length)
    throw Error("graph", "PointOffEdge", "offset " + to_string(offset) + " outside edge '" + e.id + "' of length " + to_string(e.length));
  if (offset == 0) return vertex(e.tail);
  if (offset == e.length) return vertex(e.head);
  GraphPoint p;
  p.edge_ = edge;
  p.offset_ = offset;
  return p;
}

std::strong_ordering GraphPoint::operator<=>(const GraphPoint& other) const {
  if (is_vertex() != other.is_vertex()) return is_vertex() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (is_vertex()) return vertex_ <=> other.vertex_;
  if (edge_ != other.edge_) return edge_ <=> other.edge_;
  if (offset_ < other.offset_) return std::strong_ordering::less;
  if (offset_ > other.offset_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool GraphPoint::operator==(const GraphPoint& other) const { return (*this <=> other) == 0; }

std::string GraphPoint::str(const MetricGraph& graph) const {
  if (is_vertex()) return graph.vertex_id(vertex_);
  return graph.edge(edge_).id + "@" + to_string(offset_);
}

Divisor Divisor::point(const GraphPoint& p, std::int64_t coefficient) {
  Divisor d;
  d.add(p, coefficient);
  return d;
}

void Divisor::add(const GraphPoint& p, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coefficients_.try_emplace(p, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coefficients_.erase(it);
  }
}

std::int64_t Divisor::coefficient(const GraphPoint& p) const {
  auto it = coefficients_.find(p);
  return it == coefficients_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, c] : coefficients_) d += c;
  return d;
}

bool Divisor::is_effective() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const auto& t) { return t.second > 0; });
}

bool Divisor::is_effective_away_from(const GraphPoint& p) const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [&](const auto& t) { return t.first == p || t.second > 0; });
}

std::vector<GraphPoint> Divisor::support() const {
  std::vector<GraphPoint> s;
  s.reserve(coefficients_.size());
  for (const auto& [p, c] : coefficients_) s.push_back(p);
  return s;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  for (const auto& [p, c] : other.coefficients_) add(p, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  for (const auto& [p, c] : other.coefficients_) add(p, -c);
  return *this;
}

Divisor Divisor::operator+(const Divisor& other) const {
  Divisor d(*this);
  d += other;
  return d;
}

Divisor Divisor::operator-(const Divisor& other) const {
  Divisor d(*this);
  d -= other;
  return d;
}

Divisor Divisor::operator-() const { return Divisor() - *this; }

Divisor operator*(std::int64_t k, const Divisor& d) {
  Divisor out;
  for (const auto& [p, c] : d.terms()) out.add(p, k * c);
  return out;
}

std::string Divisor::str(const MetricGraph& graph) const {
  if (coefficients_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : coefficients_) {
    std::int64_t magnitude = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1) s += std::to_string(magnitude) + "*";
    s += p.str(graph);
    first = false;
  }
  return s;
}

Divisor canonical_divisor(const MetricGraph& graph) {
  Divisor k;
  for (int v = 0; v < static_cast<int>(graph.num_vertices()); ++v) k.add(GraphPoint::vertex(v), graph.valence(v) - 2);
  return k;
}

Model::Model(const MetricGraph& graph, std::span<const GraphPoint> points) : graph_(&graph) {
  for (int v = 0; v < static_cast<int>(graph.num_vertices()); ++v) points_.push_back(GraphPoint::vertex(v));

  std::vector<std::set<GraphPoint>> cuts(graph.num_edges());
  for (const auto& p : points) {
    if (p.is_vertex()) {
      if (p.vertex_index() < 0 || p.vertex_index() >= static_cast<int>(graph.num_vertices()))
        throw Error("graph", "PointOffGraph", "vertex index out of range");
      continue;
    }
    if (p.edge_index() < 0 || p.edge_index() >= static_cast<int>(graph.num_edges()))
      throw Error("graph", "PointOffGraph", "edge index out of range");
    cuts[static_cast<std::size_t>(p.edge_index())].insert(p);
  }
  for (int e = 0; e < static_cast<int>(graph.num_edges()); ++e) {
    const Edge& edge = graph.edge(e);
    auto& on_edge = cuts[static_cast<std::size_t>(e)];
    if (edge.is_loop() && on_edge.empty()) on_edge.insert(GraphPoint::on_edge(graph, e, edge.length / 2));
    int previous = edge.tail;
    Rational from = 0;
    for (const auto& p : on_edge) {
      const int v = static_cast<int>(points_.size());
      points_.push_back(p);
      edges_.push_back({previous, v, e, from, p.offset()});
      previous = v;
      from = p.offset();
    }
    edges_.push_back({previous, edge.head, e, from, edge.length});
  }
  for (std::size_t v = 0; v < points_.size(); ++v) index_.emplace(points_[v], static_cast<int>(v));
  ends_.assign(points_.size(), {});
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    ends_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].tail)].push_back({e, true});
    ends_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].head)].push_back({e, false});
  }
}

int Model::other_end(const EdgeEnd& end) const {
  const ModelEdge& e = edge(end.edge);
  return end.at_tail ? e.head : e.tail;
}

std::optional<int> Model::find_vertex(const GraphPoint& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Model::vertex_of(const GraphPoint& p) const {
  auto v = find_vertex(p);
  if (!v) throw Error("graph", "NotAModelVertex", "point " + p.str(*graph_) + " is not a vertex of the model");
  return *v;
}

Model::Location Model::locate(const GraphPoint& p) const {
  if (auto v = find_vertex(p)) {
    const auto& e = ends(*v);
    if (e.empty()) throw Error("graph", "PointOffGraph", "isolated vertex has no incident edge");
    return {e.front().edge, e.front().at_tail ? Rational(0) : edge(e.front().edge).length()};
  }
  if (p.is_vertex()) throw Error("graph", "PointOffGraph", "vertex missing from model");
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const ModelEdge& me = edges_[static_cast<std::size_t>(e)];
    if (me.parent == p.edge_index() && me.from < p.offset() && p.offset() < me.to) return {e, p.offset() - me.from};
  }
  throw Error("graph", "PointOffGraph", "point not found on any model edge");
}

GraphPoint Model::point_along(const EdgeEnd& end, const Rational& d) const {
  const ModelEdge& me = edge(end.edge);
  if (d < 0 || d > me.length()) throw Error("graph", "PointOffEdge", "distance exceeds model edge length");
  const Rational offset = end.at_tail ? me.from + d : me.to - d;
  return GraphPoint::on_edge(*graph_, me.parent, offset);
}

Model refine(const MetricGraph& graph, std::span<const GraphPoint> points) { return Model(graph, points); }

std::vector<Rational> distances_from(const Model& model, const GraphPoint& p) {
  const int source = model.vertex_of(p);
  std::vector<std::optional<Rational>> dist(model.num_vertices());
  std::vector<bool> done(model.num_vertices(), false);
  dist[static_cast<std::size_t>(source)] = Rational(0);
  // Dense Dijkstra; models are desk-sized.
  for (std::size_t iter = 0; iter < model.num_vertices(); ++iter) {
    int best = -1;
    for (int v = 0; v < static_cast<int>(model.num_vertices()); ++v) {
      if (done[static_cast<std::size_t>(v)] || !dist[static_cast<std::size_t>(v)]) continue;
      if (best < 0 || *dist[static_cast<std::size_t>(v)] < *dist[static_cast<std::size_t>(best)]) best = v;
    }
    if (best < 0) break;
    done[static_cast<std::size_t>(best)] = true;
    for (const auto& end : model.ends(best)) {
      const int w = model.other_end(end);
      Rational candidate = *dist[static_cast<std::size_t>(best)] + model.edge(end.edge).length();
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (!dw || candidate < *dw) dw = candidate;
    }
  }
  std::vector<Rational> out;
  out.reserve(dist.size());
  for (auto& d : dist) out.push_back(d.value());
  return out;
}

Rational distance(const MetricGraph& graph, const GraphPoint& p, const GraphPoint& q) {
  if (p == q) return 0;
  std::vector<GraphPoint> pts{p, q};
  Model model(graph, pts);
  return distances_from(model, p)[static_cast<std::size_t>(model.vertex_of(q))];
}

}  // namespace tropjac
