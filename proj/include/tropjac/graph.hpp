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

// Metric graphs (compact tropical curves), points on them, divisors and
// refinements (models).

#ifndef TROPJAC_GRAPH_HPP
#define TROPJAC_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropjac/rational.hpp"

namespace tropjac {

struct Edge {
  std::string id;
  int tail = 0;
  int head = 0;
  Rational length;

  bool is_loop() const { return tail == head; }
};

/// An edge end seen from a vertex. `at_tail` means the vertex is the tail of
/// the edge, so leaving the vertex moves in the edge's orientation.
struct EdgeEnd {
  int edge = 0;
  bool at_tail = true;

  auto operator<=>(const EdgeEnd&) const = default;
};

/// Connected multigraph with positive rational edge lengths. Loops and
/// parallel edges are allowed. Vertices and edges are stored sorted by
/// identifier, so indices are deterministic. Immutable.
class MetricGraph {
 public:
  /// `edge_ends` holds (tail id, head id) per edge. Throws
  /// graph.{EmptyGraph,DuplicateIdentifier,UnknownVertex,NonPositiveLength,
  /// DisconnectedGraph}.
  struct EdgeSpec {
    std::string id;
    std::string tail;
    std::string head;
    Rational length;
  };
  MetricGraph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  std::size_t num_vertices() const { return vertex_ids_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::string& vertex_id(int v) const { return vertex_ids_.at(static_cast<std::size_t>(v)); }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  std::optional<int> find_vertex(const std::string& id) const;
  std::optional<int> find_edge(const std::string& id) const;

  /// Edge ends at v; a loop contributes two ends.
  const std::vector<EdgeEnd>& ends(int v) const { return ends_.at(static_cast<std::size_t>(v)); }
  int valence(int v) const { return static_cast<int>(ends(v).size()); }
  Rational total_length() const;

  /// True when no vertex is 1-valent (every point has valence >= 2).
  bool is_compact_curve() const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeEnd>> ends_;
};

/// #edges - #vertices + 1.
int genus(const MetricGraph& graph);

/// A point of the graph: a vertex, or an interior point of an edge at an
/// offset measured from the edge's tail. Offsets 0 and length are always
/// stored as the corresponding vertex.
class GraphPoint {
 public:
  static GraphPoint vertex(int v);
  /// Canonicalizes endpoints to vertices. Throws graph.PointOffEdge unless
  /// 0 <= offset <= length.
  static GraphPoint on_edge(const MetricGraph& graph, int edge, const Rational& offset);

  bool is_vertex() const { return vertex_ >= 0; }
  int vertex_index() const { return vertex_; }
  int edge_index() const { return edge_; }
  const Rational& offset() const { return offset_; }

  /// Vertices first (by index), then edge points by (edge, offset).
  std::strong_ordering operator<=>(const GraphPoint& other) const;
  bool operator==(const GraphPoint& other) const;

  std::string str(const MetricGraph& graph) const;

 private:
  int vertex_ = -1;
  int edge_ = -1;
  Rational offset_;
};

/// Finite integer combination of graph points. Zero coefficients are never
/// stored.
class Divisor {
 public:
  Divisor() = default;
  static Divisor point(const GraphPoint& p, std::int64_t coefficient = 1);

  void add(const GraphPoint& p, std::int64_t coefficient);
  std::int64_t coefficient(const GraphPoint& p) const;
  std::int64_t degree() const;
  bool is_effective() const;
  /// Effective after ignoring the coefficient at p.
  bool is_effective_away_from(const GraphPoint& p) const;
  bool empty() const { return coefficients_.empty(); }
  std::vector<GraphPoint> support() const;
  const std::map<GraphPoint, std::int64_t>& terms() const { return coefficients_; }

  Divisor operator+(const Divisor& other) const;
  Divisor operator-(const Divisor& other) const;
  Divisor operator-() const;
  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  bool operator==(const Divisor& other) const = default;

  /// "2*v1 - A@1/2 + v3"; "0" for the empty divisor.
  std::string str(const MetricGraph& graph) const;

 private:
  std::map<GraphPoint, std::int64_t> coefficients_;
};

Divisor operator*(std::int64_t k, const Divisor& d);

/// Sum over vertices of (valence - 2) v; degree 2g - 2.
Divisor canonical_divisor(const MetricGraph& graph);

/// A sub-edge of a refinement: the part [from, to] of a graph edge, oriented
/// like the parent edge.
struct ModelEdge {
  int tail = 0;
  int head = 0;
  int parent = 0;
  Rational from;
  Rational to;

  Rational length() const { return to - from; }
};

/// A loopless refinement of a MetricGraph whose vertex set contains a given
/// set of points. Vertex i < num_vertices(graph) is graph vertex i. Unsplit
/// loops receive one auxiliary midpoint vertex. Keeps a pointer to the
/// graph, which must outlive the model.
class Model {
 public:
  Model(const MetricGraph& graph, std::span<const GraphPoint> points);

  const MetricGraph& graph() const { return *graph_; }
  std::size_t num_vertices() const { return points_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const GraphPoint& point(int v) const { return points_.at(static_cast<std::size_t>(v)); }
  const std::vector<GraphPoint>& points() const { return points_; }
  const ModelEdge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<ModelEdge>& edges() const { return edges_; }
  const std::vector<EdgeEnd>& ends(int v) const { return ends_.at(static_cast<std::size_t>(v)); }
  int valence(int v) const { return static_cast<int>(ends(v).size()); }
  int other_end(const EdgeEnd& end) const;

  std::optional<int> find_vertex(const GraphPoint& p) const;
  /// Throws graph.NotAModelVertex.
  int vertex_of(const GraphPoint& p) const;

  /// Model edge containing p in its closure and the offset of p from that
  /// edge's tail. Vertices report their first incident end.
  struct Location {
    int edge = 0;
    Rational offset;
  };
  Location locate(const GraphPoint& p) const;

  /// The point at distance d (0 <= d <= length) from the end's vertex along
  /// its model edge.
  GraphPoint point_along(const EdgeEnd& end, const Rational& d) const;

  int genus() const {
    return static_cast<int>(edges_.size()) - static_cast<int>(points_.size()) + 1;
  }

 private:
  const MetricGraph* graph_;
  std::vector<GraphPoint> points_;
  std::map<GraphPoint, int> index_;
  std::vector<ModelEdge> edges_;
  std::vector<std::vector<EdgeEnd>> ends_;
};

/// The refinement at `points` (plus auxiliary loop midpoints).
Model refine(const MetricGraph& graph, std::span<const GraphPoint> points);

/// Shortest-path distance in the inner metric.
Rational distance(const MetricGraph& graph, const GraphPoint& p, const GraphPoint& q);

/// Distances from p to every vertex of `model`; p must be a model vertex.
std::vector<Rational> distances_from(const Model& model, const GraphPoint& p);

}  // namespace tropjac

#endif  // TROPJAC_GRAPH_HPP
