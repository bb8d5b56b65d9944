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

// Cycle bases, the period matrix Q and the Abel-Jacobi map.
//
// Coordinates: a point of the Jacobian is stored as the vector u with
// u_i = Q(gamma_i, c) for an underlying 1-chain c. Closing a loop gamma_j
// shifts u by column j of Q, so the period lattice is Q Z^g.

#ifndef TROPJAC_HOMOLOGY_HPP
#define TROPJAC_HOMOLOGY_HPP

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "tropjac/graph.hpp"
#include "tropjac/rational.hpp"

namespace tropjac {

/// Fundamental cycles of a spanning tree. cycle i traverses non-tree edge
/// i with coefficient +1 and closes through the tree.
struct CycleBasis {
  std::vector<int> tree_edges;      // sorted
  std::vector<int> non_tree_edges;  // e_1..e_g, sorted
  std::vector<std::vector<int>> coefficients;  // [cycle][graph edge]

  std::size_t genus() const { return non_tree_edges.size(); }
  /// Coefficients of edge e in every cycle, i.e. the pairing rate per unit
  /// length of a path moving along e in its orientation.
  Vector direction(int edge) const;
};

/// Deterministic: breadth-first tree from vertex 0, edges in index order.
CycleBasis cycle_basis(const MetricGraph& graph);
/// Fundamental cycles of a caller-chosen spanning tree. Throws
/// homology.NotASpanningTree.
CycleBasis cycle_basis(const MetricGraph& graph, std::span<const int> tree_edges);

/// Symmetric positive definite g x g matrix Q_ij = sum_E a_i(E) a_j(E) l(E).
class PeriodMatrix {
 public:
  /// Validates symmetry and positive definiteness (homology.NotPositiveDefinite).
  explicit PeriodMatrix(Matrix q);

  const Matrix& matrix() const { return q_; }
  std::size_t genus() const { return q_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return q_(i, j); }
  bool operator==(const PeriodMatrix& other) const { return q_ == other.q_; }
  std::string str() const { return q_.str(); }

 private:
  Matrix q_;
};

PeriodMatrix period_matrix(const MetricGraph& graph, const CycleBasis& basis);

/// True iff Q^{-1}(u - v) is an integer vector.
bool jac_equal(const Vector& u, const Vector& v, const PeriodMatrix& q);

/// Canonical representative u - Q n* with n* the lexicographically smallest
/// lattice vector closest to Q^{-1}u in the Q-norm.
Vector jac_canonical(const Vector& u, const PeriodMatrix& q);

/// Graph together with a fixed cycle basis and its period matrix. Holds a
/// pointer to the graph, which must outlive it. Thread-safe for concurrent
/// reads; the kappa cache is internally synchronized.
class Jacobian {
 public:
  explicit Jacobian(const MetricGraph& graph);
  Jacobian(const MetricGraph& graph, CycleBasis basis);
  Jacobian(const Jacobian& other);

  const MetricGraph& graph() const { return *graph_; }
  const CycleBasis& basis() const { return basis_; }
  const PeriodMatrix& period() const { return q_; }
  std::size_t genus() const { return basis_.genus(); }

  /// Lift of a point relative to the root vertex 0, along the spanning tree
  /// and then partially along the point's edge from its tail.
  Vector lift(const GraphPoint& p) const;
  /// Abel-Jacobi lift of p with respect to base: lift(p) - lift(base).
  Vector lift(const GraphPoint& p, const GraphPoint& base) const;

  /// sum_x D(x) (lift(x) - lift(base)); defined modulo Q Z^g.
  Vector abel_jacobi(const Divisor& d, const GraphPoint& base) const;
  bool equal(const Vector& u, const Vector& v) const { return jac_equal(u, v, q_); }
  Vector canonical(const Vector& u) const { return jac_canonical(u, q_); }
  /// deg D = 0 and abel_jacobi(D) = 0 in J(C).
  bool is_principal(const Divisor& d, const GraphPoint& base) const;

  /// Cache hook used by the inversion module.
  std::optional<Vector> cached_kappa(const GraphPoint& base) const;
  void store_kappa(const GraphPoint& base, const Vector& kappa) const;

 private:
  const MetricGraph* graph_;
  CycleBasis basis_;
  PeriodMatrix q_;
  std::vector<Vector> vertex_lifts_;
  mutable std::mutex kappa_mutex_;
  mutable std::map<GraphPoint, Vector> kappa_cache_;
};

/// Free-function forms.
Vector abel_jacobi(const Divisor& d, const GraphPoint& base, const Jacobian& jac);
bool is_principal(const Divisor& d, const GraphPoint& base, const Jacobian& jac);

/// Pairing Q(a, b) of two integer 1-chains given as coefficients per graph
/// edge: sum_E a(E) b(E) l(E).
Rational chain_pairing(const MetricGraph& graph, std::span<const int> a, std::span<const int> b);

}  // namespace tropjac

#endif  // TROPJAC_HOMOLOGY_HPP
