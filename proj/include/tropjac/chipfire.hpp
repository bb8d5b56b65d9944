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

// Chip-firing on metric graphs: Dhar burning, p-reduced divisors, linear
// system emptiness, Baker-Norine rank, moderators and break divisors.

#ifndef TROPJAC_CHIPFIRE_HPP
#define TROPJAC_CHIPFIRE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "tropjac/graph.hpp"
#include "tropjac/homology.hpp"
#include "tropjac/plfunc.hpp"

namespace tropjac {

/// TROPJAC_ITER_CAP if set to a positive integer, else 1000000.
std::int64_t default_iteration_cap();

struct ChipfireOptions {
  std::int64_t iteration_cap = default_iteration_cap();
  /// Assert that the effectivization phase of reduce leaves D effective
  /// away from p (chipfire.InternalError otherwise).
  bool check_phase1 = false;
  int rank_audit_trials = 50;
  std::uint64_t audit_seed = 0x5eed;
  int orientation_edge_bound = 20;
};

struct BurningResult {
  Model model;  // refined at supp D and p
  std::vector<bool> burnt;  // per model vertex
  Subgraph unburnt;
  /// Unburnt vertex -> number of burnt incident edge ends.
  std::map<int, int> boundary;

  bool all_burnt() const { return boundary.empty() && std::find(burnt.begin(), burnt.end(), false) == burnt.end(); }
};

/// Least fixpoint of the fire started at p. Throws chipfire.NegativeOffBase.
BurningResult dhar_burn(const MetricGraph& graph, const Divisor& d, const GraphPoint& p);

struct FiringStep {
  Divisor divisor;
  PLFunction witness;  // divisor_of(witness) = old - new
  Rational epsilon;
};

/// Every boundary vertex of the unburnt set sends one chip a distance
/// epsilon into each burnt incident edge; epsilon is the shortest such edge.
/// Throws chipfire.NothingToFire when everything burnt.
FiringStep fire_unburnt(const Divisor& d, const BurningResult& burning);

struct AcyclicOrientation {
  Model model;
  std::vector<bool> forward;  // per model edge: tail -> head

  AcyclicOrientation reversed() const;
  bool is_acyclic() const;
};

/// sum (outdeg(v) - 1) v. Throws chipfire.CyclicOrientation.
Divisor moderator(const AcyclicOrientation& orientation);

/// All acyclic orientations, ordered by the bit mask of reversed edges.
/// Throws chipfire.EdgeBoundExceeded above `edge_bound` model edges.
std::vector<AcyclicOrientation> enumerate_acyclic_orientations(const Model& model, int edge_bound = 20);

/// A point where the fundamental domain is torn open, together with the
/// edge and the side (toward the edge's head or tail) that is missing.
struct CutPoint {
  GraphPoint point;
  int edge = 0;
  bool toward_head = true;
};

/// D_T = sum (val_C(z) - val_T(z)) z for the domain obtained by tearing the
/// curve at the cuts. Throws chipfire.MalformedDomain if the torn curve
/// still contains a cycle or a cut repeats.
Divisor pseudo_break_divisor(const MetricGraph& graph, const std::vector<CutPoint>& cuts);

/// Cuts at the head of every non-tree edge of a cycle basis' tree.
std::vector<CutPoint> spanning_tree_domain(const MetricGraph& graph, const CycleBasis& basis);

struct ReduceResult {
  Divisor divisor;
  std::int64_t events = 0;  // firing steps in the burning phase
};

struct RiemannRochReport {
  std::int64_t degree = 0;
  std::int64_t rank = 0;
  std::int64_t dual_rank = 0;  // rank(K - D)
  bool holds = false;
};

/// Chip-firing engine bound to a Jacobian (used for the effectivization step
/// of reduce). Stateless apart from the options; safe to share across
/// threads.
class ChipFiring {
 public:
  explicit ChipFiring(const Jacobian& jac, ChipfireOptions options = {});

  const Jacobian& jacobian() const { return *jac_; }
  const MetricGraph& graph() const { return jac_->graph(); }
  const ChipfireOptions& options() const { return options_; }

  /// The p-reduced representative of D. Throws chipfire.IterationCap.
  ReduceResult reduce_with_stats(const Divisor& d, const GraphPoint& p) const;
  Divisor reduce(const Divisor& d, const GraphPoint& p) const { return reduce_with_stats(d, p).divisor; }

  /// |D| nonempty, decided at base p (vertex 0 by default).
  bool linear_system_nonempty(const Divisor& d) const;
  bool linear_system_nonempty(const Divisor& d, const GraphPoint& p) const;

  /// Baker-Norine rank over multisets of model vertices of the refinement at
  /// supp D and p, followed by a random audit with continuous points.
  /// Throws chipfire.RankAuditFailure.
  std::int64_t rank(const Divisor& d) const;
  std::int64_t rank(const Divisor& d, const GraphPoint& p) const;

  RiemannRochReport riemann_roch(const Divisor& d) const;
  bool riemann_roch_check(const Divisor& d) const { return riemann_roch(d).holds; }

  /// Exactly one of |D| nonempty and |K+ - D| nonempty for some moderator
  /// K+ of the model refined at supp D, supp of the reduced form and p. In
  /// degree g - 1 a non-effective reduced form must itself be a moderator.
  bool dichotomy_check(const Divisor& d, const GraphPoint& p) const;

  /// For a proper connected subgraph and a break divisor of it, every model
  /// vertex and `samples` random interior points q of the subgraph satisfy
  /// |D_b + boundary - q| nonempty. Throws chipfire.InvalidSubgraph and
  /// chipfire.NotABreakDivisor.
  bool support_lemma_check(const Subgraph& gamma, const Divisor& d_b, int samples = 20, std::uint64_t seed = 7) const;

 private:
  const Jacobian* jac_;
  ChipfireOptions options_;
};

}  // namespace tropjac

#endif  // TROPJAC_CHIPFIRE_HPP
