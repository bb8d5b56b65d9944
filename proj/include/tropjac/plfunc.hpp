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

// Tropical rational functions: continuous piecewise-affine functions with
// integer slopes, represented by their values on the vertices of a model
// and affine on every model edge.

#ifndef TROPJAC_PLFUNC_HPP
#define TROPJAC_PLFUNC_HPP

#include <optional>
#include <span>
#include <vector>

#include "tropjac/graph.hpp"
#include "tropjac/homology.hpp"

namespace tropjac {

/// Closed subgraph of a model: selected vertices plus whole model edges.
/// Every selected edge has both endpoints selected.
struct Subgraph {
  Model model;
  std::vector<bool> vertices;
  std::vector<bool> edges;

  /// Selected vertices with an incident model edge outside the subgraph.
  std::vector<int> boundary() const;
  bool is_connected() const;
  /// #edges - #vertices + 1 of the selection (connected selections).
  int genus() const;
};

/// Whole-model subgraph.
Subgraph whole(const Model& model);

class PLFunction {
 public:
  /// Throws plfunc.NonIntegerSlope when some model edge has a non-integer
  /// slope, plfunc.ValueCount on a size mismatch.
  PLFunction(Model model, std::vector<Rational> values);

  const Model& model() const { return model_; }
  const std::vector<Rational>& values() const { return values_; }
  /// Slope along the model edge's orientation.
  std::int64_t slope(int model_edge) const { return slopes_.at(static_cast<std::size_t>(model_edge)); }
  /// Slope leaving the end's vertex.
  std::int64_t outgoing_slope(const EdgeEnd& end) const { return end.at_tail ? slope(end.edge) : -slope(end.edge); }

  Rational value_at(const GraphPoint& p) const;
  /// Same function on the model refined further at `points`.
  PLFunction refined(std::span<const GraphPoint> points) const;

  PLFunction operator+(const PLFunction& other) const;
  PLFunction operator-() const;

 private:
  Model model_;
  std::vector<Rational> values_;
  std::vector<std::int64_t> slopes_;
};

/// (f): at each point, the sum of outgoing slopes. Degree 0 on a compact
/// curve.
Divisor divisor_of(const PLFunction& f);

/// Residue identity on a connected subgraph U of f's model: the degree of
/// (f) on the interior of U equals the sum of outward slopes at the
/// boundary. Throws plfunc.BoundaryInSupport if a boundary point carries a
/// nonzero coefficient of (f), plfunc.ModelMismatch if U lives on another
/// model.
bool residue_check(const PLFunction& f, const Subgraph& u);

/// A function f with (f) = D - E, normalized by f(base) = 0, or nothing when
/// D and E are not linearly equivalent. Paths run through a spanning tree of
/// the model refined at supp D, supp E and base; the homology defect is
/// corrected by integer multiples of the basis cycles. Throws
/// plfunc.DegreeMismatch.
std::optional<PLFunction> equivalence_witness(const Divisor& d, const Divisor& e, const GraphPoint& base,
                                              const Jacobian& jac);
/// Same with an explicit spanning tree of that model (model edge indices).
std::optional<PLFunction> equivalence_witness(const Divisor& d, const Divisor& e, const GraphPoint& base,
                                              const Jacobian& jac, std::span<const int> model_tree_edges);

/// The points where f is maximal.
Subgraph max_locus(const PLFunction& f);

}  // namespace tropjac

#endif  // TROPJAC_PLFUNC_HPP
