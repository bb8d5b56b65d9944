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

// Pullback of translated theta divisors along the Abel-Jacobi map, the
// Jacobi inversion constant kappa, canonical effective representatives and
// Riemann's theorem.
//
// All vectors live in the pairing coordinates of homology.hpp; in
// particular kappa is reported there and not in any basis of 1-forms.

#ifndef TROPJAC_INVERSION_HPP
#define TROPJAC_INVERSION_HPP

#include <cstdint>
#include <vector>

#include "tropjac/graph.hpp"
#include "tropjac/homology.hpp"
#include "tropjac/plfunc.hpp"

namespace tropjac {

struct EnvelopeBreakpoint {
  Rational offset;  // from the edge's tail
  Rational left_slope;
  Rational right_slope;
  std::int64_t multiplicity = 0;  // right - left
};

/// t -> Theta(mu(x(t)) - lambda) along one graph edge, x(t) at offset t from
/// the tail. `direction` is the per-unit-length change of the lift.
struct EdgeEnvelope {
  int edge = 0;
  Vector direction;
  Rational start_slope;  // right derivative at the tail
  Rational end_slope;    // left derivative at the head
  std::vector<EnvelopeBreakpoint> breakpoints;  // interior only, increasing
};

EdgeEnvelope edge_envelope(const Jacobian& jac, const GraphPoint& base, const Vector& lambda, int edge);

/// D_lambda: the divisor of x -> Theta(mu(x) - lambda). Effective of degree g.
Divisor pullback_theta(const Jacobian& jac, const GraphPoint& base, const Vector& lambda);

/// The constant with mu(D_lambda) + kappa = lambda, as a canonical
/// representative. Computed at lambda = 0 and checked against `probes`
/// further lambda values (inversion.KappaNotConstant). Cached per base.
Vector kappa(const Jacobian& jac, const GraphPoint& base, int probes = 3);

/// pullback_theta(mu(D) + kappa) for deg D = g; independent of the base.
/// Throws inversion.DegreeMismatch.
Divisor canonical_effective(const Jacobian& jac, const Divisor& d, const GraphPoint& base);

/// q in supp|D| decided on the theta side, deg D = g.
bool theta_support_test(const Jacobian& jac, const Divisor& d, const GraphPoint& q, const GraphPoint& base);

/// c_value + kappa on the theta divisor; by Riemann's theorem this is
/// effectivity of the degree g-1 class with Abel-Jacobi image c_value.
bool riemann_membership(const Jacobian& jac, const Vector& c_value, const GraphPoint& base);

/// Effective degree-g divisor whose chips can be given distinct outgoing
/// directions so that cutting just beside each chip leaves a tree.
/// Exhaustive over direction assignments.
bool is_break_divisor(const MetricGraph& graph, const Divisor& d);
/// Same relative to a connected subgraph; chips must sit on its vertices and
/// directions are restricted to its edges.
bool is_break_divisor(const Subgraph& gamma, const Divisor& d);

/// Exact check of the vector-valued residue identity for the lifted theta
/// pullback on a spanning-tree fundamental domain.
bool refined_residue_audit(const Jacobian& jac, const GraphPoint& base, const Vector& lambda);

}  // namespace tropjac

#endif  // TROPJAC_INVERSION_HPP
