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

// Independent reference computations and random generators for tests. None
// of these reuse the library routine they are compared against.

#ifndef TROPJAC_TESTS_ORACLES_HPP
#define TROPJAC_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "tropjac/graph.hpp"
#include "tropjac/homology.hpp"
#include "tropjac/plfunc.hpp"
#include "tropjac/rational.hpp"

namespace tropjac::oracle {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int lo, int hi, int max_den);
Vector random_vector(Rng& rng, std::size_t n, int lo, int hi, int max_den);
/// Random symmetric positive definite matrix B^T B + I with small entries.
Matrix random_spd(Rng& rng, std::size_t n);

/// Theta by scanning the box |n_i| <= bound for every i; maximizers sorted.
struct BruteTheta {
  Rational value;
  std::vector<IntVector> maximizers;
};
BruteTheta brute_theta(const Matrix& q, const Vector& u, std::int64_t bound);
/// A box half-width that certainly contains every maximizer: it contains the
/// ellipsoid through the rounded centre.
std::int64_t certified_box(const Matrix& q, const Vector& u);

/// Gram matrix of the fundamental cycles of the given spanning tree, built
/// from tree paths found by depth-first search and summed over shared edges.
Matrix naive_period_matrix(const MetricGraph& graph, const std::vector<int>& tree_edges);

/// Uniform-ish point: random edge, offset k/den of its length (0..den).
GraphPoint random_point(const MetricGraph& graph, Rng& rng, int den = 12);
Divisor random_effective(const MetricGraph& graph, Rng& rng, int degree, int den = 12);
/// Random divisor with coefficients in [-2, 2] on `points` random points.
Divisor random_divisor(const MetricGraph& graph, Rng& rng, int points, int den = 12);

/// Random integer-sloped function: random slopes on a spanning tree of a
/// random refinement, with every remaining sub-edge split once so both
/// pieces have integer slopes.
PLFunction random_plfunction(const MetricGraph& graph, Rng& rng);

/// Random connected subgraph of a model (grown from a random vertex).
Subgraph random_connected_subgraph(const Model& model, Rng& rng);

/// d plus the divisor of a random function.
Divisor random_equivalent(const Divisor& d, const MetricGraph& graph, Rng& rng);

}  // namespace tropjac::oracle

#endif  // TROPJAC_TESTS_ORACLES_HPP
