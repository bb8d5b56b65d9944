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

#ifndef TROPJAC_LATTICE_HPP
#define TROPJAC_LATTICE_HPP

#include <vector>

#include "tropjac/rational.hpp"

namespace tropjac {

/// (n - c)^T Q (n - c).
Rational q_norm_distance(const Matrix& q, const IntVector& n, const Vector& c);

/// All integer vectors n minimizing (n - c)^T Q (n - c), sorted
/// lexicographically, and the minimal value. Exact layered enumeration
/// driven by the rational LDL^T factorization of Q, started from the radius
/// of the coordinatewise rounded center. Q must be positive definite.
struct ClosestVectors {
  Rational distance;
  std::vector<IntVector> points;
};
ClosestVectors closest_vectors(const Matrix& q, const Vector& c);

/// Every integer vector with (n - c)^T Q (n - c) <= radius_sq, sorted.
std::vector<IntVector> lattice_points_in_ellipsoid(const Matrix& q, const Vector& c, const Rational& radius_sq);

}  // namespace tropjac

#endif  // TROPJAC_LATTICE_HPP
