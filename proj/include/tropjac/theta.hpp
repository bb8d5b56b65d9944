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

// Tropical Riemann theta function.
//
// With lattice vectors written as Q n (n integer) and points as u = Q x, the
// maximand Q(lambda, x) - Q(lambda, lambda)/2 becomes n.u - n^T Q n / 2, so
//
//   Theta(u) = max_n  n.u - n^T Q n / 2.
//
// Completing the square, the maximizers are the lattice points nearest to
// Q^{-1} u in the Q-norm, and quasi-periodicity reads
//   Theta(u + Q m) = Theta(u) + m.u + m^T Q m / 2.

#ifndef TROPJAC_THETA_HPP
#define TROPJAC_THETA_HPP

#include <vector>

#include "tropjac/homology.hpp"
#include "tropjac/rational.hpp"

namespace tropjac {

struct ThetaValue {
  Rational value;
  std::vector<IntVector> maximizers;  // sorted lexicographically, nonempty
};

/// n.u - n^T Q n / 2.
Rational theta_term(const PeriodMatrix& q, const IntVector& n, const Vector& u);

/// Exact value and all maximizers.
ThetaValue theta(const PeriodMatrix& q, const Vector& u);
/// Theta(u - lambda).
ThetaValue theta_translated(const PeriodMatrix& q, const Vector& u, const Vector& lambda);
/// Corner locus membership: at least two maximizers.
bool on_theta_divisor(const PeriodMatrix& q, const Vector& u);
/// Checks Theta(u + Q m) = Theta(u) + m.u + m^T Q m / 2 and that the
/// maximizer set shifts by m.
bool quasiperiod_check(const PeriodMatrix& q, const Vector& u, const IntVector& m);
/// Legendre value on slope n: n^T Q n / 2.
Rational legendre(const PeriodMatrix& q, const IntVector& n);

/// Directional derivatives of Theta at u along w: the right derivative
/// max_{n active} n.w and the left derivative min_{n active} n.w.
struct ThetaSlopes {
  Rational right;
  Rational left;
};
ThetaSlopes theta_slopes(const ThetaValue& value, const Vector& w);

}  // namespace tropjac

#endif  // TROPJAC_THETA_HPP
