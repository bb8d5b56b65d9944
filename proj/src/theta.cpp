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

#include "tropjac/theta.hpp"

#include <algorithm>

#include "tropjac/error.hpp"
#include "tropjac/lattice.hpp"

namespace tropjac {

Rational legendre(const PeriodMatrix& q, const IntVector& n) {
  if (n.size() != q.genus()) throw Error("theta", "DimensionMismatch", "slope has wrong dimension");
  return dot(n, q.matrix() * n) / 2;
}

Rational theta_term(const PeriodMatrix& q, const IntVector& n, const Vector& u) { return dot(n, u) - legendre(q, n); }

ThetaValue theta(const PeriodMatrix& q, const Vector& u) {
  if (u.size() != q.genus()) throw Error("theta", "DimensionMismatch", "argument has wrong dimension");
  if (q.genus() == 0) return {Rational(0), {IntVector{}}};
  const Vector c = q.matrix().solve(u);
  ClosestVectors nearest = closest_vectors(q.matrix(), c);
  ThetaValue out{theta_term(q, nearest.points.front(), u), std::move(nearest.points)};
  return out;
}

ThetaValue theta_translated(const PeriodMatrix& q, const Vector& u, const Vector& lambda) { return theta(q, u - lambda); }

bool on_theta_divisor(const PeriodMatrix& q, const Vector& u) { return theta(q, u).maximizers.size() >= 2; }

bool quasiperiod_check(const PeriodMatrix& q, const Vector& u, const IntVector& m) {
  const ThetaValue base = theta(q, u);
  const ThetaValue shifted = theta(q, u + q.matrix() * m);
  if (shifted.value != base.value + dot(m, u) + legendre(q, m)) return false;
  std::vector<IntVector> moved;
  for (const auto& n : base.maximizers) {
    IntVector s(n);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
    moved.push_back(std::move(s));
  }
  std::sort(moved.begin(), moved.end());
  return moved == shifted.maximizers;
}

ThetaSlopes theta_slopes(const ThetaValue& value, const Vector& w) {
  ThetaSlopes s{dot(value.maximizers.front(), w), dot(value.maximizers.front(), w)};
  for (const auto& n : value.maximizers) {
    const Rational d = dot(n, w);
    s.right = std::max(s.right, d);
    s.left = std::min(s.left, d);
  }
  return s;
}

}  // namespace tropjac
