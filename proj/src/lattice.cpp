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

#include "tropjac/lattice.hpp"

#include <algorithm>
#include <functional>

namespace tropjac {

Rational q_norm_distance(const Matrix& q, const IntVector& n, const Vector& c) {
  Vector x = to_rational(n) - c;
  return dot(x, q * x);
}

namespace {

// Layered traversal. With Q = L D L^T the quadratic form splits as
// sum_k D_k (x_k + sum_{j>k} L_jk x_j)^2, x = n - c, so fixing the trailing
// coordinates leaves a one-dimensional window for n_k. Windows are found by
// stepping outward from the rounded center, which keeps everything exact.
// `visit(n, dist)` may lower `bound` to prune.
void enumerate(const Matrix& q, const Vector& c, Rational& bound,
               const std::function<void(const IntVector&, const Rational&)>& visit) {
  const std::size_t g = q.rows();
  if (g == 0) {
    visit(IntVector{}, Rational(0));
    return;
  }
  const LdlFactor f = ldl_decompose(q);
  IntVector n(g, 0);
  Vector x(g, Rational(0));

  std::function<void(std::size_t, const Rational&)> level = [&](std::size_t k, const Rational& partial) {
    Rational shift = 0;
    for (std::size_t j = k + 1; j < g; ++j) shift += f.lower(j, k) * x[j];
    const Rational center = c[k] - shift;  // n_k minimizing this layer's term
    const Integer mid = round_half_even(center);

    auto try_value = [&](const Integer& value) -> bool {
      const Rational y = Rational(value) - center;
      const Rational total = partial + f.diagonal[k] * y * y;
      if (total > bound) return false;
      n[k] = to_int64(value);
      x[k] = Rational(value) - c[k];
      if (k == 0) {
        visit(n, total);
      } else {
        level(k - 1, total);
      }
      return true;
    };

    // The layer term is convex in n_k, so each side stops at its first miss.
    // The bound may shrink during recursion, which only tightens the test.
    for (Integer v = mid;; v += 1)
      if (!try_value(v)) break;
    for (Integer v = mid - 1;; v -= 1)
      if (!try_value(v)) break;
  };
  level(g - 1, Rational(0));
}

}  // namespace

ClosestVectors closest_vectors(const Matrix& q, const Vector& c) {
  const std::size_t g = q.rows();
  IntVector start(g);
  for (std::size_t i = 0; i < g; ++i) start[i] = to_int64(round_half_even(c[i]));
  ClosestVectors best{q_norm_distance(q, start, c), {}};
  Rational bound = best.distance;
  enumerate(q, c, bound, [&](const IntVector& n, const Rational& dist) {
    if (dist < best.distance) {
      best.distance = dist;
      best.points.clear();
      bound = dist;
    }
    if (dist == best.distance) best.points.push_back(n);
  });
  std::sort(best.points.begin(), best.points.end());
  best.points.erase(std::unique(best.points.begin(), best.points.end()), best.points.end());
  return best;
}

std::vector<IntVector> lattice_points_in_ellipsoid(const Matrix& q, const Vector& c, const Rational& radius_sq) {
  std::vector<IntVector> out;
  Rational bound = radius_sq;
  enumerate(q, c, bound, [&](const IntVector& n, const Rational&) { out.push_back(n); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tropjac
