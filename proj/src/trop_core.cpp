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

#include "tropjac/trop_core.hpp"

#include <functional>
#include <optional>
#include <random>
#include <stdexcept>

#include "tropjac/error.hpp"

namespace tropjac {

const Rational& TropNum::value() const {
  if (!finite_) throw std::domain_error("value() of tropical bottom");
  return value_;
}

bool TropNum::operator==(const TropNum& other) const {
  if (finite_ != other.finite_) return false;
  return !finite_ || value_ == other.value_;
}

std::strong_ordering TropNum::operator<=>(const TropNum& other) const {
  if (!finite_ || !other.finite_) return finite_ <=> other.finite_;
  if (value_ < other.value_) return std::strong_ordering::less;
  if (value_ > other.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string TropNum::str() const { return finite_ ? to_string(value_) : "-inf"; }

TropNum tadd(const TropNum& a, const TropNum& b) { return a < b ? b : a; }

TropNum tmul(const TropNum& a, const TropNum& b) {
  if (a.is_bottom() || b.is_bottom()) return TropNum::bottom();
  return TropNum(a.value() + b.value());
}

TropNum tpoly_eval(const TropPolynomial& poly, const Vector& x) {
  if (poly.empty()) throw Error("trop_core", "EmptyPolynomial", "tropical polynomial has no terms");
  TropNum best = TropNum::bottom();
  for (const auto& [exponent, coefficient] : poly) {
    if (exponent.size() != x.size()) throw Error("trop_core", "DimensionMismatch", "exponent length differs from x");
    for (auto e : exponent)
      if (e < 0) throw Error("trop_core", "NegativeExponent", "tropical polynomial exponents must be nonnegative");
    best = tadd(best, tmul(coefficient, TropNum(dot(exponent, x))));
  }
  return best;
}

bool proj_equiv(const TropVector& v, const TropVector& w) {
  if (v.size() != w.size()) throw Error("trop_core", "LengthMismatch", "vectors have different lengths");
  std::optional<Rational> shift;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_bottom() != w[i].is_bottom()) return false;
    if (v[i].is_bottom()) continue;
    Rational d = w[i].value() - v[i].value();
    if (!shift) {
      shift = d;
    } else if (*shift != d) {
      return false;
    }
  }
  return shift.has_value();
}

std::vector<TropNum> residuate(const TropVector& v, std::span<const TropVector> generators) {
  std::vector<TropNum> c;
  c.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != v.size()) throw Error("trop_core", "LengthMismatch", "generator length differs from v");
    std::optional<TropNum> best;
    bool blocked = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (g[i].is_bottom()) continue;
      if (v[i].is_bottom()) {
        blocked = true;  // any finite c_j would exceed v here
        break;
      }
      TropNum candidate(v[i].value() - g[i].value());
      if (!best || candidate < *best) best = candidate;
    }
    c.push_back(blocked || !best ? TropNum::bottom() : *best);
  }
  return c;
}

TropVector combine(std::span<const TropNum> coefficients, std::span<const TropVector> generators) {
  if (coefficients.size() != generators.size()) throw std::invalid_argument("coefficient count mismatch");
  if (generators.empty()) return {};
  TropVector out(generators.front().size(), TropNum::bottom());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != out.size()) throw Error("trop_core", "LengthMismatch", "generator lengths differ");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = tadd(out[i], tmul(coefficients[j], generators[j][i]));
  }
  return out;
}

bool in_tropical_span(const TropVector& v, std::span<const TropVector> generators) {
  if (generators.empty()) {
    for (const auto& x : v)
      if (!x.is_bottom()) return false;
    return true;
  }
  auto c = residuate(v, generators);
  return combine(c, generators) == v;
}

TropVector vn_generator(int n, int j) {
  TropVector e(static_cast<std::size_t>(n), TropNum::one());
  e[static_cast<std::size_t>(j)] = TropNum::bottom();
  return e;
}

namespace {

// Exhaustive: is v in the span of some subset of `gens` of size <= max_size?
bool reproducible_by_subset(const TropVector& v, const std::vector<TropVector>& gens, std::size_t max_size) {
  const std::size_t m = gens.size();
  std::vector<std::size_t> pick;
  // Recursive enumeration of subsets of size exactly s, s = 1..max_size.
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) -> bool {
    if (left == 0) {
      std::vector<TropVector> sub;
      for (auto i : pick) sub.push_back(gens[i]);
      return in_tropical_span(v, sub);
    }
    for (std::size_t i = start; i + left <= m; ++i) {
      pick.push_back(i);
      if (rec(i + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t s = 1; s <= std::min(max_size, m); ++s) {
    pick.clear();
    if (rec(0, s)) return true;
  }
  return false;
}

}  // namespace

bool vn_reduction_check(int n, std::span<const TropNum> coefficients, int k) {
  if (k < 3 || k > n) throw Error("trop_core", "InvalidArgument", "vn_reduction_check needs 3 <= k <= n");
  if (coefficients.size() != static_cast<std::size_t>(k))
    throw Error("trop_core", "InvalidArgument", "expected k coefficients");
  std::vector<TropVector> gens;
  for (int j = 0; j < k; ++j) gens.push_back(vn_generator(n, j));
  TropVector target = combine(coefficients, gens);
  bool all_bottom = true;
  for (const auto& x : target) all_bottom = all_bottom && x.is_bottom();
  if (all_bottom) return true;
  return reproducible_by_subset(target, gens, 2);
}

bool sampled_reduction_check(std::span<const TropVector> generators, std::size_t subset_size, std::size_t trials,
                             std::uint64_t seed) {
  std::vector<TropVector> gens(generators.begin(), generators.end());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 8);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<TropNum> c;
    for (std::size_t j = 0; j < gens.size(); ++j) c.emplace_back(Rational(num(rng), den(rng)));
    if (!reproducible_by_subset(combine(c, gens), gens, subset_size)) return false;
  }
  return true;
}

}  // namespace tropjac
