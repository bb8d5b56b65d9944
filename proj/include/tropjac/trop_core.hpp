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

// Max-plus arithmetic on Q u {-inf}, tropical polynomials and span tests
// for finitely generated tropical modules.

#ifndef TROPJAC_TROP_CORE_HPP
#define TROPJAC_TROP_CORE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tropjac/rational.hpp"

namespace tropjac {

/// Element of the tropical semifield: a finite rational or the bottom
/// element -inf. Bottom is a tag, never a numeric sentinel.
class TropNum {
 public:
  /// Bottom.
  TropNum() = default;
  TropNum(Rational value) : finite_(true), value_(std::move(value)) {}  // NOLINT(implicit)
  TropNum(std::int64_t value) : TropNum(Rational(value)) {}             // NOLINT(implicit)

  static TropNum bottom() { return TropNum(); }
  static TropNum one() { return TropNum(Rational(0)); }

  bool is_bottom() const { return !finite_; }
  /// Throws std::domain_error on bottom.
  const Rational& value() const;

  bool operator==(const TropNum& other) const;
  /// Bottom is the minimum.
  std::strong_ordering operator<=>(const TropNum& other) const;

  std::string str() const;

 private:
  bool finite_ = false;
  Rational value_;
};

/// Tropical sum: max.
TropNum tadd(const TropNum& a, const TropNum& b);
/// Tropical product: classical sum, bottom absorbing.
TropNum tmul(const TropNum& a, const TropNum& b);

using TropVector = std::vector<TropNum>;

/// Tropical polynomial as a map exponent -> coefficient.
using TropPolynomial = std::map<IntVector, TropNum>;

/// max over terms of (coefficient + <exponent, x>). Throws
/// Error("trop_core", "EmptyPolynomial") on an empty map.
TropNum tpoly_eval(const TropPolynomial& poly, const Vector& x);

/// w = lambda + v for a finite lambda, bottoms matching bottoms.
bool proj_equiv(const TropVector& v, const TropVector& w);

/// The greatest coefficients c with max_j (c_j + g_j) <= v coordinatewise.
/// All-bottom generators get a bottom coefficient.
std::vector<TropNum> residuate(const TropVector& v, std::span<const TropVector> generators);

/// max_j (c_j + g_j) coordinatewise.
TropVector combine(std::span<const TropNum> coefficients, std::span<const TropVector> generators);

/// Decides v in span(generators) exactly by residuation.
bool in_tropical_span(const TropVector& v, std::span<const TropVector> generators);

/// j-th generator of V_n (0-based): bottom in slot j, 0 elsewhere.
TropVector vn_generator(int n, int j);

/// The combination of the first k scaled generators of V_n with the given
/// coefficients is reproduced by some subset of at most two of them.
bool vn_reduction_check(int n, std::span<const TropNum> coefficients, int k);

/// Sampled dimension probe for an arbitrary finitely generated module:
/// `trials` random combinations of all generators (finite coefficients from
/// a seeded generator) must each lie in the span of some subset of
/// `subset_size` generators.
bool sampled_reduction_check(std::span<const TropVector> generators, std::size_t subset_size, std::size_t trials,
                             std::uint64_t seed);

}  // namespace tropjac

#endif  // TROPJAC_TROP_CORE_HPP
