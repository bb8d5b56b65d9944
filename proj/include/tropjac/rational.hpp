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

#ifndef TROPJAC_RATIONAL_HPP
#define TROPJAC_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tropjac {

/// Exact rational number. Expression templates are disabled so that `auto`
/// always binds to a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Vector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

/// Parses "p/q", "p" or a signed decimal such as "-1.25".
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_decimal_string(const Rational& r, int digits = 6);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
/// Nearest integer, ties to even.
Integer round_half_even(const Rational& r);
bool is_integer(const Rational& r);
std::int64_t to_int64(const Integer& z);
std::int64_t to_int64_exact(const Rational& r);  // throws unless integral

// Dense vector helpers.
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& a);
Vector to_rational(const IntVector& n);
Rational dot(const IntVector& n, const Vector& u);
Rational dot(const Vector& a, const Vector& b);
Vector zeros(std::size_t n);

/// Small dense matrix of rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  explicit Matrix(std::vector<std::vector<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector operator*(const Vector& v) const;
  Vector operator*(const IntVector& v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix transposed() const;
  bool operator==(const Matrix& other) const = default;

  bool is_symmetric() const;
  /// Leading principal minors via exact elimination.
  std::vector<Rational> leading_minors() const;
  /// Solves A x = b exactly; throws std::domain_error when singular.
  Vector solve(const Vector& b) const;
  Matrix inverse() const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Unit lower triangular L and diagonal d with A = L diag(d) L^T.
struct LdlFactor {
  Matrix lower;
  Vector diagonal;
};

/// Exact LDL^T of a symmetric matrix; throws std::domain_error unless
/// positive definite.
LdlFactor ldl_decompose(const Matrix& a);

std::string format_vector(const Vector& v);
std::string format_vector(const IntVector& v);

}  // namespace tropjac

#endif  // TROPJAC_RATIONAL_HPP
