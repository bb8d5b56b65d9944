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

#include "tropjac/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tropjac {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  Integer z{std::string(s)};
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    Integer den(std::string{den_text});
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot_pos);
    std::string_view frac = text.substr(dot_pos + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r = Rational(w) + Rational(f, scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& r, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer scaled = round_half_even(r * Rational(scale));
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return (negative && s != "0") ? "-" + s : s;
}

Integer floor(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil(const Rational& r) { return -floor(-r); }

Integer round_half_even(const Rational& r) {
  Integer f = floor(r);
  Rational frac = r - Rational(f);
  const Rational half(1, 2);
  if (frac < half) return f;
  if (frac > half) return f + 1;
  return (f % 2 == 0) ? f : Integer(f + 1);
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer out of int64 range: " + z.str());
  }
  return z.convert_to<std::int64_t>();
}

std::int64_t to_int64_exact(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("expected an integer, got " + to_string(r));
  return to_int64(boost::multiprecision::numerator(r));
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator-(const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vector operator*(const Rational& s, const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

Vector to_rational(const IntVector& n) {
  Vector out(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) out[i] = Rational(n[i]);
  return out;
}

Rational dot(const IntVector& n, const Vector& u) {
  if (n.size() != u.size()) throw std::invalid_argument("vector size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < n.size(); ++i) s += Rational(n[i]) * u[i];
  return s;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::vector<std::vector<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix");
    for (auto& x : row) data_.push_back(std::move(x));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  Vector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Vector Matrix::operator*(const IntVector& v) const { return (*this) * to_rational(v); }

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix size mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<Rational> Matrix::leading_minors() const {
  if (rows_ != cols_) throw std::invalid_argument("leading minors need a square matrix");
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= rows_; ++k) {
    // Fraction-free enough at desk scale: plain elimination on the k x k block.
    std::vector<Rational> a;
    a.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a.push_back((*this)(i, j));
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t pivot = c;
      while (pivot < k && a[pivot * k + c] == 0) ++pivot;
      if (pivot == k) {
        det = 0;
        break;
      }
      if (pivot != c) {
        for (std::size_t j = 0; j < k; ++j) std::swap(a[pivot * k + j], a[c * k + j]);
        det = -det;
      }
      det *= a[c * k + c];
      for (std::size_t r = c + 1; r < k; ++r) {
        Rational factor = a[r * k + c] / a[c * k + c];
        if (factor == 0) continue;
        for (std::size_t j = c; j < k; ++j) a[r * k + j] -= factor * a[c * k + j];
      }
    }
    minors.push_back(det);
  }
  return minors;
}

Vector Matrix::solve(const Vector& b) const {
  if (rows_ != cols_ || b.size() != rows_) throw std::invalid_argument("solve: size mismatch");
  const std::size_t n = rows_;
  std::vector<Rational> a(data_);
  Vector x(b);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot * n + c] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[c * n + j]);
      std::swap(x[pivot], x[c]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r * n + c] == 0) continue;
      Rational factor = a[r * n + c] / a[c * n + c];
      for (std::size_t j = c; j < n; ++j) a[r * n + j] -= factor * a[c * n + j];
      x[r] -= factor * x[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) x[i] /= a[i * n + i];
  return x;
}

Matrix Matrix::inverse() const {
  Matrix inv(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    Vector e(rows_, Rational(0));
    e[j] = 1;
    Vector col = solve(e);
    for (std::size_t i = 0; i < rows_; ++i) inv(i, j) = col[i];
  }
  return inv;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << to_string((*this)(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

LdlFactor ldl_decompose(const Matrix& a) {
  if (!a.is_symmetric()) throw std::domain_error("LDL^T needs a symmetric matrix");
  const std::size_t n = a.rows();
  LdlFactor f{Matrix::identity(n), Vector(n, Rational(0))};
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= f.lower(j, k) * f.lower(j, k) * f.diagonal[k];
    if (d <= 0) throw std::domain_error("matrix is not positive definite");
    f.diagonal[j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= f.lower(i, k) * f.lower(j, k) * f.diagonal[k];
      f.lower(i, j) = s / d;
    }
  }
  return f;
}

std::string format_vector(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace tropjac
