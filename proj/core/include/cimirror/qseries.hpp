// Copyright 2026 The ci-mirror Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef CIMIRROR_QSERIES_HPP
#define CIMIRROR_QSERIES_HPP

#include <span>
#include <string>
#include <vector>

#include "cimirror/rational.hpp"

namespace cimirror {

/// A power series in one formal variable truncated after x^order, with exact
/// rational coefficients. The variable is q, Q or w depending on context;
/// the algebra does not care.
///
/// Binary operations between series of different orders truncate to the
/// smaller order. All free functions below are pure.
class QSeries {
 public:
  QSeries() : QSeries(0) {}
  explicit QSeries(int order);
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries constant(const Rational& c, int order);
  static QSeries monomial(const Rational& c, int degree, int order);
  /// The series "x" itself.
  static QSeries variable(int order) { return monomial(1, 1, order); }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Unchecked access.
  const Rational& operator[](int d) const { return coeffs_[static_cast<std::size_t>(d)]; }
  /// Checked access; degrees above order() throw std::out_of_range.
  const Rational& coeff(int d) const;
  void set(int d, Rational value);

  QSeries truncated(int order) const;
  bool is_zero() const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const QSeries& other);
  QSeries& operator*=(const Rational& c);

  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator-(QSeries a);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(QSeries a, const Rational& c);
QSeries operator*(const Rational& c, QSeries a);
/// Throws DivisionByNonUnit when b has zero constant term.
QSeries operator/(const QSeries& a, const QSeries& b);

/// Multiplicative inverse; throws DivisionByNonUnit when f(0) == 0.
QSeries reciprocal(const QSeries& f);

/// Formal logarithm; requires f(0) == 1 (NonUnitConstant).
QSeries log_series(const QSeries& f);
/// Formal exponential; requires f(0) == 0 (NonZeroConstant).
QSeries exp_series(const QSeries& f);
/// f^r for rational r; requires f(0) == 1 (NonUnitConstant).
QSeries pow_rational(const QSeries& f, const Rational& r);
/// f^k for integer k (negative k needs an invertible constant term).
QSeries pow_int(const QSeries& f, int k);

/// x d/dx, which scales the x^d coefficient by d.
QSeries d_q(const QSeries& f);
/// Inverse of d_q on series without constant term (NonZeroConstant otherwise).
QSeries integrate_q(const QSeries& g);
/// Ordinary derivative d/dx; the result has order f.order() - 1.
QSeries derivative(const QSeries& f);

/// f(g(x)); requires g(0) == 0 (NonZeroConstant).
QSeries compose(const QSeries& f, const QSeries& g);
/// The compositional inverse h with g(h(x)) = x. Requires g(0) == 0
/// (NonZeroConstant) and an invertible linear coefficient (NonUnitLinearTerm).
QSeries revert(const QSeries& g);

/// Coefficient-wise maximum denominator bit length, a cheap size metric.
std::size_t max_bits(const QSeries& f);

std::string to_string(const QSeries& f, const std::string& var = "q");

}  // namespace cimirror

#endif  // CIMIRROR_QSERIES_HPP
