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
#ifndef CIMIRROR_WQSERIES_HPP
#define CIMIRROR_WQSERIES_HPP

#include <vector>

#include "cimirror/qseries.hpp"
#include "cimirror/rational.hpp"

namespace cimirror {

/// A (w,q)-jet: coefficients of w^i q^d for 0 <= i <= w_order, 0 <= d <= q_order.
///
/// effective_w_order() is the highest w-power whose coefficients are still
/// known exactly. It starts at w_order and drops by one on every
/// divide_by_w; rows above it read as zero and must not be consumed.
class WQSeries {
 public:
  WQSeries() : WQSeries(0, 0) {}
  WQSeries(int w_order, int q_order);

  /// Series whose q^d coefficient is the w-jet columns[d]; the w-order is
  /// the shortest jet's order.
  static WQSeries from_columns(const std::vector<QSeries>& columns);
  /// Embeds a w-independent series.
  static WQSeries from_q(const QSeries& f, int w_order);
  static WQSeries constant(const Rational& c, int w_order, int q_order);

  int w_order() const noexcept { return w_order_; }
  int q_order() const noexcept { return q_order_; }
  int effective_w_order() const noexcept { return effective_; }

  /// Coefficient of w^i q^d (unchecked against effective_w_order).
  const Rational& at(int i, int d) const { return grid_[index(i, d)]; }
  void set(int i, int d, Rational value);

  /// The w-jet multiplying q^d, truncated to the effective w-order.
  QSeries column(int d) const;

  WQSeries truncated(int w_order, int q_order) const;

  WQSeries& operator+=(const WQSeries& other);
  WQSeries& operator-=(const WQSeries& other);
  WQSeries& operator*=(const Rational& c);

  friend bool operator==(const WQSeries& a, const WQSeries& b);

 private:
  std::size_t index(int i, int d) const {
    return static_cast<std::size_t>(d) * static_cast<std::size_t>(w_order_ + 1) + static_cast<std::size_t>(i);
  }
  void clear_above_effective();

  int w_order_;
  int q_order_;
  int effective_;
  std::vector<Rational> grid_;

  friend WQSeries divide_by_w(const WQSeries& f);
  friend WQSeries multiply_by_w(const WQSeries& f);
  friend WQSeries align(const WQSeries& f, int effective, int q_order);
};

WQSeries operator+(WQSeries a, const WQSeries& b);
WQSeries operator-(WQSeries a, const WQSeries& b);
WQSeries operator-(WQSeries a);
WQSeries operator*(const WQSeries& a, const WQSeries& b);
WQSeries operator*(const WQSeries& a, const QSeries& b);
WQSeries operator*(const QSeries& b, const WQSeries& a);
WQSeries operator*(WQSeries a, const Rational& c);
WQSeries operator*(const Rational& c, WQSeries a);
/// Throws DivisionByNonUnit when b's w^0 q^0 coefficient vanishes.
WQSeries operator/(const WQSeries& a, const WQSeries& b);
WQSeries operator/(const WQSeries& a, const QSeries& b);

WQSeries reciprocal(const WQSeries& f);
/// Requires the w^0 q^0 coefficient to be 1 (NonUnitConstant).
WQSeries log_series(const WQSeries& f);
/// Requires the w^0 q^0 coefficient to be 0 (NonZeroConstant).
WQSeries exp_series(const WQSeries& f);
WQSeries pow_rational(const WQSeries& f, const Rational& r);

/// q d/dq.
WQSeries d_q(const WQSeries& f);
WQSeries integrate_q(const WQSeries& g);
/// D_w = q d/dq + w.
WQSeries apply_Dw(const WQSeries& f);

/// The coefficient of w^p as a q-series. Throws WUnderflow when p exceeds
/// the effective w-order.
QSeries extract_w(const WQSeries& f, int p);
QSeries eval_w0(const WQSeries& f);
/// Requires an identically zero w^0 row (WUnderflow otherwise); the effective
/// w-order drops by one.
WQSeries divide_by_w(const WQSeries& f);
/// The effective w-order rises by one, capped at w_order().
WQSeries multiply_by_w(const WQSeries& f);

}  // namespace cimirror

#endif  // CIMIRROR_WQSERIES_HPP
