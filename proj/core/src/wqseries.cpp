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
#include "cimirror/wqseries.hpp"

#include <algorithm>

#include "cimirror/errors.hpp"
#include "scaled.hpp"

namespace cimirror {

WQSeries::WQSeries(int w_order, int q_order) : w_order_(w_order), q_order_(q_order), effective_(w_order) {
  if (w_order < 0 || q_order < 0) raise(ErrorKind::InvalidArgument, "negative truncation order");
  grid_.resize(static_cast<std::size_t>(w_order + 1) * static_cast<std::size_t>(q_order + 1));
}

WQSeries WQSeries::from_columns(const std::vector<QSeries>& columns) {
  if (columns.empty()) raise(ErrorKind::InvalidArgument, "no columns");
  int w = columns.front().order();
  for (const auto& c : columns) w = std::min(w, c.order());
  WQSeries out(w, static_cast<int>(columns.size()) - 1);
  for (int d = 0; d <= out.q_order_; ++d) {
    for (int i = 0; i <= w; ++i) out.grid_[out.index(i, d)] = columns[static_cast<std::size_t>(d)][i];
  }
  return out;
}

WQSeries WQSeries::from_q(const QSeries& f, int w_order) {
  WQSeries out(w_order, f.order());
  for (int d = 0; d <= f.order(); ++d) out.grid_[out.index(0, d)] = f[d];
  return out;
}

WQSeries WQSeries::constant(const Rational& c, int w_order, int q_order) {
  WQSeries out(w_order, q_order);
  out.grid_[0] = c;
  return out;
}

void WQSeries::set(int i, int d, Rational value) {
  if (i < 0 || i > w_order_ || d < 0 || d > q_order_) raise(ErrorKind::InvalidArgument, "coefficient index out of range");
  grid_[index(i, d)] = std::move(value);
}

QSeries WQSeries::column(int d) const {
  if (effective_ < 0) raise(ErrorKind::WUnderflow, "no w-coefficients remain");
  std::vector<Rational> c(static_cast<std::size_t>(effective_) + 1);
  for (int i = 0; i <= effective_; ++i) c[static_cast<std::size_t>(i)] = grid_[index(i, d)];
  return QSeries(std::move(c));
}

void WQSeries::clear_above_effective() {
  for (int d = 0; d <= q_order_; ++d) {
    for (int i = std::max(effective_ + 1, 0); i <= w_order_; ++i) grid_[index(i, d)] = 0;
  }
}

WQSeries align(const WQSeries& f, int effective, int q_order) {
  WQSeries out(f.w_order_, q_order);
  out.effective_ = std::min(effective, f.effective_);
  const int rows = std::min(out.effective_, f.w_order_);
  for (int d = 0; d <= std::min(q_order, f.q_order_); ++d) {
    for (int i = 0; i <= rows; ++i) out.grid_[out.index(i, d)] = f.grid_[f.index(i, d)];
  }
  return out;
}

WQSeries WQSeries::truncated(int w_order, int q_order) const {
  WQSeries out(w_order, q_order);
  out.effective_ = std::min(w_order, effective_);
  for (int d = 0; d <= std::min(q_order, q_order_); ++d) {
    for (int i = 0; i <= std::min(out.effective_, w_order_); ++i) out.grid_[out.index(i, d)] = grid_[index(i, d)];
  }
  return out;
}

namespace {

struct Shape {
  int w_order;
  int effective;
  int q_order;
};

Shape common_shape(const WQSeries& a, const WQSeries& b) {
  const int w = std::min(a.w_order(), b.w_order());
  return {w, std::min({w, a.effective_w_order(), b.effective_w_order()}), std::min(a.q_order(), b.q_order())};
}

}  // namespace

WQSeries& WQSeries::operator+=(const WQSeries& other) {
  const auto s = common_shape(*this, other);
  *this = truncated(s.w_order, s.q_order);
  effective_ = s.effective;
  for (int d = 0; d <= q_order_; ++d) {
    for (int i = 0; i <= w_order_; ++i) grid_[index(i, d)] += other.at(i, d);
  }
  clear_above_effective();
  return *this;
}

WQSeries& WQSeries::operator-=(const WQSeries& other) {
  const auto s = common_shape(*this, other);
  *this = truncated(s.w_order, s.q_order);
  effective_ = s.effective;
  for (int d = 0; d <= q_order_; ++d) {
    for (int i = 0; i <= w_order_; ++i) grid_[index(i, d)] -= other.at(i, d);
  }
  clear_above_effective();
  return *this;
}

WQSeries& WQSeries::operator*=(const Rational& c) {
  for (auto& x : grid_) x *= c;
  return *this;
}

bool operator==(const WQSeries& a, const WQSeries& b) {
  const auto s = common_shape(a, b);
  for (int d = 0; d <= s.q_order; ++d) {
    for (int i = 0; i <= s.effective; ++i) {
      if (a.at(i, d) != b.at(i, d)) return false;
    }
  }
  return true;
}

WQSeries operator+(WQSeries a, const WQSeries& b) { return a += b; }
WQSeries operator-(WQSeries a, const WQSeries& b) { return a -= b; }
WQSeries operator-(WQSeries a) { return a *= Rational(-1); }
WQSeries operator*(WQSeries a, const Rational& c) { return a *= c; }
WQSeries operator*(const Rational& c, WQSeries a) { return a *= c; }

WQSeries operator*(const WQSeries& a, const WQSeries& b) {
  const auto s = common_shape(a, b);
  WQSeries out(s.w_order, s.q_order);
  if (s.effective < 0) raise(ErrorKind::WUnderflow, "no w-coefficients remain");
  const auto rows = static_cast<std::size_t>(s.effective) + 1;
  const auto cols = static_cast<std::size_t>(s.q_order) + 1;
  auto flatten = [&](const WQSeries& f) {
    std::vector<Rational> v(rows * cols);
    for (std::size_t d = 0; d < cols; ++d) {
      for (std::size_t i = 0; i < rows; ++i) v[d * rows + i] = f.at(static_cast<int>(i), static_cast<int>(d));
    }
    return detail::to_scaled(v);
  };
  const auto sa = flatten(a);
  const auto sb = flatten(b);
  std::vector<Integer> acc(rows * cols);
  for (std::size_t da = 0; da < cols; ++da) {
    for (std::size_t ia = 0; ia < rows; ++ia) {
      const auto& x = sa.num[da * rows + ia];
      if (x == 0) continue;
      for (std::size_t db = 0; da + db < cols; ++db) {
        for (std::size_t ib = 0; ia + ib < rows; ++ib) {
          const auto& y = sb.num[db * rows + ib];
          if (y == 0) continue;
          mpz_addmul(acc[(da + db) * rows + ia + ib].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        }
      }
    }
  }
  const Integer den = sa.den * sb.den;
  for (std::size_t d = 0; d < cols; ++d) {
    for (std::size_t i = 0; i < rows; ++i) {
      const auto& v = acc[d * rows + i];
      if (v == 0) continue;
      Rational r;
      detail::assign_ratio(r, v, den);
      out.set(static_cast<int>(i), static_cast<int>(d), std::move(r));
    }
  }
  return align(out, s.effective, s.q_order);
}

WQSeries operator*(const WQSeries& a, const QSeries& b) {
  const int q_order = std::min(a.q_order(), b.order());
  const int rows = a.effective_w_order();
  WQSeries out(a.w_order(), q_order);
  if (rows < 0) raise(ErrorKind::WUnderflow, "no w-coefficients remain");
  const auto cols = static_cast<std::size_t>(q_order) + 1;
  std::vector<Rational> flat(static_cast<std::size_t>(rows + 1) * cols);
  for (std::size_t d = 0; d < cols; ++d) {
    for (int i = 0; i <= rows; ++i) flat[d * static_cast<std::size_t>(rows + 1) + static_cast<std::size_t>(i)] = a.at(i, static_cast<int>(d));
  }
  const auto sa = detail::to_scaled(flat);
  const auto sb = detail::to_scaled(b.coeffs().first(cols));
  const auto stride = static_cast<std::size_t>(rows + 1);
  std::vector<Integer> acc(flat.size());
  for (std::size_t d = 0; d < cols; ++d) {
    for (std::size_t i = 0; i < stride; ++i) {
      const auto& x = sa.num[d * stride + i];
      if (x == 0) continue;
      for (std::size_t j = 0; d + j < cols; ++j) {
        if (sb.num[j] != 0) mpz_addmul(acc[(d + j) * stride + i].get_mpz_t(), x.get_mpz_t(), sb.num[j].get_mpz_t());
      }
    }
  }
  const Integer den = sa.den * sb.den;
  for (std::size_t d = 0; d < cols; ++d) {
    for (std::size_t i = 0; i < stride; ++i) {
      const auto& v = acc[d * stride + i];
      if (v == 0) continue;
      Rational r;
      detail::assign_ratio(r, v, den);
      out.set(static_cast<int>(i), static_cast<int>(d), std::move(r));
    }
  }
  return align(out, rows, q_order);
}

WQSeries operator*(const QSeries& b, const WQSeries& a) { return a * b; }

WQSeries reciprocal(const WQSeries& f) {
  if (f.effective_w_order() < 0) raise(ErrorKind::WUnderflow, "no w-coefficients remain");
  if (f.at(0, 0) == 0) raise(ErrorKind::DivisionByNonUnit, "w^0 q^0 coefficient is zero");
  const int w = f.w_order();
  const int e = f.effective_w_order();
  const int order = f.q_order();
  WQSeries h = align(WQSeries::from_columns({reciprocal(f.column(0)).truncated(w)}), e, 0);
  int prec = 0;
  while (prec < order) {
    prec = std::min(2 * prec + 1, order);
    const WQSeries hp = h.truncated(w, prec);
    WQSeries t = -(f.truncated(w, prec) * hp);
    t.set(0, 0, t.at(0, 0) + 2);
    h = hp * t;
  }
  return align(h, e, order);
}

WQSeries operator/(const WQSeries& a, const WQSeries& b) {
  const auto s = common_shape(a, b);
  return a.truncated(s.w_order, s.q_order) * reciprocal(b.truncated(s.w_order, s.q_order));
}

WQSeries operator/(const WQSeries& a, const QSeries& b) { return a * reciprocal(b); }

WQSeries d_q(const WQSeries& f) {
  WQSeries out = f;
  for (int d = 0; d <= f.q_order(); ++d) {
    for (int i = 0; i <= f.w_order(); ++i) {
      if (f.at(i, d) != 0) out.set(i, d, f.at(i, d) * d);
    }
  }
  return out;
}

WQSeries integrate_q(const WQSeries& g) {
  for (int i = 0; i <= g.effective_w_order(); ++i) {
    if (g.at(i, 0) != 0) raise(ErrorKind::NonZeroConstant, "integrate_q requires a zero q^0 column");
  }
  WQSeries out = g;
  for (int d = 1; d <= g.q_order(); ++d) {
    for (int i = 0; i <= g.w_order(); ++i) {
      if (g.at(i, d) != 0) out.set(i, d, g.at(i, d) / d);
    }
  }
  return out;
}

WQSeries apply_Dw(const WQSeries& f) {
  WQSeries out = multiply_by_w(f);
  out += d_q(f);
  return out;
}

WQSeries log_series(const WQSeries& f) {
  if (f.effective_w_order() < 0) raise(ErrorKind::WUnderflow, "no w-coefficients remain");
  if (f.at(0, 0) != 1) raise(ErrorKind::NonUnitConstant, "log requires w^0 q^0 coefficient 1");
  // log f = log f(w,0) + integral of (D f)/f.
  WQSeries out = f.q_order() == 0 ? WQSeries(f.w_order(), 0) : integrate_q(d_q(f) / f);
  const QSeries base = log_series(f.column(0));
  for (int i = 0; i <= base.order(); ++i) out.set(i, 0, base[i]);
  return out;
}

WQSeries exp_series(const WQSeries& f) {
  if (f.effective_w_order() < 0) raise(ErrorKind::WUnderflow, "no w-coefficients remain");
  if (f.at(0, 0) != 0) raise(ErrorKind::NonZeroConstant, "exp requires w^0 q^0 coefficient 0");
  const int order = f.q_order();
  std::vector<QSeries> fc;
  fc.reserve(static_cast<std::size_t>(order) + 1);
  for (int d = 0; d <= order; ++d) fc.push_back(f.column(d));
  std::vector<QSeries> g{exp_series(fc[0])};
  for (int d = 1; d <= order; ++d) {
    QSeries acc(fc[0].order());
    for (int k = 1; k <= d; ++k) {
      if (fc[static_cast<std::size_t>(k)].is_zero()) continue;
      acc += (fc[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(d - k)]) * Rational(k);
    }
    g.push_back(acc * make_rational(1, d));
  }
  return align(WQSeries::from_columns(g).truncated(f.w_order(), order), f.effective_w_order(), order);
}

WQSeries pow_rational(const WQSeries& f, const Rational& r) {
  if (f.effective_w_order() >= 0 && f.at(0, 0) != 1) raise(ErrorKind::NonUnitConstant, "fractional power requires w^0 q^0 coefficient 1");
  return exp_series(log_series(f) * r);
}

QSeries extract_w(const WQSeries& f, int p) {
  if (p < 0 || p > f.effective_w_order()) {
    raise(ErrorKind::WUnderflow, "w^" + std::to_string(p) + " requested but only w^0..w^" +
                                     std::to_string(f.effective_w_order()) + " are known");
  }
  QSeries out(f.q_order());
  for (int d = 0; d <= f.q_order(); ++d) out.set(d, f.at(p, d));
  return out;
}

QSeries eval_w0(const WQSeries& f) { return extract_w(f, 0); }

WQSeries divide_by_w(const WQSeries& f) {
  if (f.effective_ < 0) raise(ErrorKind::WUnderflow, "no w-coefficients remain to divide");
  for (int d = 0; d <= f.q_order_; ++d) {
    if (f.at(0, d) != 0) raise(ErrorKind::WUnderflow, "divide_by_w on a series with nonzero w^0 row");
  }
  WQSeries out(f.w_order_, f.q_order_);
  out.effective_ = f.effective_ - 1;
  for (int d = 0; d <= f.q_order_; ++d) {
    for (int i = 0; i < f.w_order_; ++i) out.grid_[out.index(i, d)] = f.grid_[f.index(i + 1, d)];
  }
  out.clear_above_effective();
  return out;
}

WQSeries multiply_by_w(const WQSeries& f) {
  WQSeries out(f.w_order_, f.q_order_);
  out.effective_ = std::min(f.effective_ + 1, f.w_order_);
  for (int d = 0; d <= f.q_order_; ++d) {
    for (int i = 1; i <= f.w_order_; ++i) out.grid_[out.index(i, d)] = f.grid_[f.index(i - 1, d)];
  }
  out.clear_above_effective();
  return out;
}

}  // namespace cimirror
