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
#include "cimirror/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cimirror/errors.hpp"
#include "scaled.hpp"

namespace cimirror {

namespace {

void require_order(int order) {
  if (order < 0) raise(ErrorKind::InvalidArgument, "negative truncation order");
}

}  // namespace

QSeries::QSeries(int order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

QSeries QSeries::constant(const Rational& c, int order) {
  QSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

QSeries QSeries::monomial(const Rational& c, int degree, int order) {
  QSeries s(order);
  if (degree < 0) raise(ErrorKind::InvalidArgument, "negative monomial degree");
  if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = c;
  return s;
}

const Rational& QSeries::coeff(int d) const {
  if (d < 0 || d > order()) {
    throw std::out_of_range("coefficient index " + std::to_string(d) + " outside order " +
                            std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(d)];
}

void QSeries::set(int d, Rational value) {
  if (d < 0 || d > order()) {
    throw std::out_of_range("coefficient index " + std::to_string(d) + " outside order " +
                            std::to_string(order()));
  }
  coeffs_[static_cast<std::size_t>(d)] = std::move(value);
}

QSeries QSeries::truncated(int order) const {
  require_order(order);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  const int n = std::min(order, this->order());
  for (int d = 0; d <= n; ++d) c[static_cast<std::size_t>(d)] = coeffs_[static_cast<std::size_t>(d)];
  return QSeries(std::move(c));
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

QSeries& QSeries::operator+=(const QSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= other.coeffs_[d];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& other) {
  *this = *this * other;
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int d = 0; d <= n; ++d) {
    if (a[d] != b[d]) return false;
  }
  return true;
}

QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

QSeries operator-(QSeries a) {
  for (int d = 0; d <= a.order(); ++d) a.set(d, -a[d]);
  return a;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order(), b.order());
  const auto sa = detail::to_scaled(a.coeffs().first(static_cast<std::size_t>(order) + 1));
  const auto sb = detail::to_scaled(b.coeffs().first(static_cast<std::size_t>(order) + 1));
  std::vector<Integer> acc(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    const auto& x = sa.num[static_cast<std::size_t>(i)];
    if (x == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      const auto& y = sb.num[static_cast<std::size_t>(j)];
      if (y == 0) continue;
      mpz_addmul(acc[static_cast<std::size_t>(i + j)].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
  }
  return QSeries(detail::from_scaled(acc, sa.den * sb.den));
}

QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
QSeries operator*(const Rational& c, QSeries a) { return a *= c; }

QSeries operator/(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order(), b.order());
  return a.truncated(order) * reciprocal(b.truncated(order));
}

QSeries reciprocal(const QSeries& f) {
  if (f[0] == 0) raise(ErrorKind::DivisionByNonUnit, "series has zero constant term");
  const int order = f.order();
  // Newton iteration h <- h (2 - f h); each pass doubles the correct prefix.
  QSeries h = QSeries::constant(1 / Rational(f[0]), 0);
  int prec = 0;
  while (prec < order) {
    prec = std::min(2 * prec + 1, order);
    const QSeries hp = h.truncated(prec);
    QSeries t = -(f.truncated(prec) * hp);
    t.set(0, t[0] + 2);
    h = hp * t;
  }
  return h;
}

QSeries log_series(const QSeries& f) {
  if (f[0] != 1) raise(ErrorKind::NonUnitConstant, "log requires constant term 1");
  if (f.order() == 0) return QSeries(0);
  return integrate_q(d_q(f) * reciprocal(f));
}

QSeries exp_series(const QSeries& f) {
  if (f[0] != 0) raise(ErrorKind::NonZeroConstant, "exp requires zero constant term");
  const int order = f.order();
  // From D g = g D f: d g_d = sum_k k f_k g_{d-k}.
  std::vector<Rational> g(static_cast<std::size_t>(order) + 1);
  g[0] = 1;
  Rational t;
  for (int d = 1; d <= order; ++d) {
    Rational acc = 0;
    for (int k = 1; k <= d; ++k) {
      if (f[k] == 0) continue;
      t = f[k] * g[static_cast<std::size_t>(d - k)];
      t *= k;
      acc += t;
    }
    g[static_cast<std::size_t>(d)] = acc / d;
  }
  return QSeries(std::move(g));
}

QSeries pow_rational(const QSeries& f, const Rational& r) {
  if (f[0] != 1) raise(ErrorKind::NonUnitConstant, "fractional power requires constant term 1");
  const int order = f.order();
  // From f D g = r g D f: d g_d = sum_{k=1}^d (r k - (d - k)) f_k g_{d-k}.
  std::vector<Rational> g(static_cast<std::size_t>(order) + 1);
  g[0] = 1;
  Rational t;
  for (int d = 1; d <= order; ++d) {
    Rational acc = 0;
    for (int k = 1; k <= d; ++k) {
      if (f[k] == 0) continue;
      t = r * k - (d - k);
      t *= f[k];
      t *= g[static_cast<std::size_t>(d - k)];
      acc += t;
    }
    g[static_cast<std::size_t>(d)] = acc / d;
  }
  return QSeries(std::move(g));
}

QSeries pow_int(const QSeries& f, int k) {
  if (k < 0) return pow_int(reciprocal(f), -k);
  QSeries result = QSeries::constant(1, f.order());
  QSeries base = f;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

QSeries d_q(const QSeries& f) {
  QSeries out(f.order());
  for (int d = 1; d <= f.order(); ++d) {
    if (f[d] != 0) out.set(d, f[d] * d);
  }
  return out;
}

QSeries integrate_q(const QSeries& g) {
  if (g[0] != 0) raise(ErrorKind::NonZeroConstant, "integrate_q requires zero constant term");
  QSeries out(g.order());
  for (int d = 1; d <= g.order(); ++d) {
    if (g[d] != 0) out.set(d, g[d] / d);
  }
  return out;
}

QSeries derivative(const QSeries& f) {
  if (f.order() == 0) return QSeries(0);
  QSeries out(f.order() - 1);
  for (int d = 1; d <= f.order(); ++d) out.set(d - 1, f[d] * d);
  return out;
}

QSeries compose(const QSeries& f, const QSeries& g) {
  if (g[0] != 0) raise(ErrorKind::NonZeroConstant, "inner series of a composition needs g(0) = 0");
  const int order = std::min(f.order(), g.order());
  if (order == 0) return QSeries::constant(f[0], 0);
  const auto uz = static_cast<std::size_t>(order);

  // g = x u(x); accumulate sum_k f_k x^k u^k over the common denominator
  // den(f) den(u)^order, with u^k kept to the order - k it can still reach.
  const auto sf = detail::to_scaled(f.coeffs().first(uz + 1));
  const auto su = detail::to_scaled(g.coeffs().subspan(1, uz));
  std::vector<Integer> den_pow(uz + 1);
  den_pow[0] = 1;
  for (std::size_t k = 1; k <= uz; ++k) den_pow[k] = den_pow[k - 1] * su.den;

  std::vector<Integer> acc(uz + 1);
  std::vector<Integer> power(uz + 1);
  power[0] = 1;
  std::vector<Integer> next;
  Integer scale;
  for (std::size_t k = 0; k <= uz; ++k) {
    const std::size_t reach = uz - k;
    if (sf.num[k] != 0) {
      scale = sf.num[k] * den_pow[uz - k];
      for (std::size_t i = 0; i <= reach; ++i) {
        if (power[i] != 0) mpz_addmul(acc[k + i].get_mpz_t(), scale.get_mpz_t(), power[i].get_mpz_t());
      }
    }
    if (k == uz) break;
    next.assign(reach, Integer(0));
    for (std::size_t i = 0; i < reach; ++i) {
      if (power[i] == 0) continue;
      for (std::size_t j = 0; i + j < reach; ++j) {
        if (su.num[j] != 0) mpz_addmul(next[i + j].get_mpz_t(), power[i].get_mpz_t(), su.num[j].get_mpz_t());
      }
    }
    power.swap(next);
  }
  return QSeries(detail::from_scaled(acc, sf.den * den_pow[uz]));
}

QSeries revert(const QSeries& g) {
  if (g[0] != 0) raise(ErrorKind::NonZeroConstant, "revert requires g(0) = 0");
  const int order = g.order();
  if (order == 0) return QSeries(0);
  if (g[1] == 0) raise(ErrorKind::NonUnitLinearTerm, "revert requires a nonzero linear term");

  // Newton iteration on g(h) = x; a correct prefix of length m becomes 2m.
  QSeries h = QSeries::monomial(1 / Rational(g[1]), 1, 1);
  int prec = 1;
  while (prec < order) {
    prec = std::min(2 * prec, order);
    const QSeries hp = h.truncated(prec);
    QSeries residual = compose(g.truncated(prec), hp);
    residual.set(1, residual[1] - 1);
    const QSeries slope =
        compose(derivative(g.truncated(std::min(prec + 1, order))).truncated(prec), hp);
    h = hp - residual * reciprocal(slope);
  }
  return h;
}

std::size_t max_bits(const QSeries& f) {
  std::size_t bits = 0;
  for (const auto& c : f.coeffs()) {
    bits = std::max({bits, mpz_sizeinbase(c.get_num_mpz_t(), 2), mpz_sizeinbase(c.get_den_mpz_t(), 2)});
  }
  return bits;
}

std::string to_string(const QSeries& f, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (int d = 0; d <= f.order(); ++d) {
    if (f[d] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << f[d].get_str();
    if (d == 1) out << "*" << var;
    if (d > 1) out << "*" << var << "^" << d;
  }
  if (first) out << "0";
  out << " + O(" << var << "^" << f.order() + 1 << ")";
  return out.str();
}

}  // namespace cimirror
