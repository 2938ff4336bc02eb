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
#include "cimirror/asymptotics.hpp"

#include <algorithm>

#include "cimirror/errors.hpp"
#include "cimirror/hyperseries.hpp"

namespace cimirror {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

// Rows m = 0..m_max of H_{m,j}, each a vector over j = 0..m.
std::vector<std::vector<Poly>> h_table(int m_max, int n) {
  std::vector<std::vector<Poly>> h(static_cast<std::size_t>(m_max) + 1);
  h[0] = {Poly{1}};
  for (int m = 1; m <= m_max; ++m) {
    auto& row = h[static_cast<std::size_t>(m)];
    const auto& prev = h[static_cast<std::size_t>(m - 1)];
    row.resize(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
      Poly p = j <= m - 1 ? prev[static_cast<std::size_t>(j)] : Poly{};
      if (j >= 1) {
        const Poly& src = prev[static_cast<std::size_t>(j - 1)];
        // t = (X d/dX + (m-j)/n) src, then multiply by (X - 1).
        Poly t(src.size());
        const Rational shift = make_rational(m - j, n);
        for (std::size_t i = 0; i < src.size(); ++i) t[i] = src[i] * (Rational(static_cast<long>(i)) + shift);
        Poly u(t.size() + 1);
        for (std::size_t i = 0; i < t.size(); ++i) {
          u[i + 1] += t[i];
          u[i] -= t[i];
        }
        if (p.size() < u.size()) p.resize(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) p[i] += u[i];
      }
      trim(p);
      row[static_cast<std::size_t>(j)] = std::move(p);
    }
  }
  return h;
}

QSeries eval_poly(const Poly& p, const QSeries& x) {
  QSeries acc(x.order());
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * x;
    acc.set(0, acc[0] + p[i]);
  }
  return acc;
}

QSeries x_series(const MultiDegree& md, int q_order) { return reciprocal(one_minus_aa_q(md, q_order)); }

QSeries x_minus_one(const MultiDegree& md, int q_order) {
  QSeries s = x_series(md, q_order);
  s.set(0, s[0] - 1);
  return s;
}

}  // namespace

XiCoeffs xi_coeffs(const MultiDegree& md) {
  Poly p{1};
  for (int a : md.degrees()) {
    for (int j = 1; j <= a; ++j) {
      Poly next(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        next[i] += p[i] * j;
        next[i + 1] += p[i] * a;
      }
      p = std::move(next);
    }
  }
  const Rational scale(md.a_pow_a());
  for (auto& c : p) c /= scale;
  return {md, std::move(p)};
}

HPoly::HPoly(int m, int j, std::vector<Rational> coeffs) : m_(m), j_(j), coeffs_(std::move(coeffs)) { trim(coeffs_); }

int HPoly::degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

Rational HPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

QSeries HPoly::operator()(const QSeries& x) const { return eval_poly(coeffs_, x); }

bool operator==(const HPoly& a, const HPoly& b) { return a.coeffs_ == b.coeffs_; }

HPoly h_poly(int m, int j, int n) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "h_poly needs n >= 1");
  if (m < 0 || j < 0 || j > m) return HPoly(m, j, {});
  auto table = h_table(m, n);
  return HPoly(m, j, table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)]);
}

DiffOperator::DiffOperator(std::vector<QSeries> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) raise(ErrorKind::InvalidArgument, "operator without coefficients");
}

QSeries DiffOperator::apply(const QSeries& f) const {
  QSeries acc(f.order());
  QSeries power = f;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) power = d_q(power);
    if (!coeffs_[i].is_zero()) acc += coeffs_[i] * power;
  }
  return acc;
}

DiffOperator build_L_operator(const MultiDegree& md, int k, int q_order) {
  const int n = md.n();
  if (k < 1 || k > n) raise(ErrorKind::InvalidArgument, "L_k needs 1 <= k <= n");
  const auto xi = xi_coeffs(md).xi;
  const auto table = h_table(n, n);
  auto H = [&](int m, int j) -> const Poly& {
    static const Poly zero;
    if (m < 0 || j < 0 || j > m) return zero;
    return table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
  };
  const QSeries X = x_series(md, q_order);
  const QSeries Xm1 = x_minus_one(md, q_order);
  std::vector<QSeries> coeffs;
  for (int i = 0; i <= k; ++i) {
    QSeries c = eval_poly(H(n - i, k - i), X) * binomial(n, i);
    Poly inner;
    for (int r = 1; r <= k - i; ++r) {
      const Poly& h = H(n - i - r, k - i - r);
      const Rational w = binomial(n - r, i) * xi[static_cast<std::size_t>(n - r)];
      if (inner.size() < h.size()) inner.resize(h.size());
      for (std::size_t t = 0; t < h.size(); ++t) inner[t] += w * h[t];
    }
    trim(inner);
    if (!inner.empty()) c -= Xm1 * eval_poly(inner, X);
    coeffs.push_back(std::move(c));
  }
  return DiffOperator(std::move(coeffs));
}

std::vector<QSeries> phi_recursion(const MultiDegree& md, int s_max, int q_order) {
  if (s_max < 0) raise(ErrorKind::InvalidArgument, "s_max must be >= 0");
  const int n = md.n();
  std::vector<DiffOperator> ops;
  for (int k = 1; k <= n; ++k) ops.push_back(build_L_operator(md, k, q_order));
  // L^{1-k} = (1 - a^a q)^{(k-1)/n}.
  std::vector<QSeries> l_pow(static_cast<std::size_t>(n) + 1);
  const QSeries base = one_minus_aa_q(md, q_order);
  for (int k = 2; k <= n; ++k) l_pow[static_cast<std::size_t>(k)] = pow_rational(base, make_rational(k - 1, n));

  const DiffOperator& first = ops[0];
  std::vector<QSeries> phi;
  for (int s = 0; s <= s_max; ++s) {
    QSeries rhs(q_order);
    for (int k = 2; k <= n && s + 1 - k >= 0; ++k) {
      rhs += l_pow[static_cast<std::size_t>(k)] * ops[static_cast<std::size_t>(k - 1)].apply(phi[static_cast<std::size_t>(s + 1 - k)]);
    }
    rhs = -rhs;
    if (rhs[0] != 0) raise(ErrorKind::RecursionSingularity, "inhomogeneous term has a constant part at s = " + std::to_string(s));
    // Triangular solve of c_1 D Phi + c_0 Phi = rhs.
    QSeries out(q_order);
    out.set(0, s == 0 ? 1 : 0);
    const QSeries& c0 = first.coeff(0);
    const QSeries& c1 = first.coeff(1);
    for (int d = 1; d <= q_order; ++d) {
      Rational acc = rhs[d];
      for (int j = 1; j <= d; ++j) {
        const Rational& prev = out[d - j];
        if (prev == 0) continue;
        acc -= (c1[j] * (d - j) + c0[j]) * prev;
      }
      const Rational pivot = c1[0] * d + c0[0];
      if (pivot == 0) raise(ErrorKind::RecursionSingularity, "degenerate pivot at q^" + std::to_string(d));
      out.set(d, acc / pivot);
    }
    phi.push_back(std::move(out));
  }
  return phi;
}

namespace closed_form {

Rational xi_n_minus_2(const MultiDegree& md) {
  const auto& a = md.degrees();
  Rational first = 0;
  for (int ak : a) first += make_rational((ak - 1) * (ak + 1) * (3 * ak + 2), ak);
  first /= 24;
  Rational second = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) second += (1 + a[i]) * (1 + a[j]);
  }
  return first + second / 4;
}

Rational xi_n_minus_2_alt(const MultiDegree& md) {
  const long n = md.n();
  const long l = md.l();
  return -md.sum_inverse() / 12 + make_rational(3 * n * n + n * (6 * l - 4) + 3 * l * l - 6 * l, 24);
}

HPoly h_low(int m, int j, int n) {
  const Rational nn(n);
  switch (j) {
    case 0:
      return HPoly(m, 0, {1});
    case 1: {
      const Rational c = binomial(m, 2) / nn;
      return HPoly(m, 1, {-c, c});
    }
    case 2: {
      // C(m,3)/n^2 ((n+1)X - 1)(X - 1) + 3 C(m,4)/n^2 (X - 1)^2
      const Rational c3 = binomial(m, 3) / (nn * nn);
      const Rational c4 = 3 * binomial(m, 4) / (nn * nn);
      const Rational n1 = nn + 1;
      return HPoly(m, 2, {c3 + c4, c3 * (-n1 - 1) - 2 * c4, c3 * n1 + c4});
    }
    default:
      raise(ErrorKind::InvalidArgument, "closed form known for j <= 2 only");
  }
}

DiffOperator L1(const MultiDegree& md, int q_order) {
  const Rational half_l1 = make_rational(md.l() + 1, 2);
  return DiffOperator({-(x_minus_one(md, q_order) * half_l1), QSeries::constant(md.n(), q_order)});
}

DiffOperator L2(const MultiDegree& md, int q_order) {
  const long n = md.n();
  const long l = md.l();
  const QSeries X = x_series(md, q_order);
  const QSeries Xm1 = x_minus_one(md, q_order);
  const Rational a = make_rational((n - 1) * (n - 2) * (n - 6 * l - 5), 24 * n);
  const Rational b = make_rational((3 * n + 6 * l + 5) * (n - 1) * (n - 2), 24 * n);
  QSeries c0 = X * a;
  c0.set(0, c0[0] + b - xi_n_minus_2(md));
  c0 = c0 * Xm1;
  QSeries c1 = Xm1 * make_rational(-(l + 2) * (n - 1), 2);
  return DiffOperator({c0, c1, QSeries::constant(binomial(static_cast<int>(n), 2), q_order)});
}

QSeries phi0(const MultiDegree& md, int q_order) {
  return pow_rational(one_minus_aa_q(md, q_order), make_rational(-(md.l() + 1), 2 * md.n()));
}

QSeries phi1(const MultiDegree& md, int q_order) {
  const long n = md.n();
  const long l = md.l();
  const QSeries base = one_minus_aa_q(md, q_order);
  QSeries Lm1 = pow_rational(base, make_rational(-1, n));
  Lm1.set(0, Lm1[0] - 1);
  QSeries Xm1 = reciprocal(base);
  Xm1.set(0, Xm1[0] - 1);
  const Rational c1 = make_rational(n - 1, 24) - md.sum_inverse() / 12;
  const Rational c2 = make_rational((n - 2) * (n + 1) - 3 * (l * l - 1), 24 * n);
  const QSeries bracket = Lm1 * c1 - Xm1 * c2;
  // Phi_0 / L = (1 - a^a q)^{(2 - (l+1)) / (2n)}.
  return bracket * pow_rational(base, make_rational(1 - l, 2 * n));
}

}  // namespace closed_form

}  // namespace cimirror
