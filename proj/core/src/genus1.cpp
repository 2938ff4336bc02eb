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
#include "cimirror/genus1.hpp"

#include "cimirror/errors.hpp"

namespace cimirror {

namespace {

QSeries log_one_minus_aa_q(const HyperContext& ctx) {
  return log_series(one_minus_aa_q(ctx.md(), ctx.q_order()));
}

// I_p weights shared by the GW formula and A-tilde.
std::vector<std::pair<int, Rational>> ip_weights(const MultiDegree& md) {
  const int nl = md.n() - md.l();
  std::vector<std::pair<int, Rational>> w;
  if (nl % 2 == 0) {
    for (int p = 0; 2 * p <= nl - 2; ++p) w.emplace_back(p, make_rational((nl - 2 * p) * (nl - 2 * p), 8));
  } else {
    for (int p = 0; 2 * p <= nl - 3; ++p) w.emplace_back(p, make_rational((nl - 2 * p) * (nl - 2 * p) - 1, 8));
  }
  for (auto& [p, c] : w) c.canonicalize();
  return w;
}

Rational prod_over_24(const MultiDegree& md) { return Rational(md.prod()) / 24; }

QSeries epsilon_terms(const HyperContext& ctx) {
  const auto& md = ctx.md();
  QSeries out(ctx.q_order());
  if (md.eps0() != 0) out += log_series(ctx.I(0)) * (prod_over_24(md) * md.eps0());
  if (md.eps1() != 0) out += ctx.J() * (prod_over_24(md) * md.eps1());
  return out;
}

}  // namespace

LogTerms gw_log_terms(const MultiDegree& md) {
  const int n = md.n();
  const int l = md.l();
  const bool even = (n - l) % 2 == 0;
  return {even ? make_rational(n - l, 48) : make_rational(n - 3 - l, 48), ip_weights(md)};
}

LogTerms a_tilde_log_terms(const MultiDegree& md) {
  const int n = md.n();
  const int l = md.l();
  const bool even = (n - l) % 2 == 0;
  return {even ? make_rational(n + 1, 48) : make_rational(n - 2, 48), ip_weights(md)};
}

QSeries evaluate(const LogTerms& terms, const HyperContext& ctx) {
  QSeries out = log_one_minus_aa_q(ctx) * terms.log_one_minus;
  for (const auto& [p, w] : terms.ip_weights) out += log_series(ctx.I(p)) * w;
  return out;
}

QSeries genus1_rhs(const HyperContext& ctx) {
  return epsilon_terms(ctx) - evaluate(gw_log_terms(ctx.md()), ctx);
}

QSeries gw_series(const HyperContext& ctx) { return ctx.to_Q(genus1_rhs(ctx)); }

DegreeTable to_table(const QSeries& f) {
  DegreeTable t;
  for (int d = 1; d <= f.order(); ++d) t.emplace(d, f[d]);
  return t;
}

GWTable gw_genus1(const HyperContext& ctx) {
  return {ctx.md(), ctx.q_order(), to_table(gw_series(ctx))};
}

GWTable gw_genus1(const MultiDegree& md, int max_degree) {
  if (max_degree < 1) raise(ErrorKind::InvalidArgument, "max degree must be >= 1");
  return gw_genus1(HyperContext(md, max_degree));
}

ThreefoldCoefficients corollary_3fold_coefficients(const MultiDegree& md) {
  const Rational prod(md.prod());
  const Rational n(md.n());
  return {-2 + prod / 72 * (n - Rational(md.power_sum(3))), prod / 48 * (Rational(md.power_sum(2)) - n)};
}

QSeries corollary_3fold(const HyperContext& ctx) {
  const auto& md = ctx.md();
  if (md.dim() != 3) {
    raise(ErrorKind::DimensionMismatch, "threefold formula applied to " + md.to_string() + " of dimension " + std::to_string(md.dim()));
  }
  const auto c = corollary_3fold_coefficients(md);
  const QSeries tail = pow_rational(ctx.I(1), make_rational(-1, 2)) * pow_rational(one_minus_aa_q(md, ctx.q_order()), make_rational(-1, 12));
  return log_series(ctx.I(0)) * c.log_I0 + ctx.J() * c.J + log_series(tail);
}

Rational mu_coefficient(const MultiDegree& md) {
  return make_rational(md.n(), 48) * (Rational(md.n() - 1) - 2 * md.sum_inverse());
}

QSeries a_tilde(const HyperContext& ctx) {
  return ctx.mu() * mu_coefficient(ctx.md()) - evaluate(a_tilde_log_terms(ctx.md()), ctx);
}

QSeries b_tilde(const HyperContext& ctx) {
  const auto& md = ctx.md();
  const int top = md.n() - 1 - md.l();
  QSeries out = epsilon_terms(ctx) - ctx.mu() * mu_coefficient(md);
  out += log_one_minus_aa_q(ctx) * make_rational(md.l() + 1, 48);
  if (top >= 2) {
    const auto chern = chern_coeffs(md, top);
    QSeries sum(ctx.q_order());
    for (int p = 2; p <= top; ++p) {
      const Rational& c = chern[static_cast<std::size_t>(top - p)];
      if (c != 0) sum += extract_w(ctx.log_tilde_F(), p) * c;
    }
    out += sum * prod_over_24(md);
  }
  return out;
}

QSeries a_bar(const HyperContext& ctx) {
  const auto& md = ctx.md();
  const int n = md.n();
  const int l = md.l();
  QSeries out = ctx.mu() * (2 * mu_coefficient(md));
  out -= log_one_minus_aa_q(ctx) * make_rational(3 * (n - 1 - l) * (n - 1 - l) + (n - 2), 24);
  for (int p = 0; p <= n - 2 - l; ++p) {
    const int m = n - l - p;
    out -= log_series(ctx.I(p)) * Rational(m * (m - 1) / 2);
  }
  return out;
}

QSeries reduced_series(const HyperContext& ctx) { return ctx.to_Q(a_tilde(ctx) + b_tilde(ctx)); }

QSeries x0_series(const HyperContext& ctx) { return d_q(reduced_series(ctx)); }

ReducedGWTable reduced_gw(const HyperContext& ctx) {
  const QSeries x0 = x0_series(ctx);
  ReducedGWTable t{ctx.md(), ctx.q_order(), {}};
  for (int d = 1; d <= x0.order(); ++d) t.values.emplace(d, x0[d] / d);
  return t;
}

QSeries reduced_correction(const HyperContext& ctx) {
  const auto& md = ctx.md();
  const int top = md.n() - 1 - md.l();
  QSeries sum(ctx.q_order());
  if (top < 2) return sum;
  const auto chern = chern_coeffs(md, top);
  for (int p = 2; p <= top; ++p) {
    const Rational& c = chern[static_cast<std::size_t>(top - p)];
    if (c != 0) sum += extract_w(ctx.log_tilde_F_over_I0(), p) * c;
  }
  return ctx.to_Q(sum) * (-prod_over_24(md));
}

VerificationReport pipeline_crosscheck(const HyperContext& ctx) {
  const std::string subject = ctx.md().to_string();
  const int order = ctx.q_order();
  VerificationReport report{"pipelines", {}};
  const QSeries at = a_tilde(ctx);
  const QSeries bt = b_tilde(ctx);
  report.add(compare_series(subject, "gw = reduced + correction", gw_series(ctx),
                            ctx.to_Q(at + bt) + reduced_correction(ctx), order));
  report.add(compare_series(subject, "A_bar/2 = A_tilde", a_bar(ctx) * make_rational(1, 2), at, order));
  report.add(compare_value(subject, "(A_tilde + B_tilde)(0) = 0", (at + bt)[0], 0, order));
  return report;
}

QSeries torus_cover_series(int k, int order) {
  QSeries out(order);
  for (int r = 1; k * r <= order; ++r) {
    for (int m = 1; k * r * m <= order; ++m) out.set(k * r * m, out[k * r * m] + make_rational(1, m));
  }
  return out;
}

VerificationReport elliptic_check(const HyperContext& ctx) {
  const auto& md = ctx.md();
  int k = 0;
  Rational j_coeff;
  if (md.degrees() == std::vector<int>{3}) {
    k = 3;
    j_coeff = make_rational(1, 8);
  } else if (md.degrees() == std::vector<int>{2, 2}) {
    k = 4;
    j_coeff = make_rational(1, 6);
  } else {
    raise(ErrorKind::UnsupportedMultidegree, "torus identities exist for (3) and (2,2) only, got " + md.to_string());
  }
  const int order = ctx.q_order();
  const std::string subject = md.to_string();
  const QSeries lhs = ctx.to_Q(ctx.J() * j_coeff - log_one_minus_aa_q(ctx) * make_rational(1, 24) -
                               log_series(ctx.I(0)) * make_rational(1, 2));
  const QSeries covers = torus_cover_series(k, order);
  VerificationReport report{"elliptic", {}};
  report.add(compare_series(subject, "torus identity", lhs, covers, order));
  report.add(compare_series(subject, "gw series = torus cover count", gw_series(ctx), covers, order));
  bool sparse = true;
  for (int d = 1; d <= order; ++d) {
    if (d % k != 0 && lhs[d] != 0) sparse = false;
  }
  report.add(make_check(subject, "zero off multiples of " + std::to_string(k), sparse, order));
  return report;
}

}  // namespace cimirror
