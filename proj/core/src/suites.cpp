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
#include "cimirror/suites.hpp"

#include <algorithm>

#include "cimirror/asymptotics.hpp"
#include "cimirror/bps.hpp"
#include "cimirror/errors.hpp"
#include "cimirror/genus1.hpp"

namespace cimirror {

namespace {

std::string str(int v) { return std::to_string(v); }

CheckResult compare_operators(const std::string& subject, const std::string& name, const DiffOperator& actual,
                              const DiffOperator& expected, int order) {
  if (actual.order() != expected.order()) {
    return make_check(subject, name, false, order,
                      "operator orders " + str(actual.order()) + " and " + str(expected.order()));
  }
  for (int i = 0; i <= actual.order(); ++i) {
    CheckResult r = compare_series(subject, name, actual.coeff(i), expected.coeff(i), order);
    if (!r.passed) {
      r.note = "coefficient of D^" + str(i);
      return r;
    }
  }
  return make_check(subject, name, true, order);
}

// (a D_w + r) applied to f.
WQSeries linear_Dw(const WQSeries& f, int a, int r) { return apply_Dw(f) * Rational(a) + f * Rational(r); }

WQSeries times_w_power(WQSeries f, int k) {
  for (int i = 0; i < k; ++i) f = multiply_by_w(f);
  return f;
}

void hypergeometric_checks(VerificationReport& rep, const HyperContext& ctx) {
  const auto& md = ctx.md();
  const std::string s = md.to_string();
  const int D = ctx.q_order();
  const int n = md.n();
  const int l = md.l();
  const QSeries one = QSeries::constant(1, D);
  const QSeries base = one_minus_aa_q(md, D);

  for (int p = n - l + 1; p <= n - 1; ++p) rep.add(compare_series(s, "I_" + str(p) + " = 1", ctx.I(p), one, D));
  for (int p = 0; p <= n - l; ++p) {
    rep.add(compare_series(s, "I_" + str(p) + " = I_" + str(n - l - p), ctx.I(p), ctx.I(n - l - p), D));
  }
  QSeries prod = one;
  QSeries weighted = one;
  for (int p = 0; p <= n - l; ++p) {
    prod *= ctx.I(p);
    if (n - l - p > 0) weighted *= pow_int(ctx.I(p), n - l - p);
  }
  rep.add(compare_series(s, "I_0 ... I_{n-l} = 1/(1 - a^a q)", prod, reciprocal(base), D));
  rep.add(compare_series(s, "prod I_p^{n-l-p} = (1 - a^a q)^{-(n-l)/2}", weighted,
                         pow_rational(base, make_rational(-(n - l), 2)), D));

  WQSeries f = ctx.F();
  for (int i = 0; i < n; ++i) f = op_M(f);
  rep.add(compare_series(s, "M^n F = F", f, ctx.F(), D));
  rep.add(compare_series(s, "F(0,q) = tilde F(0,q)", eval_w0(ctx.F()), eval_w0(ctx.tilde_F()), D));

  const int wn = ctx.w_order() + l;
  const WQSeries fneg = hg_F_neg(md, wn, D);
  WQSeries lhs = fneg;
  for (int i = 0; i < n; ++i) lhs = apply_Dw(lhs);
  WQSeries inner = fneg;
  for (int a : md.degrees()) {
    for (int r = 0; r < a; ++r) inner = linear_Dw(inner, a, r);
  }
  lhs -= inner * QSeries::variable(D);
  rep.add(compare_series(s, "hypergeometric ODE for F_{-l}", lhs, times_w_power(fneg, n), D));

  WQSeries fp = fneg;
  for (int p = -l; p <= -1; ++p) {
    rep.add(compare_series(s, "F_" + str(p) + "(0,q) = 1", eval_w0(fp), one, D));
    if (p < -1) fp = op_M(fp);
  }
  rep.add(compare_series(s, "M F_{-1} = F", op_M(fp), ctx.F(), D));
  WQSeries dl = fneg;
  for (int i = 0; i < l; ++i) dl = apply_Dw(dl);
  for (int i = 0; i < l; ++i) dl = divide_by_w(dl);
  rep.add(compare_series(s, "w^{-l} D_w^l F_{-l} = F", dl, ctx.F(), D));
  WQSeries chain = fneg;
  for (int i = 0; i < l; ++i) chain = op_M(chain);
  for (int p = 0; p <= std::min(3, n - 1); ++p) {
    rep.add(compare_series(s, "M^{l+" + str(p) + "} F_{-l} at w=0 = I_" + str(p), eval_w0(chain), ctx.I(p), D));
    if (p < std::min(3, n - 1)) chain = op_M(chain);
  }

  rep.add(compare_series(s, "J = [log(tilde F/I_0)]_{w;1}", ctx.J(), extract_w(ctx.log_tilde_F_over_I0(), 1), D));
  rep.add(compare_series(s, "Q(q(Q)) = Q", compose(ctx.Q_of_q(), ctx.q_of_Q()), QSeries::variable(D), D));

  QSeries allI = one;
  for (int r = 0; r < n; ++r) allI *= ctx.I(r);
  rep.add(compare_series(s, "(1 + D mu)^n = I_0 ... I_{n-1}", pow_int(one + d_q(ctx.mu()), n), allI, D));
  rep.add(compare_series(s, "D mu = L - 1", d_q(ctx.mu()), ctx.L() - one, D));
  rep.add(compare_series(s, "D L = L (L^n - 1)/n", d_q(ctx.L()),
                         ctx.L() * (pow_int(ctx.L(), n) - one) * make_rational(1, n), D));
}

void chern_checks(VerificationReport& rep, const MultiDegree& md) {
  const std::string s = md.to_string();
  const int n = md.n();
  const int l = md.l();
  const int top = n - 1 - l;
  const auto c = chern_coeffs(md, top);
  rep.add(compare_value(s, "chern w^0 = 1", c[0], 1));
  rep.add(compare_value(s, "eps0 = chern w^{n-1-l}", md.eps0(), c[static_cast<std::size_t>(top)]));
  rep.add(compare_value(s, "eps1 = chern w^{n-2-l}", md.eps1(), top >= 1 ? c[static_cast<std::size_t>(top - 1)] : Rational(0)));
  if (l == 1) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), Integer(1 - n).get_mpz_t(), static_cast<unsigned long>(n));
    const Rational nn(n);
    rep.add(compare_value(s, "eps0 residue form", md.eps0(), (nn * nn - 1 + Rational(p)) / (nn * nn)));
    rep.add(compare_value(s, "eps1 residue form", md.eps1(),
                          make_rational((n - 2) * (n + 1), 2 * n) + (1 - Rational(p)) / (nn * nn * nn)));
  }
  if (md.dim() == 3) {
    const auto& a = md.degrees();
    Rational s1 = 0, s2 = 0, s3 = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      s1 += a[i];
      for (std::size_t j = i; j < a.size(); ++j) {
        s2 += a[i] * a[j];
        for (std::size_t k = j; k < a.size(); ++k) s3 += a[i] * a[j] * a[k];
      }
    }
    const Rational nn(n);
    rep.add(compare_value(s, "eps0 triple-sum form", md.eps0(),
                          nn * (n - 1) * (n - 2) / 6 - nn * (n - 1) / 2 * s1 + nn * s2 - s3));
    rep.add(compare_value(s, "eps1 triple-sum form", md.eps1(), nn * (n - 1) / 2 - nn * s1 + s2));
  }
  if (md.dim() == 2) {
    rep.add(compare_value(s, "<a> eps0 = 24", Rational(md.prod()) * md.eps0(), 24));
    rep.add(compare_value(s, "eps1 = 0", md.eps1(), 0));
  }
}

void asymptotic_checks(VerificationReport& rep, const MultiDegree& md, int D) {
  const std::string s = md.to_string();
  const int n = md.n();
  const auto phi = phi_recursion(md, 1, D);
  rep.add(compare_series(s, "Phi_0 = L^{(l+1)/2}", phi[0], closed_form::phi0(md, D), D));
  rep.add(compare_series(s, "Phi_1 closed form", phi[1], closed_form::phi1(md, D), D));

  const auto xi = xi_coeffs(md);
  if (n >= 2) {
    rep.add(compare_value(s, "xi_{n-2} closed form", xi.xi[static_cast<std::size_t>(n - 2)], closed_form::xi_n_minus_2(md)));
    rep.add(compare_value(s, "xi_{n-2} second form", xi.xi[static_cast<std::size_t>(n - 2)], closed_form::xi_n_minus_2_alt(md)));
  }
  bool sums = true;
  for (int d = 0; d <= 5 && sums; ++d) {
    Rational lhs = 0, pw = 1;
    for (const auto& x : xi.xi) {
      lhs += x * pw;
      pw *= d;
    }
    Rational rhs = 1;
    for (int a : md.degrees()) {
      for (int j = 1; j <= a; ++j) rhs *= a * d + j;
    }
    sums = lhs == rhs / Rational(md.a_pow_a());
  }
  rep.add(make_check(s, "xi expansion at d = 0..5", sums, 5));

  bool low = true, degrees = true;
  for (int m = 0; m <= n; ++m) {
    for (int j = 0; j <= m; ++j) {
      const HPoly h = h_poly(m, j, n);
      degrees = degrees && h.degree() <= j;
      if (j <= 2) low = low && h == closed_form::h_low(m, j, n);
    }
  }
  rep.add(make_check(s, "H_{m,j} low closed forms, m <= n", low, n));
  rep.add(make_check(s, "deg H_{m,j} <= j", degrees, n));

  rep.add(compare_operators(s, "L_1 closed form", build_L_operator(md, 1, D), closed_form::L1(md, D), D));
  if (n >= 2) rep.add(compare_operators(s, "L_2 closed form", build_L_operator(md, 2, D), closed_form::L2(md, D), D));
}

}  // namespace

VerificationReport identities_suite(const MultiDegree& md, int order, std::optional<int> w_order) {
  VerificationReport rep{"identities", {}};
  HyperContext ctx(md, order, w_order);
  hypergeometric_checks(rep, ctx);
  chern_checks(rep, md);
  asymptotic_checks(rep, md, order);
  return rep;
}

VerificationReport pipelines_suite(const MultiDegree& md, int order, std::optional<int> w_order) {
  HyperContext ctx(md, order, w_order);
  VerificationReport rep = pipeline_crosscheck(ctx);
  const std::string s = md.to_string();
  if (md.dim() == 0 || md.dim() == 2) {
    rep.add(compare_series(s, "genus-1 series vanishes", genus1_rhs(ctx), QSeries(order), order));
  }
  if (md.dim() == 3) {
    rep.add(compare_series(s, "threefold formula", corollary_3fold(ctx), genus1_rhs(ctx), order));
  }
  return rep;
}

VerificationReport elliptic_suite(int order) {
  VerificationReport rep{"elliptic", {}};
  for (const auto& md : {MultiDegree({3}), MultiDegree({2, 2})}) rep.merge(elliptic_check(HyperContext(md, order)));
  return rep;
}

VerificationReport fixtures_suite(int dim) {
  const FixtureSet fx = fixtures(dim);
  VerificationReport rep{"fixtures", {}};
  const std::string s = "dim " + str(dim);
  const auto mds = fx.multidegrees();
  rep.add(make_check(s, "rows cover every multidegree", mds.size() == enumerate_cy(dim).size() &&
                                                              std::is_permutation(mds.begin(), mds.end(), enumerate_cy(dim).begin()),
                     fx.max_degree(), str(static_cast<int>(fx.rows.size())) + " rows from " + fx.source));
  if (auto kernel = default_kernel(dim)) {
    rep.merge(kernel_validate(*kernel, fx));
  } else {
    rep.add(make_check(s, "no kernel registered; stored values only", true, fx.max_degree()));
  }
  return rep;
}

VerificationReport integrality_suite(const MultiDegree& md, int max_degree) {
  auto kernel = default_kernel(md.dim());
  if (!kernel) {
    raise(ErrorKind::DimensionMismatch, "no BPS kernel for dimension " + str(md.dim()) + " (" + md.to_string() + ")");
  }
  HyperContext ctx(md, max_degree);
  VerificationReport rep{"integrality", {}};
  if (md.dim() == 3) rep.merge(integrality_check(BPSTable::from_values(md, bps0_3fold(ctx)), max_degree, "n_0"));
  rep.merge(integrality_check(bps_genus1(ctx, *kernel), max_degree, "n_1"));
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "pipelines", "elliptic", "fixtures", "integrality", "all"};
  return names;
}

void require_suite(const std::string& name) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    raise(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
  }
}

}  // namespace cimirror
