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
#include "cimirror/hyperseries.hpp"

#include <mutex>
#include <vector>

#include "cimirror/errors.hpp"

namespace cimirror {

namespace {

// t <- t * (c0 + c1 w), in place on a w-jet.
void mul_linear(std::vector<Rational>& t, const Rational& c0, const Rational& c1) {
  for (std::size_t i = t.size(); i-- > 0;) {
    t[i] *= c0;
    if (i > 0 && t[i - 1] != 0) t[i] += c1 * t[i - 1];
  }
}

enum class Variant { Tilde, Plain, Negative };

// Each q^d coefficient is the previous one times a finite product of linear
// w-factors and the inverse of one denominator jet.
WQSeries build_hypergeometric(const MultiDegree& md, int w_order, int q_order, Variant variant) {
  if (w_order < 0 || q_order < 0) raise(ErrorKind::InvalidArgument, "negative truncation order");
  const int n = md.n();
  std::vector<QSeries> columns;
  columns.reserve(static_cast<std::size_t>(q_order) + 1);
  std::vector<Rational> term(static_cast<std::size_t>(w_order) + 1);
  term[0] = 1;
  columns.emplace_back(term);
  for (int d = 1; d <= q_order; ++d) {
    for (int a : md.degrees()) {
      const int lo = variant == Variant::Negative ? a * (d - 1) : a * (d - 1) + 1;
      const int hi = variant == Variant::Negative ? a * d - 1 : a * d;
      for (int r = lo; r <= hi; ++r) mul_linear(term, Rational(r), Rational(a));
    }
    // Denominator jet: (w + d)^n, minus w^n for the plain and negative series.
    QSeries den(w_order);
    Integer binom = 1;
    Integer dpow;
    for (int i = 0; i <= std::min(n, w_order); ++i) {
      if (i > 0) {
        binom *= n - i + 1;
        binom /= i;
      }
      if (i == n && variant != Variant::Tilde) break;
      mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n - i));
      den.set(i, Rational(binom * dpow));
    }
    const QSeries next = QSeries(term) * reciprocal(den);
    term.assign(next.coeffs().begin(), next.coeffs().end());
    columns.emplace_back(term);
  }
  return WQSeries::from_columns(columns);
}

}  // namespace

WQSeries hg_tilde_F(const MultiDegree& md, int w_order, int q_order) {
  return build_hypergeometric(md, w_order, q_order, Variant::Tilde);
}

WQSeries hg_F(const MultiDegree& md, int w_order, int q_order) {
  return build_hypergeometric(md, w_order, q_order, Variant::Plain);
}

WQSeries hg_F_neg(const MultiDegree& md, int w_order, int q_order) {
  return build_hypergeometric(md, w_order, q_order, Variant::Negative);
}

WQSeries op_M(const WQSeries& f) {
  if (f.effective_w_order() < 1) raise(ErrorKind::WUnderflow, "M needs effective w-order >= 1");
  const QSeries f0 = eval_w0(f);
  if (f0[0] != 1) raise(ErrorKind::NonUnitConstant, "M requires f(0,0) = 1");
  const WQSeries g = f * reciprocal(f0);
  return g + divide_by_w(d_q(g));
}

QSeries one_minus_aa_q(const MultiDegree& md, int q_order) {
  QSeries s = QSeries::constant(1, q_order);
  if (q_order >= 1) s.set(1, Rational(-md.a_pow_a()));
  return s;
}

struct HyperContext::Cache {
  template <typename T>
  struct Slot {
    std::once_flag once;
    std::optional<T> value;

    template <typename Fn>
    const T& get(Fn&& fn) {
      std::call_once(once, [&] { value.emplace(fn()); });
      return *value;
    }
  };

  Slot<WQSeries> tilde_F;
  Slot<WQSeries> F;
  Slot<WQSeries> log_tilde_F;
  Slot<WQSeries> log_tilde_F_over_I0;
  Slot<std::vector<QSeries>> I;
  Slot<QSeries> J;
  Slot<MirrorMaps> mirror;
  Slot<QSeries> L;
  Slot<QSeries> mu;
};

HyperContext::HyperContext(MultiDegree md, int q_order, std::optional<int> w_order)
    : md_(std::move(md)), q_order_(q_order), w_order_(w_order.value_or(md_.n() + 2)), cache_(std::make_unique<Cache>()) {
  if (q_order_ < 0) raise(ErrorKind::InvalidArgument, "negative q-order");
  if (w_order_ < 0) raise(ErrorKind::InvalidArgument, "negative w-order");
}

HyperContext::~HyperContext() = default;
HyperContext::HyperContext(HyperContext&&) noexcept = default;
HyperContext& HyperContext::operator=(HyperContext&&) noexcept = default;

const WQSeries& HyperContext::tilde_F() const {
  return cache_->tilde_F.get([&] { return hg_tilde_F(md_, w_order_, q_order_); });
}

const WQSeries& HyperContext::F() const {
  return cache_->F.get([&] { return hg_F(md_, w_order_, q_order_); });
}

const WQSeries& HyperContext::log_tilde_F() const {
  return cache_->log_tilde_F.get([&] { return log_series(tilde_F()); });
}

const WQSeries& HyperContext::log_tilde_F_over_I0() const {
  return cache_->log_tilde_F_over_I0.get([&] { return log_series(tilde_F() / I(0)); });
}

const QSeries& HyperContext::I(int p) const {
  if (p < 0 || p > md_.n() - 1) {
    raise(ErrorKind::InvalidArgument, "I_p is defined for 0 <= p <= n-1, got p = " + std::to_string(p));
  }
  if (w_order_ < p + 1) {
    raise(ErrorKind::WUnderflow, "I_" + std::to_string(p) + " needs w-order >= " + std::to_string(p + 1) +
                                     ", context has " + std::to_string(w_order_));
  }
  const auto& all = cache_->I.get([&] {
    std::vector<QSeries> out;
    const int pmax = std::min(md_.n() - 1, w_order_ - 1);
    WQSeries f = tilde_F();
    for (int r = 0; r <= pmax; ++r) {
      out.push_back(eval_w0(f));
      if (r < pmax) f = op_M(f);
    }
    return out;
  });
  return all[static_cast<std::size_t>(p)];
}

const QSeries& HyperContext::J() const {
  return cache_->J.get([&] {
    // sum_d q^d prod_k (a_k d)! / (d!)^n * sum_k sum_{r=d+1}^{a_k d} a_k / r
    QSeries numerator(q_order_);
    Integer fact_d = 1;
    for (int d = 1; d <= q_order_; ++d) {
      fact_d *= d;
      Integer num = 1;
      Rational harmonic = 0;
      for (int a : md_.degrees()) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(a * d));
        num *= f;
        for (int r = d + 1; r <= a * d; ++r) harmonic += make_rational(a, r);
      }
      Integer den;
      mpz_pow_ui(den.get_mpz_t(), fact_d.get_mpz_t(), static_cast<unsigned long>(md_.n()));
      Rational c(num, den);
      c.canonicalize();
      numerator.set(d, c * harmonic);
    }
    return numerator / I(0);
  });
}

const QSeries& HyperContext::Q_of_q() const { return cache_->mirror.get([&] { return mirror_maps_impl(); }).Q_of_q; }

const QSeries& HyperContext::q_of_Q() const { return cache_->mirror.get([&] { return mirror_maps_impl(); }).q_of_Q; }

MirrorMaps HyperContext::mirror_maps_impl() const {
  QSeries Q(q_order_);
  if (q_order_ >= 1) {
    const QSeries e = exp_series(J());
    for (int d = 1; d <= q_order_; ++d) Q.set(d, e[d - 1]);
  }
  QSeries q = revert(Q);
  return {std::move(Q), std::move(q)};
}

const QSeries& HyperContext::L() const {
  return cache_->L.get([&] { return pow_rational(one_minus_aa_q(md_, q_order_), make_rational(-1, md_.n())); });
}

const QSeries& HyperContext::mu() const {
  return cache_->mu.get([&] {
    QSeries lm1 = L();
    lm1.set(0, 0);
    return integrate_q(lm1);
  });
}

QSeries HyperContext::to_Q(const QSeries& f) const { return compose(f, q_of_Q()); }

QSeries I_series(const MultiDegree& md, int p, int q_order) {
  return HyperContext(md, q_order).I(p);
}

QSeries J_series(const MultiDegree& md, int q_order) { return HyperContext(md, q_order).J(); }

MirrorMaps mirror_maps(const MultiDegree& md, int q_order) {
  HyperContext ctx(md, q_order);
  return {ctx.Q_of_q(), ctx.q_of_Q()};
}

LMu L_mu(const MultiDegree& md, int q_order) {
  HyperContext ctx(md, q_order);
  return {ctx.L(), ctx.mu()};
}

}  // namespace cimirror
