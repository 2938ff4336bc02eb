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

#include "test_util.hpp"

using namespace cimirror;
using testutil::from_oracle;
using testutil::to_oracle;

TEST(Hypergeometric, TildeFJetsMatchDirectExpansion) {
  for (const auto& md : {MultiDegree({5}), MultiDegree({2, 3}), MultiDegree({2, 2, 2})}) {
    const int W = 4;
    const WQSeries f = hg_tilde_F(md, W, 4);
    for (int d = 0; d <= 4; ++d) {
      EXPECT_EQ(f.column(d), from_oracle(oracle::tilde_F_jet(md.degrees(), d, W))) << md.to_string() << " q^" << d;
    }
  }
  EXPECT_EQ(hg_tilde_F(MultiDegree({5}), 2, 1).at(0, 1), 120);
  EXPECT_EQ(hg_tilde_F(MultiDegree({3, 3}), 2, 2).at(0, 2), 8100);
}

TEST(Hypergeometric, ValuesAtWZero) {
  const MultiDegree md({5});
  EXPECT_EQ(eval_w0(hg_F(md, 3, 10)), eval_w0(hg_tilde_F(md, 3, 10)));
  for (const auto& m : {MultiDegree({5}), MultiDegree({2, 2, 3})}) {
    EXPECT_EQ(eval_w0(hg_F_neg(m, 3, 8)), QSeries::constant(1, 8));
  }
}

TEST(Hypergeometric, I0IsTheFactorialSeries) {
  for (const auto& md : {MultiDegree({5}), MultiDegree({3, 3}), MultiDegree({2, 2, 2, 2})}) {
    EXPECT_EQ(I_series(md, 0, 12), from_oracle(oracle::i0_factorial(md.degrees(), 12)));
  }
  const QSeries i0 = I_series(MultiDegree({5}), 0, 2);
  EXPECT_EQ(i0[1], 120);
  EXPECT_EQ(i0[2], 113400);
}

TEST(Hypergeometric, I1IsOnePlusDJ) {
  for (const auto& md : {MultiDegree({5}), MultiDegree({2, 4}), MultiDegree({2, 2, 2, 2, 2})}) {
    HyperContext ctx(md, 10);
    EXPECT_EQ(ctx.I(1), QSeries::constant(1, 10) + d_q(ctx.J())) << md.to_string();
  }
}

TEST(Hypergeometric, MirrorMap) {
  HyperContext ctx(MultiDegree({5}), 10);
  EXPECT_EQ(ctx.J()[0], 0);
  EXPECT_EQ(ctx.J()[1], 770);
  EXPECT_EQ(ctx.Q_of_q()[1], 1);
  EXPECT_EQ(ctx.q_of_Q(), from_oracle(oracle::lagrange_revert(to_oracle(ctx.Q_of_q()))));
  EXPECT_EQ(compose(ctx.q_of_Q(), ctx.Q_of_q()), QSeries::variable(10));
  const MultiDegree md({2, 4});
  HyperContext c24(md, 12);
  EXPECT_EQ(extract_w(c24.log_tilde_F_over_I0(), 1), c24.J());
}

TEST(Hypergeometric, LAndMu) {
  const auto lm = L_mu(MultiDegree({5}), 20);
  EXPECT_EQ(lm.L[0], 1);
  EXPECT_EQ(lm.L[1], 625);
  EXPECT_EQ(lm.mu[0], 0);
  EXPECT_EQ(lm.mu[1], 625);
  EXPECT_EQ(lm.L, from_oracle(oracle::binomial_series(-3125, oracle::frac(-1, 5), 20)));
  EXPECT_EQ(d_q(lm.mu), lm.L - QSeries::constant(1, 20));
}

TEST(Hypergeometric, ProductOfAllI) {
  const MultiDegree md({2, 2, 2, 2});
  HyperContext ctx(md, 10);
  QSeries prod = QSeries::constant(1, 10);
  for (int r = 0; r < md.n(); ++r) prod *= ctx.I(r);
  EXPECT_EQ(pow_int(QSeries::constant(1, 10) + d_q(ctx.mu()), md.n()), prod);
}

TEST(Hypergeometric, ReflectionAndUnits) {
  const MultiDegree md({2, 2, 3});
  HyperContext ctx(md, 10);
  EXPECT_EQ(ctx.I(1), ctx.I(md.n() - md.l() - 1));
  for (int p = md.n() - md.l() + 1; p < md.n(); ++p) EXPECT_EQ(ctx.I(p), QSeries::constant(1, 10));
}

TEST(Hypergeometric, PeriodicityOfM) {
  for (const auto& md : {MultiDegree({5}), MultiDegree({3, 3}), MultiDegree({2, 2, 2, 2})}) {
    const WQSeries F = hg_F(md, md.n() + 2, 8);
    WQSeries f = F;
    for (int i = 0; i < md.n(); ++i) f = op_M(f);
    EXPECT_EQ(f.effective_w_order(), 2);
    EXPECT_EQ(f, F.truncated(2, 8)) << md.to_string();
  }
}

TEST(Hypergeometric, ContextErrors) {
  HyperContext small(MultiDegree({5}), 4, 2);
  EXPECT_NO_THROW(small.I(1));
  EXPECT_KIND(small.I(2), WUnderflow);
  HyperContext ctx(MultiDegree({5}), 4);
  EXPECT_KIND(ctx.I(5), InvalidArgument);
  EXPECT_KIND(ctx.I(-1), InvalidArgument);
  EXPECT_EQ(ctx.w_order(), 7);
}
