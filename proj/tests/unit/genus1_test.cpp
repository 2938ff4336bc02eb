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

#include "test_util.hpp"

using namespace cimirror;

TEST(Genus1, QuinticDegreeOne) {
  // N_1^1 = n_1^1 + n_0^1 / 12 with n_1^1 = 0 and n_0^1 the number of lines.
  const Rational lines = oracle::lines_on_ci({5});
  const GWTable t = gw_genus1(MultiDegree({5}), 5);
  EXPECT_EQ(t.values.at(1), lines / 12);
  EXPECT_EQ(to_string(t.values.at(1)), "2875/12");
  EXPECT_EQ(t.values.size(), 5u);
}

TEST(Genus1, ThreefoldCoefficients) {
  const auto c = corollary_3fold_coefficients(MultiDegree({5}));
  EXPECT_EQ(c.log_I0, make_rational(-31, 3));
  EXPECT_EQ(c.J, make_rational(25, 12));
  for (const auto& md : enumerate_cy(3)) {
    HyperContext ctx(md, 15);
    EXPECT_EQ(corollary_3fold(ctx), genus1_rhs(ctx)) << md.to_string();
  }
  EXPECT_KIND(corollary_3fold(HyperContext(MultiDegree({6}), 3)), DimensionMismatch);
}

TEST(Genus1, VanishingForPointsAndK3) {
  for (const auto& md : {MultiDegree({2}), MultiDegree({4}), MultiDegree({2, 3}), MultiDegree({2, 2, 2})}) {
    EXPECT_TRUE(genus1_rhs(HyperContext(md, 30)).is_zero()) << md.to_string();
  }
}

TEST(Genus1, Tori) {
  for (const auto& md : {MultiDegree({3}), MultiDegree({2, 2})}) {
    const int k = md.l() == 1 ? 3 : 4;
    HyperContext ctx(md, 30);
    const QSeries gw = gw_series(ctx);
    for (int d = 1; d <= 30; ++d) EXPECT_EQ(gw[d], oracle::torus_covers(k, d)) << md.to_string() << " d=" << d;
    EXPECT_TRUE(elliptic_check(ctx).passed());
  }
  EXPECT_KIND(elliptic_check(HyperContext(MultiDegree({5}), 3)), UnsupportedMultidegree);
}

TEST(Genus1, LogTermWeights) {
  // (5): n - l = 4 is even; I_0 and I_1 carry 16/8 and 4/8.
  const LogTerms g = gw_log_terms(MultiDegree({5}));
  EXPECT_EQ(g.log_one_minus, make_rational(4, 48));
  ASSERT_EQ(g.ip_weights.size(), 2u);
  EXPECT_EQ(g.ip_weights[0].second, 2);
  EXPECT_EQ(g.ip_weights[1].second, make_rational(1, 2));
  // (2,2,2,3): n - l = 5 is odd.
  const LogTerms odd = gw_log_terms(MultiDegree({2, 2, 2, 3}));
  EXPECT_EQ(odd.log_one_minus, make_rational(9 - 3 - 4, 48));
  ASSERT_EQ(odd.ip_weights.size(), 2u);
  EXPECT_EQ(odd.ip_weights[0].second, 3);
  EXPECT_EQ(odd.ip_weights[1].second, 1);
  EXPECT_EQ(a_tilde_log_terms(MultiDegree({5})).log_one_minus, make_rational(6, 48));
  EXPECT_EQ(a_tilde_log_terms(MultiDegree({2, 2, 2, 3})).log_one_minus, make_rational(7, 48));
}

TEST(Genus1, ReducedPlusCorrection) {
  for (const auto& md : {MultiDegree({2}), MultiDegree({2, 2}), MultiDegree({2, 2, 2}), MultiDegree({2, 2, 3}),
                         MultiDegree({2, 5}), MultiDegree({2, 2, 2, 2, 2, 2})}) {
    HyperContext ctx(md, 9);
    EXPECT_EQ(gw_series(ctx), reduced_series(ctx) + reduced_correction(ctx)) << md.to_string();
    EXPECT_EQ(a_bar(ctx) * make_rational(1, 2), a_tilde(ctx)) << md.to_string();
    const ReducedGWTable r = reduced_gw(ctx);
    const QSeries red = reduced_series(ctx);
    for (int d = 1; d <= 9; ++d) EXPECT_EQ(r.values.at(d), red[d]);
    EXPECT_TRUE(pipeline_crosscheck(ctx).passed());
  }
}

TEST(Genus1, NoCorrectionBelowTwoWPowers) {
  // n - 1 - l < 2 for curves and points.
  HyperContext ctx(MultiDegree({3}), 6);
  EXPECT_TRUE(reduced_correction(ctx).is_zero());
}

TEST(Genus1, InvalidDegree) { EXPECT_KIND(gw_genus1(MultiDegree({5}), 0), InvalidArgument); }
