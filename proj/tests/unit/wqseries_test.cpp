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

#include "cimirror/hyperseries.hpp"
#include "test_util.hpp"

using namespace cimirror;

namespace {

WQSeries random_wq(std::mt19937_64& rng, int W, int D, bool unit) {
  std::vector<QSeries> cols;
  for (int d = 0; d <= D; ++d) cols.push_back(testutil::random_series(rng, W));
  WQSeries f = WQSeries::from_columns(cols);
  if (unit) f.set(0, 0, 1);
  return f;
}

}  // namespace

TEST(WQSeries, ProductMatchesBivariateSchoolbook) {
  std::mt19937_64 rng(11);
  const WQSeries a = random_wq(rng, 4, 6, false);
  const WQSeries b = random_wq(rng, 4, 6, false);
  const WQSeries c = a * b;
  for (int d = 0; d <= 6; ++d) {
    for (int i = 0; i <= 4; ++i) {
      Rational s = 0;
      for (int e = 0; e <= d; ++e) {
        for (int j = 0; j <= i; ++j) s += a.at(j, e) * b.at(i - j, d - e);
      }
      EXPECT_EQ(c.at(i, d), s) << "w^" << i << " q^" << d;
    }
  }
}

TEST(WQSeries, ReciprocalAndLog) {
  std::mt19937_64 rng(12);
  const WQSeries f = random_wq(rng, 3, 8, true);
  EXPECT_EQ(f * reciprocal(f), WQSeries::constant(1, 3, 8));
  EXPECT_EQ(exp_series(log_series(f)), f);
}

TEST(WQSeries, DivideByWDropsEffectiveOrder) {
  WQSeries f(3, 2);
  f.set(1, 1, 5);
  f.set(2, 0, 7);
  const WQSeries g = divide_by_w(f);
  EXPECT_EQ(g.effective_w_order(), 2);
  EXPECT_EQ(g.at(0, 1), 5);
  EXPECT_EQ(g.at(1, 0), 7);
  WQSeries h(0, 1);
  EXPECT_KIND(divide_by_w(divide_by_w(h)), WUnderflow);
  WQSeries nz(2, 1);
  nz.set(0, 1, 1);
  EXPECT_KIND(divide_by_w(nz), WUnderflow);
}

TEST(WQSeries, ExtractW) {
  WQSeries f(2, 3);
  f.set(2, 3, 9);
  EXPECT_EQ(extract_w(f, 2), QSeries::monomial(9, 3, 3));
  EXPECT_EQ(eval_w0(f), QSeries(3));
  EXPECT_KIND(extract_w(f, 3), WUnderflow);
}

TEST(OpM, FixesConstantsAndConsumesOneOrder) {
  const WQSeries one = WQSeries::constant(1, 4, 6);
  const WQSeries m = op_M(one);
  EXPECT_EQ(m.effective_w_order(), 3);
  EXPECT_EQ(m.truncated(3, 6), WQSeries::constant(1, 3, 6));
  EXPECT_KIND(op_M(WQSeries::constant(2, 4, 6)), NonUnitConstant);
  EXPECT_KIND(op_M(WQSeries::constant(1, 0, 6)), WUnderflow);
}

TEST(OpM, NormalizesByValueAtZero) {
  // M(g f) = M f for any unit g(q) independent of w.
  std::mt19937_64 rng(13);
  const WQSeries f = random_wq(rng, 4, 7, true);
  const QSeries g = testutil::random_series(rng, 7, true);
  EXPECT_EQ(op_M(f * g), op_M(f));
}
