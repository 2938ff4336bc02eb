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
#include "cimirror/bps.hpp"

#include "test_util.hpp"

using namespace cimirror;

namespace {

DegreeTable random_table(std::mt19937_64& rng, int maxd) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 12);
  DegreeTable t;
  for (int d = 1; d <= maxd; ++d) t[d] = make_rational(num(rng), den(rng));
  return t;
}

std::map<int, oracle::Q> as_oracle(const DegreeTable& t) { return {t.begin(), t.end()}; }

long sigma1(int k) {
  long s = 0;
  for (int j = 1; j <= k; ++j) s += k % j == 0 ? j : 0;
  return s;
}

}  // namespace

TEST(DivisorSums, ForwardMatchesTrialDivisionAndInverts) {
  std::mt19937_64 rng(21);
  const auto cube = [](int k) { return make_rational(1, static_cast<long>(k) * k * k); };
  for (int trial = 0; trial < 5; ++trial) {
    const DegreeTable n = random_table(rng, 30);
    const DegreeTable N = divisor_forward(n, cube);
    const auto want = oracle::divisor_sum(as_oracle(n), cube);
    for (int d = 1; d <= 30; ++d) EXPECT_EQ(N.at(d), want.at(d));
    EXPECT_EQ(divisor_invert(N, cube), n);
  }
  DegreeTable ints;
  for (int d = 1; d <= 20; ++d) ints[d] = d * d - 7;
  EXPECT_EQ(divisor_invert(divisor_forward(ints, cube), cube), ints);
}

TEST(Kernel, GenusOneThreefoldIsTriangularWithUnitDiagonal) {
  const auto kernel = find_kernel("gv3");
  EXPECT_EQ(kernel->dimension(), 3);
  EXPECT_EQ(kernel->coefficient(1), 1);
  std::mt19937_64 rng(22);
  const DegreeTable n1 = random_table(rng, 30);
  const DegreeTable n0 = random_table(rng, 30);
  const DegreeTable N = kernel->forward(n1, n0);
  EXPECT_EQ(kernel->invert(N, n0), n1);

  // Oracle: sum over k | d of sigma_1(k)/k n1^{d/k} + n0^{d/k}/(12k).
  for (int d = 1; d <= 30; ++d) {
    Rational s = 0;
    for (int k = 1; k <= d; ++k) {
      if (d % k == 0) s += make_rational(sigma1(k), k) * n1.at(d / k) + n0.at(d / k) / (12 * k);
    }
    EXPECT_EQ(N.at(d), s) << d;
  }

  // Changing n at a non-divisor of d leaves N^d alone.
  DegreeTable bumped = n1;
  bumped[7] += 1;
  const DegreeTable N2 = kernel->forward(bumped, n0);
  for (int d = 1; d <= 30; ++d) {
    if (d % 7 != 0) EXPECT_EQ(N2.at(d), N.at(d));
  }
}

TEST(Kernel, Registry) {
  EXPECT_NE(default_kernel(3), nullptr);
  EXPECT_EQ(default_kernel(4), nullptr);
  EXPECT_EQ(default_kernel(5), nullptr);
  EXPECT_KIND(find_kernel("nope"), UnknownKernel);

  class Identity final : public BpsKernel {
   public:
    int dimension() const override { return 9; }
    std::string name() const override { return "test-identity-9"; }
    std::string description() const override { return "N = n"; }
    Rational coefficient(int k) const override { return k == 1 ? 1 : 0; }
    Rational source(int, int, const DegreeTable&) const override { return 0; }
    DegreeTable lower_genus_data(const HyperContext&) const override { return {}; }
  };
  register_kernel(std::make_shared<Identity>());
  EXPECT_EQ(find_kernel("test-identity-9")->dimension(), 9);
  EXPECT_NE(default_kernel(9), nullptr);
  std::mt19937_64 rng(23);
  const DegreeTable t = random_table(rng, 10);
  EXPECT_EQ(find_kernel("test-identity-9")->invert(t, {}), t);
}

TEST(Yukawa, LeadingTerms) {
  HyperContext quintic(MultiDegree({5}), 4);
  const QSeries y = yukawa_3fold(quintic);
  EXPECT_EQ(y[0], 5);
  EXPECT_EQ(y[1], oracle::lines_on_ci({5}));
  EXPECT_EQ(yukawa_3fold(HyperContext(MultiDegree({2, 2, 2, 2}), 2))[0], 16);
  EXPECT_KIND(yukawa_3fold(HyperContext(MultiDegree({6}), 2)), DimensionMismatch);
}

TEST(Genus0, DegreeOneCountsLines) {
  for (const auto& md : enumerate_cy(3)) {
    const DegreeTable n0 = bps0_3fold(md, 6);
    EXPECT_EQ(n0.at(1), oracle::lines_on_ci(md.degrees())) << md.to_string();
    for (const auto& [d, v] : n0) EXPECT_TRUE(is_integral(v)) << md.to_string() << " d=" << d;
  }
}

TEST(Genus1Bps, TableValues) {
  for (const auto& md : enumerate_cy(3)) {
    HyperContext ctx(md, 4);
    const BPSTable t = bps1_3fold(md, gw_genus1(ctx).values, bps0_3fold(ctx));
    EXPECT_EQ(t.values.at(1), 0) << md.to_string();
    EXPECT_EQ(t.values.at(2), 0) << md.to_string();
    EXPECT_TRUE(t.all_integral());
  }
  HyperContext q(MultiDegree({5}), 3);
  EXPECT_EQ(bps_genus1(q, *find_kernel("gv3")).values.at(3), 609250);
  HyperContext x(MultiDegree({2, 2, 2, 2}), 4);
  const BPSTable t = bps_genus1(x, *find_kernel("gv3"));
  EXPECT_EQ(t.values.at(3), 0);
  EXPECT_EQ(t.values.at(4), 14752);
  EXPECT_KIND(bps_genus1(HyperContext(MultiDegree({6}), 2), *find_kernel("gv3")), DimensionMismatch);
}

TEST(Integrality, DetectsCorruption) {
  HyperContext ctx(MultiDegree({5}), 12);
  BPSTable t = bps_genus1(ctx, *find_kernel("gv3"));
  EXPECT_TRUE(integrality_check(t, 12).passed());
  DegreeTable v = t.values;
  v[9] += make_rational(1, 3);
  v[11] += make_rational(1, 2);
  const BPSTable bad = BPSTable::from_values(t.md, v);
  EXPECT_FALSE(bad.integrality.at(9));
  const auto rep = integrality_check(bad, 12);
  ASSERT_FALSE(rep.passed());
  EXPECT_EQ(rep.checks[0].first_failure->degree, 9);
  EXPECT_NE(rep.checks[0].note.find("9 11"), std::string::npos);
  EXPECT_TRUE(integrality_check(bad, 8).passed());
}
