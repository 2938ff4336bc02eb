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

#include <algorithm>
#include <mutex>

#include "cimirror/errors.hpp"

namespace cimirror {

BPSTable BPSTable::from_values(MultiDegree md, DegreeTable values) {
  BPSTable t{std::move(md), 0, std::move(values), {}};
  for (const auto& [d, v] : t.values) {
    t.integrality[d] = is_integral(v);
    t.max_degree = std::max(t.max_degree, d);
  }
  return t;
}

bool BPSTable::all_integral() const {
  return std::all_of(integrality.begin(), integrality.end(), [](const auto& kv) { return kv.second; });
}

namespace {

void require_3fold(const MultiDegree& md) {
  if (md.dim() != 3) {
    raise(ErrorKind::DimensionMismatch, md.to_string() + " has dimension " + std::to_string(md.dim()) + ", expected 3");
  }
}

int max_key(const DegreeTable& t) { return t.empty() ? 0 : t.rbegin()->first; }

Rational lookup(const DegreeTable& t, int d) {
  auto it = t.find(d);
  return it == t.end() ? Rational(0) : it->second;
}

long sigma1(int k) {
  long s = 0;
  for (int j = 1; j <= k; ++j) {
    if (k % j == 0) s += j;
  }
  return s;
}

}  // namespace

QSeries yukawa_3fold(const HyperContext& ctx) {
  require_3fold(ctx.md());
  const int D = ctx.q_order();
  const QSeries den = one_minus_aa_q(ctx.md(), D) * pow_int(ctx.I(0), 2) * pow_int(ctx.I(1), 3);
  return ctx.to_Q(reciprocal(den) * Rational(ctx.md().prod()));
}

DegreeTable gw0_3fold(const HyperContext& ctx) {
  const QSeries y = yukawa_3fold(ctx);
  DegreeTable t;
  for (int d = 1; d <= y.order(); ++d) t.emplace(d, y[d] / (d * d * d));
  return t;
}

DegreeTable bps0_3fold(const HyperContext& ctx) {
  return divisor_invert(gw0_3fold(ctx), [](int k) { return make_rational(1, k * k * k); });
}

DegreeTable bps0_3fold(const MultiDegree& md, int max_degree) {
  require_3fold(md);
  return bps0_3fold(HyperContext(md, max_degree));
}

DegreeTable divisor_forward(const DegreeTable& n, const std::function<Rational(int)>& c) {
  DegreeTable N;
  for (int d = 1; d <= max_key(n); ++d) {
    Rational s = 0;
    for (int k = 1; k <= d; ++k) {
      if (d % k == 0) s += c(k) * lookup(n, d / k);
    }
    N.emplace(d, s);
  }
  return N;
}

DegreeTable divisor_invert(const DegreeTable& N, const std::function<Rational(int)>& c) {
  DegreeTable n;
  for (int d = 1; d <= max_key(N); ++d) {
    Rational s = lookup(N, d);
    for (int k = 2; k <= d; ++k) {
      if (d % k == 0) s -= c(k) * n[d / k];
    }
    n.emplace(d, s / c(1));
  }
  return n;
}

DegreeTable BpsKernel::forward(const DegreeTable& bps, const DegreeTable& lower) const {
  DegreeTable N;
  for (int d = 1; d <= max_key(bps); ++d) {
    Rational s = 0;
    for (int k = 1; k <= d; ++k) {
      if (d % k == 0) s += coefficient(k) * lookup(bps, d / k) + source(k, d / k, lower);
    }
    N.emplace(d, s);
  }
  return N;
}

DegreeTable BpsKernel::invert(const DegreeTable& gw, const DegreeTable& lower) const {
  const Rational c1 = coefficient(1);
  if (c1 == 0) raise(ErrorKind::UnknownKernel, name() + " has a zero diagonal");
  DegreeTable n;
  for (int d = 1; d <= max_key(gw); ++d) {
    Rational s = lookup(gw, d);
    for (int k = 1; k <= d; ++k) {
      if (d % k != 0) continue;
      s -= source(k, d / k, lower);
      if (k > 1) s -= coefficient(k) * n[d / k];
    }
    n.emplace(d, s / c1);
  }
  return n;
}

std::string GenusOneKernel3Fold::description() const {
  return "threefold genus-1 multicover: N_1^d = sum_{k|d} [sigma_1(k)/k n_1^{d/k} + n_0^{d/k}/(12k)]";
}

Rational GenusOneKernel3Fold::coefficient(int k) const {
  Rational c(sigma1(k), k);
  c.canonicalize();
  return c;
}

Rational GenusOneKernel3Fold::source(int k, int e, const DegreeTable& lower) const {
  return lookup(lower, e) / (12 * k);
}

DegreeTable GenusOneKernel3Fold::lower_genus_data(const HyperContext& ctx) const { return bps0_3fold(ctx); }

namespace {

struct Registry {
  std::mutex mutex;
  std::map<std::string, std::shared_ptr<const BpsKernel>> kernels;

  Registry() {
    auto gv3 = std::make_shared<GenusOneKernel3Fold>();
    kernels.emplace(gv3->name(), gv3);
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

void register_kernel(std::shared_ptr<const BpsKernel> kernel) {
  if (!kernel) raise(ErrorKind::InvalidArgument, "null kernel");
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  r.kernels[kernel->name()] = std::move(kernel);
}

std::shared_ptr<const BpsKernel> find_kernel(const std::string& name) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  auto it = r.kernels.find(name);
  if (it == r.kernels.end()) raise(ErrorKind::UnknownKernel, "no kernel named '" + name + "'");
  return it->second;
}

std::shared_ptr<const BpsKernel> default_kernel(int dim) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  for (const auto& [name, k] : r.kernels) {
    if (k->dimension() == dim) return k;
  }
  return nullptr;
}

std::vector<std::string> kernel_names() {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  std::vector<std::string> names;
  for (const auto& [name, k] : r.kernels) names.push_back(name);
  return names;
}

BPSTable bps1_3fold(const MultiDegree& md, const DegreeTable& gw, const DegreeTable& n0) {
  require_3fold(md);
  if (max_key(gw) != max_key(n0)) raise(ErrorKind::InvalidArgument, "genus-0 and genus-1 tables differ in length");
  return BPSTable::from_values(md, GenusOneKernel3Fold().invert(gw, n0));
}

BPSTable bps_genus1(const HyperContext& ctx, const BpsKernel& kernel) {
  if (ctx.md().dim() != kernel.dimension()) {
    raise(ErrorKind::DimensionMismatch, "kernel " + kernel.name() + " is for dimension " +
                                            std::to_string(kernel.dimension()) + ", got " + ctx.md().to_string());
  }
  return BPSTable::from_values(ctx.md(), kernel.invert(gw_genus1(ctx).values, kernel.lower_genus_data(ctx)));
}

VerificationReport integrality_check(const BPSTable& table, int maxd, const std::string& label) {
  VerificationReport report{"integrality", {}};
  std::vector<int> bad;
  for (const auto& [d, v] : table.values) {
    if (d <= maxd && !is_integral(v)) bad.push_back(d);
  }
  const int order = std::min(maxd, table.max_degree);
  CheckResult check = make_check(table.md.to_string(), label + " integral up to d=" + std::to_string(order), bad.empty(), order);
  if (!bad.empty()) {
    check.first_failure = Mismatch{bad.front(), -1, "integer", to_string(table.values.at(bad.front()))};
    std::string note = "non-integral at d =";
    for (int d : bad) note += " " + std::to_string(d);
    check.note = note;
  }
  report.add(std::move(check));
  return report;
}

std::vector<MultiDegree> FixtureSet::multidegrees() const {
  std::vector<MultiDegree> out;
  for (const auto& r : rows) {
    if (std::find(out.begin(), out.end(), r.md) == out.end()) out.push_back(r.md);
  }
  return out;
}

int FixtureSet::max_degree() const {
  int m = 0;
  for (const auto& r : rows) m = std::max(m, r.degree);
  return m;
}

const Integer* FixtureSet::find(const MultiDegree& md, int d) const {
  for (const auto& r : rows) {
    if (r.md == md && r.degree == d) return &r.value;
  }
  return nullptr;
}

VerificationReport kernel_validate(const BpsKernel& kernel, const std::vector<KernelInput>& inputs,
                                   const FixtureSet& fixtures) {
  VerificationReport report{"fixtures", {}};
  std::map<MultiDegree, DegreeTable> computed;
  for (const auto& in : inputs) computed.emplace(in.md, kernel.invert(in.gw, in.lower));
  for (const auto& row : fixtures.rows) {
    const std::string subject = row.md.to_string();
    const std::string name = kernel.name() + " d=" + std::to_string(row.degree);
    auto it = computed.find(row.md);
    if (it == computed.end() || !it->second.count(row.degree)) {
      report.add(make_check(subject, name, false, row.degree, "no engine data"));
      continue;
    }
    report.add(compare_value(subject, name, it->second.at(row.degree), Rational(row.value), row.degree));
  }
  return report;
}

VerificationReport kernel_validate(const BpsKernel& kernel, const FixtureSet& fixtures) {
  std::vector<KernelInput> inputs;
  for (const auto& md : fixtures.multidegrees()) {
    HyperContext ctx(md, fixtures.max_degree());
    inputs.push_back({md, gw_genus1(ctx).values, kernel.lower_genus_data(ctx)});
  }
  return kernel_validate(kernel, inputs, fixtures);
}

}  // namespace cimirror
