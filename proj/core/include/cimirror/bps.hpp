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
#ifndef CIMIRROR_BPS_HPP
#define CIMIRROR_BPS_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cimirror/genus1.hpp"
#include "cimirror/hyperseries.hpp"
#include "cimirror/multidegree.hpp"
#include "cimirror/report.hpp"

namespace cimirror {

/// Genus-1 BPS numbers as exact rationals; integrality[d] iff values[d] has
/// denominator 1.
struct BPSTable {
  MultiDegree md;
  int max_degree = 0;
  DegreeTable values;
  std::map<int, bool> integrality;

  static BPSTable from_values(MultiDegree md, DegreeTable values);
  bool all_integral() const;
};

/// <a> + sum_d d^3 N_0^d Q^d. Throws DimensionMismatch unless dim = 3.
QSeries yukawa_3fold(const HyperContext& ctx);
/// N_0^d = Y_d / d^3.
DegreeTable gw0_3fold(const HyperContext& ctx);
/// Inverts N_0^d = sum_{k|d} n_0^{d/k} / k^3.
DegreeTable bps0_3fold(const HyperContext& ctx);
DegreeTable bps0_3fold(const MultiDegree& md, int max_degree);

/// Divisor-sum rule N^d = sum_{k|d} c(k) n^{d/k}, c(1) = 1.
DegreeTable divisor_forward(const DegreeTable& n, const std::function<Rational(int)>& c);
DegreeTable divisor_invert(const DegreeTable& N, const std::function<Rational(int)>& c);

/// A lower-triangular map from BPS numbers to GW invariants of the form
///   N^d = sum_{k|d} [ coefficient(k) n^{d/k} + source(k, d/k, lower) ],
/// with coefficient(1) = 1 and lower the lower-genus BPS data.
class BpsKernel {
 public:
  virtual ~BpsKernel() = default;
  virtual int dimension() const = 0;
  virtual std::string name() const = 0;
  virtual std::string description() const = 0;
  virtual Rational coefficient(int k) const = 0;
  virtual Rational source(int k, int e, const DegreeTable& lower) const = 0;
  /// Lower-genus input computed from the mirror data.
  virtual DegreeTable lower_genus_data(const HyperContext& ctx) const = 0;

  DegreeTable forward(const DegreeTable& bps, const DegreeTable& lower) const;
  DegreeTable invert(const DegreeTable& gw, const DegreeTable& lower) const;
};

/// N_1^d = sum_{k|d} [ sigma_1(k)/k n_1^{d/k} + n_0^{d/k}/(12k) ].
class GenusOneKernel3Fold final : public BpsKernel {
 public:
  int dimension() const override { return 3; }
  std::string name() const override { return "gv3"; }
  std::string description() const override;
  Rational coefficient(int k) const override;
  Rational source(int k, int e, const DegreeTable& lower) const override;
  DegreeTable lower_genus_data(const HyperContext& ctx) const override;
};

/// Kernel lookup by name. "gv3" is built in; dims 4 and 5 have none unless
/// registered.
void register_kernel(std::shared_ptr<const BpsKernel> kernel);
std::shared_ptr<const BpsKernel> find_kernel(const std::string& name);
std::shared_ptr<const BpsKernel> default_kernel(int dim);
std::vector<std::string> kernel_names();

BPSTable bps1_3fold(const MultiDegree& md, const DegreeTable& gw, const DegreeTable& n0);
BPSTable bps_genus1(const HyperContext& ctx, const BpsKernel& kernel);

/// One check per table: every d <= maxd integral. All offending degrees
/// are listed in the note.
VerificationReport integrality_check(const BPSTable& table, int maxd, const std::string& label = "n_1");

struct FixtureRow {
  MultiDegree md;
  int degree = 0;
  Integer value;
};

struct FixtureSet {
  int dim = 0;
  std::string source;
  std::vector<FixtureRow> rows;

  std::vector<MultiDegree> multidegrees() const;
  int max_degree() const;
  const Integer* find(const MultiDegree& md, int d) const;
};

/// CI_MIRROR_FIXTURES if set, otherwise the source-tree fixtures when present,
/// otherwise the installed copy.
std::string fixtures_dir();
/// Throws UnknownDimension outside 3..5 and FixtureError on unreadable data.
FixtureSet fixtures(int dim);
FixtureSet load_fixture_file(const std::string& path, int dim);

struct KernelInput {
  MultiDegree md;
  DegreeTable gw;
  DegreeTable lower;
};

/// Applies the kernel's inversion and diffs degree by degree: one check per
/// fixture row.
VerificationReport kernel_validate(const BpsKernel& kernel, const std::vector<KernelInput>& inputs,
                                   const FixtureSet& fixtures);
/// Builds the inputs from the engine at order = fixtures.max_degree().
VerificationReport kernel_validate(const BpsKernel& kernel, const FixtureSet& fixtures);

}  // namespace cimirror

#endif  // CIMIRROR_BPS_HPP
