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
#ifndef CIMIRROR_GENUS1_HPP
#define CIMIRROR_GENUS1_HPP

#include <map>
#include <utility>
#include <vector>

#include "cimirror/hyperseries.hpp"
#include "cimirror/multidegree.hpp"
#include "cimirror/qseries.hpp"
#include "cimirror/report.hpp"

namespace cimirror {

/// Degree-indexed exact values, d = 1..max_degree.
using DegreeTable = std::map<int, Rational>;

/// Genus-1 GW invariants N_1^d.
struct GWTable {
  MultiDegree md;
  int max_degree = 0;
  DegreeTable values;
};

/// Reduced genus-1 invariants N_1^{d;0}.
struct ReducedGWTable {
  MultiDegree md;
  int max_degree = 0;
  DegreeTable values;
};

/// c log(1 - a^a q) + sum_p w_p log I_p, the parity-dependent tail of the
/// genus-1 formulas.
struct LogTerms {
  Rational log_one_minus;
  std::vector<std::pair<int, Rational>> ip_weights;
};

/// Tail of the GW generating function (subtracted from the epsilon terms).
LogTerms gw_log_terms(const MultiDegree& md);
/// Tail of A-tilde; same I_p weights, different log(1 - a^a q) coefficient.
LogTerms a_tilde_log_terms(const MultiDegree& md);
QSeries evaluate(const LogTerms& terms, const HyperContext& ctx);

/// (<a>/24)(eps0 log I_0 + eps1 J) - tail, as a series in q.
QSeries genus1_rhs(const HyperContext& ctx);
/// sum_d N_1^d Q^d.
QSeries gw_series(const HyperContext& ctx);
GWTable gw_genus1(const HyperContext& ctx);
GWTable gw_genus1(const MultiDegree& md, int max_degree);

/// Coefficients of log I_0 and J in the threefold formula.
struct ThreefoldCoefficients {
  Rational log_I0;
  Rational J;
};
ThreefoldCoefficients corollary_3fold_coefficients(const MultiDegree& md);
/// The threefold specialisation written out with S_p = sum a_r^p.
/// Throws DimensionMismatch unless dim = 3.
QSeries corollary_3fold(const HyperContext& ctx);

/// (n/48)(n - 1 - 2 sum 1/a_k), the mu coefficient of A-tilde.
Rational mu_coefficient(const MultiDegree& md);
QSeries a_tilde(const HyperContext& ctx);
QSeries b_tilde(const HyperContext& ctx);
QSeries a_bar(const HyperContext& ctx);

/// (A-tilde + B-tilde) re-expanded in Q: sum_d N_1^{d;0} Q^d.
QSeries reduced_series(const HyperContext& ctx);
/// X_0(Q) = Q d/dQ of reduced_series.
QSeries x0_series(const HyperContext& ctx);
ReducedGWTable reduced_gw(const HyperContext& ctx);

/// -(<a>/24) sum_{p=2}^{n-1-l} c_{n-1-l-p} [log(tilde_F/I_0)]_{w;p}, in Q.
QSeries reduced_correction(const HyperContext& ctx);

/// gw_series = reduced_series + reduced_correction, and A-bar/2 = A-tilde.
VerificationReport pipeline_crosscheck(const HyperContext& ctx);

/// The torus identities for (3) and (2,2):
///   c J - log(1 - k' q)/24 - log(I_0)/2 = -sum_r log(1 - Q^{kr}).
/// Throws UnsupportedMultidegree for any other multidegree.
VerificationReport elliptic_check(const HyperContext& ctx);

/// -sum_{r>=1} log(1 - Q^{k r}) to the given order.
QSeries torus_cover_series(int k, int order);

DegreeTable to_table(const QSeries& f);

}  // namespace cimirror

#endif  // CIMIRROR_GENUS1_HPP
