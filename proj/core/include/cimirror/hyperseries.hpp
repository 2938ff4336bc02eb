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
#ifndef CIMIRROR_HYPERSERIES_HPP
#define CIMIRROR_HYPERSERIES_HPP

#include <memory>
#include <optional>

#include "cimirror/multidegree.hpp"
#include "cimirror/qseries.hpp"
#include "cimirror/wqseries.hpp"

namespace cimirror {

/// sum_d q^d prod_k prod_{r=1}^{a_k d} (a_k w + r) / prod_{r=1}^d (w + r)^n.
WQSeries hg_tilde_F(const MultiDegree& md, int w_order, int q_order);
/// As hg_tilde_F with denominators (w + r)^n - w^n.
WQSeries hg_F(const MultiDegree& md, int w_order, int q_order);
/// As hg_F with numerator products over r = 0, ..., a_k d - 1.
WQSeries hg_F_neg(const MultiDegree& md, int w_order, int q_order);

/// M f = {1 + (q/w) d/dq} (f / f(0,q)). Consumes one w-order.
/// Requires f(0,0) = 1 (NonUnitConstant) and effective w-order >= 1 (WUnderflow).
WQSeries op_M(const WQSeries& f);

/// The series 1 - a^a q.
QSeries one_minus_aa_q(const MultiDegree& md, int q_order);

struct MirrorMaps {
  QSeries Q_of_q;
  QSeries q_of_Q;
};

/// Memoized mirror data for one multidegree at one truncation order.
///
/// Every accessor computes on first use and caches; concurrent readers are
/// safe. The default w-order is n + 2.
class HyperContext {
 public:
  HyperContext(MultiDegree md, int q_order, std::optional<int> w_order = std::nullopt);
  ~HyperContext();
  HyperContext(HyperContext&&) noexcept;
  HyperContext& operator=(HyperContext&&) noexcept;

  const MultiDegree& md() const noexcept { return md_; }
  int q_order() const noexcept { return q_order_; }
  int w_order() const noexcept { return w_order_; }

  const WQSeries& tilde_F() const;
  const WQSeries& F() const;
  const WQSeries& log_tilde_F() const;
  /// log(tilde_F / I_0), built by dividing first and taking the log after.
  const WQSeries& log_tilde_F_over_I0() const;

  /// I_p = M^p tilde_F(0,q) for 0 <= p <= n-1. Throws WUnderflow when the
  /// w-order is below p + 1.
  const QSeries& I(int p) const;
  /// The explicit harmonic-sum numerator of J, divided by I_0.
  const QSeries& J() const;
  /// Q(q) = q exp(J(q)).
  const QSeries& Q_of_q() const;
  /// q(Q), the compositional inverse of Q(q).
  const QSeries& q_of_Q() const;
  /// L = (1 - a^a q)^{-1/n}.
  const QSeries& L() const;
  /// mu = integral of (L - 1) dq/q.
  const QSeries& mu() const;

  /// Composition with the inverse mirror map: the q-series f re-expanded in Q.
  QSeries to_Q(const QSeries& f) const;

 private:
  struct Cache;
  MirrorMaps mirror_maps_impl() const;

  MultiDegree md_;
  int q_order_;
  int w_order_;
  std::unique_ptr<Cache> cache_;
};

QSeries I_series(const MultiDegree& md, int p, int q_order);
QSeries J_series(const MultiDegree& md, int q_order);

MirrorMaps mirror_maps(const MultiDegree& md, int q_order);

struct LMu {
  QSeries L;
  QSeries mu;
};
LMu L_mu(const MultiDegree& md, int q_order);

}  // namespace cimirror

#endif  // CIMIRROR_HYPERSERIES_HPP
