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
#ifndef CIMIRROR_ASYMPTOTICS_HPP
#define CIMIRROR_ASYMPTOTICS_HPP

#include <vector>

#include "cimirror/multidegree.hpp"
#include "cimirror/qseries.hpp"

namespace cimirror {

/// prod_k prod_{j=1}^{a_k} (a_k D + j) = a^a sum_s xi_s D^s.
struct XiCoeffs {
  MultiDegree md;
  std::vector<Rational> xi;  // xi_0 .. xi_n
};

XiCoeffs xi_coeffs(const MultiDegree& md);

/// A polynomial in one variable X with rational coefficients.
class HPoly {
 public:
  HPoly() = default;
  HPoly(int m, int j, std::vector<Rational> coeffs);

  int m() const noexcept { return m_; }
  int j() const noexcept { return j_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept;

  Rational operator()(const Rational& x) const;
  /// Substitutes a power series for X.
  QSeries operator()(const QSeries& x) const;

  friend bool operator==(const HPoly& a, const HPoly& b);

 private:
  int m_ = 0;
  int j_ = 0;
  std::vector<Rational> coeffs_;
};

/// H_{m,j} from the recursion
///   H_{m,j} = H_{m-1,j} + (X - 1)(X d/dX + (m-j)/n) H_{m-1,j-1},
/// with H_{0,0} = 1 and H_{m,j} = 0 outside 0 <= j <= m.
HPoly h_poly(int m, int j, int n);

/// sum_i c_i(q) D^i with D = q d/dq.
class DiffOperator {
 public:
  explicit DiffOperator(std::vector<QSeries> coeffs);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const QSeries& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  QSeries apply(const QSeries& f) const;

 private:
  std::vector<QSeries> coeffs_;
};

/// The order-k operator L_k acting on the Phi_s, with coefficients already
/// evaluated at X = L^n = 1/(1 - a^a q). Requires 1 <= k <= n.
DiffOperator build_L_operator(const MultiDegree& md, int k, int q_order);

/// Phi_0 .. Phi_{s_max} from
///   L_1 Phi_s + sum_{k=2}^n L^{1-k} L_k Phi_{s+1-k} = 0,  Phi_s(0) = delta_{0,s},
/// solved degree by degree in q.
std::vector<QSeries> phi_recursion(const MultiDegree& md, int s_max, int q_order);

/// Closed forms used as independent checks on the objects above.
namespace closed_form {

/// The two displayed expressions for xi_{n-2}.
Rational xi_n_minus_2(const MultiDegree& md);
Rational xi_n_minus_2_alt(const MultiDegree& md);
/// H_{m,0}, H_{m,1}, H_{m,2}; j outside 0..2 throws InvalidArgument.
HPoly h_low(int m, int j, int n);
DiffOperator L1(const MultiDegree& md, int q_order);
DiffOperator L2(const MultiDegree& md, int q_order);
/// L^{(l+1)/2}.
QSeries phi0(const MultiDegree& md, int q_order);
QSeries phi1(const MultiDegree& md, int q_order);

}  // namespace closed_form

}  // namespace cimirror

#endif  // CIMIRROR_ASYMPTOTICS_HPP
