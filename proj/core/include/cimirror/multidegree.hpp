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
#ifndef CIMIRROR_MULTIDEGREE_HPP
#define CIMIRROR_MULTIDEGREE_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cimirror/rational.hpp"

namespace cimirror {

/// Degrees (a_1, ..., a_l) of a Calabi-Yau complete intersection in P^{n-1},
/// with n = a_1 + ... + a_l.
///
/// Components equal to 1 do not change the variety and are dropped on
/// construction; the remaining degrees are kept sorted ascending.
class MultiDegree {
 public:
  /// Throws Error(InvalidArgument) for an empty list, a component < 1, or a
  /// list consisting only of 1s.
  explicit MultiDegree(std::vector<int> degrees);

  /// Parses "5" or "2,2,3" (whitespace around entries is ignored).
  static MultiDegree parse(std::string_view text);

  const std::vector<int>& degrees() const noexcept { return a_; }
  int n() const noexcept { return n_; }
  int l() const noexcept { return static_cast<int>(a_.size()); }
  int dim() const noexcept { return n_ - 1 - l(); }
  /// Number of unit components removed by the constructor.
  int dropped_ones() const noexcept { return dropped_ones_; }

  /// <a> = a_1 a_2 ... a_l.
  const Integer& prod() const noexcept { return prod_; }
  /// a^a = a_1^{a_1} ... a_l^{a_l}.
  const Integer& a_pow_a() const noexcept { return a_pow_a_; }
  /// Coefficients of w^{n-1-l} and w^{n-2-l} in (1+w)^n / prod(1 + a_r w).
  const Rational& eps0() const noexcept { return eps0_; }
  const Rational& eps1() const noexcept { return eps1_; }

  /// sum_k 1/a_k.
  Rational sum_inverse() const;
  /// S_p = sum_k a_k^p.
  Integer power_sum(int p) const;

  /// "(2,2,3)".
  std::string to_string() const;
  /// "2,2,3".
  std::string csv() const;

  /// Canonical order: fewer components first, then lexicographic.
  std::strong_ordering operator<=>(const MultiDegree& other) const;
  bool operator==(const MultiDegree& other) const { return a_ == other.a_; }

 private:
  std::vector<int> a_;
  int n_ = 0;
  int dropped_ones_ = 0;
  Integer prod_ = 1;
  Integer a_pow_a_ = 1;
  Rational eps0_;
  Rational eps1_;
};

/// Coefficients of w^0..w^pmax in (1+w)^n / prod_r (1 + a_r w).
std::vector<Rational> chern_coeffs(const MultiDegree& md, int pmax);

/// Every multidegree with all a_k >= 2 whose complete intersection has the
/// given dimension, in canonical order.
std::vector<MultiDegree> enumerate_cy(int dim);

}  // namespace cimirror

#endif  // CIMIRROR_MULTIDEGREE_HPP
