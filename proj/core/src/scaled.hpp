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
#ifndef CIMIRROR_SRC_SCALED_HPP
#define CIMIRROR_SRC_SCALED_HPP

#include <span>
#include <vector>

#include "cimirror/rational.hpp"

namespace cimirror::detail {

// A rational vector written as integers over one common denominator. Products
// of series run entirely in mpz arithmetic this way; only the final
// coefficients pay for a gcd.
struct Scaled {
  std::vector<Integer> num;
  Integer den = 1;
};

inline Scaled to_scaled(std::span<const Rational> values) {
  Scaled s;
  for (const auto& v : values) {
    if (v.get_den() != 1) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), v.get_den_mpz_t());
  }
  s.num.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& v = values[i];
    if (v.get_num() == 0) continue;
    if (v.get_den() == s.den) {
      s.num[i] = v.get_num();
    } else {
      mpz_divexact(s.num[i].get_mpz_t(), s.den.get_mpz_t(), v.get_den_mpz_t());
      s.num[i] *= v.get_num();
    }
  }
  return s;
}

inline void assign_ratio(Rational& out, const Integer& num, const Integer& den) {
  mpz_set(out.get_num_mpz_t(), num.get_mpz_t());
  mpz_set(out.get_den_mpz_t(), den.get_mpz_t());
  out.canonicalize();
}

inline std::vector<Rational> from_scaled(const std::vector<Integer>& num, const Integer& den) {
  std::vector<Rational> out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] != 0) assign_ratio(out[i], num[i], den);
  }
  return out;
}

}  // namespace cimirror::detail

#endif  // CIMIRROR_SRC_SCALED_HPP
