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

#ifndef CIMIRROR_RATIONAL_HPP
#define CIMIRROR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace cimirror {

// Exact rationals are GMP's mpq_class: always canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or bare "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q"; throws Error(InvalidArgument) otherwise.
Rational parse_rational(const std::string& text);

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace cimirror

#endif  // CIMIRROR_RATIONAL_HPP
