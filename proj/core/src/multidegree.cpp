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
#include "cimirror/multidegree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "cimirror/errors.hpp"

namespace cimirror {

MultiDegree::MultiDegree(std::vector<int> degrees) {
  if (degrees.empty()) raise(ErrorKind::InvalidArgument, "empty multidegree");
  for (int a : degrees) {
    if (a < 1) raise(ErrorKind::InvalidArgument, "multidegree components must be >= 1");
    if (a == 1) {
      ++dropped_ones_;
    } else {
      a_.push_back(a);
    }
  }
  if (a_.empty()) raise(ErrorKind::InvalidArgument, "multidegree has no component >= 2");
  std::sort(a_.begin(), a_.end());
  for (int a : a_) {
    n_ += a;
    prod_ *= a;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(a));
    a_pow_a_ *= p;
  }
  const int top = n_ - 1 - l();
  const auto c = chern_coeffs(*this, std::max(top, 0));
  eps0_ = top >= 0 ? c[static_cast<std::size_t>(top)] : Rational(0);
  eps1_ = top >= 1 ? c[static_cast<std::size_t>(top - 1)] : Rational(0);
}

MultiDegree MultiDegree::parse(std::string_view text) {
  std::vector<int> out;
  std::string item;
  auto flush = [&]() {
    std::string trimmed;
    for (char ch : item) {
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
    }
    if (trimmed.empty() || !std::all_of(trimmed.begin(), trimmed.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) || trimmed.size() > 6) {
      raise(ErrorKind::InvalidArgument, "bad multidegree component '" + item + "' in '" + std::string(text) + "'");
    }
    out.push_back(std::stoi(trimmed));
    item.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else {
      item.push_back(ch);
    }
  }
  flush();
  return MultiDegree(std::move(out));
}

Rational MultiDegree::sum_inverse() const {
  Rational s = 0;
  for (int a : a_) s += make_rational(1, a);
  return s;
}

Integer MultiDegree::power_sum(int p) const {
  Integer s = 0;
  for (int a : a_) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(p));
    s += t;
  }
  return s;
}

std::string MultiDegree::to_string() const { return "(" + csv() + ")"; }

std::string MultiDegree::csv() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < a_.size(); ++k) out << (k ? "," : "") << a_[k];
  return out.str();
}

std::strong_ordering MultiDegree::operator<=>(const MultiDegree& other) const {
  if (auto c = a_.size() <=> other.a_.size(); c != 0) return c;
  return a_ <=> other.a_;
}

std::vector<Rational> chern_coeffs(const MultiDegree& md, int pmax) {
  if (pmax < 0) return {};
  const auto len = static_cast<std::size_t>(pmax) + 1;
  std::vector<Rational> c(len);
  c[0] = 1;
  for (int k = 0; k < md.n(); ++k) {
    for (std::size_t p = len - 1; p >= 1; --p) c[p] += c[p - 1];
  }
  // Divide by (1 + a w): c_p <- c_p - a c_{p-1}, in increasing p.
  for (int a : md.degrees()) {
    for (std::size_t p = 1; p < len; ++p) c[p] -= a * c[p - 1];
  }
  return c;
}

std::vector<MultiDegree> enumerate_cy(int dim) {
  if (dim < 0) return {};
  // a_k - 1 runs over the parts of a partition of dim + 1.
  std::vector<MultiDegree> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      std::vector<int> a;
      for (int p : parts) a.push_back(p + 1);
      out.emplace_back(std::move(a));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(dim + 1, dim + 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cimirror
