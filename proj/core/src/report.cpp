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
#include "cimirror/report.hpp"

#include <algorithm>
#include <sstream>

namespace cimirror {

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

void VerificationReport::add(CheckResult check) { checks.push_back(std::move(check)); }

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

CheckResult compare_series(std::string subject, std::string name, const QSeries& actual,
                           const QSeries& expected, int order) {
  CheckResult r{std::move(subject), std::move(name), true, std::min({order, actual.order(), expected.order()}), {}, {}};
  for (int d = 0; d <= r.order; ++d) {
    if (actual[d] != expected[d]) {
      r.passed = false;
      r.first_failure = Mismatch{d, -1, to_string(expected[d]), to_string(actual[d])};
      break;
    }
  }
  return r;
}

CheckResult compare_series(std::string subject, std::string name, const WQSeries& actual,
                           const WQSeries& expected, int order) {
  CheckResult r{std::move(subject), std::move(name), true, std::min({order, actual.q_order(), expected.q_order()}), {}, {}};
  const int rows = std::min(actual.effective_w_order(), expected.effective_w_order());
  r.note = "w-powers 0.." + std::to_string(rows);
  for (int d = 0; d <= r.order && r.passed; ++d) {
    for (int i = 0; i <= rows; ++i) {
      if (actual.at(i, d) != expected.at(i, d)) {
        r.passed = false;
        r.first_failure = Mismatch{d, i, to_string(expected.at(i, d)), to_string(actual.at(i, d))};
        break;
      }
    }
  }
  if (rows < 0) {
    r.passed = false;
    r.note = "no common w-coefficients";
  }
  return r;
}

CheckResult compare_value(std::string subject, std::string name, const Rational& actual,
                          const Rational& expected, int order) {
  CheckResult r{std::move(subject), std::move(name), actual == expected, order, {}, {}};
  if (!r.passed) r.first_failure = Mismatch{0, -1, to_string(expected), to_string(actual)};
  return r;
}

CheckResult make_check(std::string subject, std::string name, bool passed, int order, std::string note) {
  return CheckResult{std::move(subject), std::move(name), passed, order, {}, std::move(note)};
}

std::string format_human(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << report.suite << " " << c.subject << " " << c.name
        << " order=" << c.order;
    if (!c.note.empty()) out << " [" << c.note << "]";
    if (c.first_failure) {
      const auto& m = *c.first_failure;
      out << " first mismatch at degree " << m.degree;
      if (m.w_power >= 0) out << ", w^" << m.w_power;
      out << ": expected " << m.expected << ", got " << m.actual;
    }
    out << "\n";
  }
  out << report.suite << ": " << (report.checks.size() - report.failures()) << "/" << report.checks.size()
      << " checks passed\n";
  return out.str();
}

}  // namespace cimirror
