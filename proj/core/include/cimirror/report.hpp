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
#ifndef CIMIRROR_REPORT_HPP
#define CIMIRROR_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "cimirror/qseries.hpp"
#include "cimirror/wqseries.hpp"

namespace cimirror {

struct Mismatch {
  int degree = 0;
  int w_power = -1;  // -1 when the compared objects are univariate
  std::string expected;
  std::string actual;
};

struct CheckResult {
  std::string subject;  // usually a multidegree, e.g. "(3,3)"
  std::string name;
  bool passed = false;
  int order = 0;
  std::optional<Mismatch> first_failure;
  std::string note;
};

/// Outcome of one identity suite: per-check pass/fail, the truncation order
/// each check ran at, and the first failing coefficient.
struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
  void add(CheckResult check);
  void merge(const VerificationReport& other);
};

/// Compares coefficients 0..order (capped at both operands' orders).
CheckResult compare_series(std::string subject, std::string name, const QSeries& actual,
                           const QSeries& expected, int order);
/// Compares the jets at w-powers 0..min(effective w-orders) and q-degrees 0..order.
CheckResult compare_series(std::string subject, std::string name, const WQSeries& actual,
                           const WQSeries& expected, int order);
CheckResult compare_value(std::string subject, std::string name, const Rational& actual,
                          const Rational& expected, int order = 0);
CheckResult make_check(std::string subject, std::string name, bool passed, int order, std::string note = {});

/// One line per check: "PASS suite subject name order=12" with the first
/// mismatch appended on failure.
std::string format_human(const VerificationReport& report);

}  // namespace cimirror

#endif  // CIMIRROR_REPORT_HPP
