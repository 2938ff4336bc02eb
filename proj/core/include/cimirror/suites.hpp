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
#ifndef CIMIRROR_SUITES_HPP
#define CIMIRROR_SUITES_HPP

#include <optional>
#include <string>
#include <vector>

#include "cimirror/hyperseries.hpp"
#include "cimirror/multidegree.hpp"
#include "cimirror/report.hpp"

namespace cimirror {

/// Hypergeometric, Chern-class and asymptotic identities for one multidegree.
VerificationReport identities_suite(const MultiDegree& md, int order, std::optional<int> w_order = std::nullopt);
/// Genus-1 pipeline equivalences, vanishing for points and K3 surfaces, and
/// the threefold formula.
VerificationReport pipelines_suite(const MultiDegree& md, int order, std::optional<int> w_order = std::nullopt);
/// Both torus identities.
VerificationReport elliptic_suite(int order);
/// Stored BPS tables for one dimension, validated through the registered
/// kernel when there is one.
VerificationReport fixtures_suite(int dim);
/// Integrality of genus-0 and genus-1 BPS numbers up to max_degree.
/// Throws DimensionMismatch when no kernel exists for the dimension.
VerificationReport integrality_suite(const MultiDegree& md, int max_degree);

/// "identities", "pipelines", "elliptic", "fixtures", "integrality", "all".
const std::vector<std::string>& suite_names();
/// Throws UnknownSuite.
void require_suite(const std::string& name);

}  // namespace cimirror

#endif  // CIMIRROR_SUITES_HPP
