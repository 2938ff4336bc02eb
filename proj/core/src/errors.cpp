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

#include "cimirror/errors.hpp"

namespace cimirror {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorKind::NonUnitConstant: return "NonUnitConstant";
    case ErrorKind::NonZeroConstant: return "NonZeroConstant";
    case ErrorKind::NonUnitLinearTerm: return "NonUnitLinearTerm";
    case ErrorKind::WUnderflow: return "WUnderflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnsupportedMultidegree: return "UnsupportedMultidegree";
    case ErrorKind::UnknownDimension: return "UnknownDimension";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::UnknownKernel: return "UnknownKernel";
    case ErrorKind::RecursionSingularity: return "RecursionSingularity";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FixtureError: return "FixtureError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace cimirror
