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
#ifndef CIMIRROR_TOOLS_CLI_HPP
#define CIMIRROR_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cimirror::cli {

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string command;
  std::optional<std::string> multidegree;
  std::optional<int> dim;
  std::optional<int> max_degree;
  std::optional<int> w_order;
  std::optional<Format> format;
  std::string suite = "all";
  std::optional<std::string> kernel;
  int jobs = 1;
  bool validate = false;
};

/// Runs one subcommand. Results go to out, diagnostics and progress to err.
/// Returns the process exit code: 0 success, 1 failed checks, 2 usage or
/// computation error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to run().
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cimirror::cli

#endif  // CIMIRROR_TOOLS_CLI_HPP
