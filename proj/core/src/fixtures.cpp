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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cimirror/bps.hpp"
#include "cimirror/errors.hpp"

#ifndef CI_MIRROR_DEFAULT_FIXTURES_DIR
#define CI_MIRROR_DEFAULT_FIXTURES_DIR "fixtures"
#endif
#ifndef CI_MIRROR_INSTALLED_FIXTURES_DIR
#define CI_MIRROR_INSTALLED_FIXTURES_DIR CI_MIRROR_DEFAULT_FIXTURES_DIR
#endif

namespace cimirror {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) raise(ErrorKind::FixtureError, "unterminated quote: " + line);
  return fields;
}

}  // namespace

std::string fixtures_dir() {
  if (const char* env = std::getenv("CI_MIRROR_FIXTURES"); env != nullptr && *env != '\0') return env;
  if (std::filesystem::is_directory(CI_MIRROR_DEFAULT_FIXTURES_DIR)) return CI_MIRROR_DEFAULT_FIXTURES_DIR;
  return CI_MIRROR_INSTALLED_FIXTURES_DIR;
}

FixtureSet load_fixture_file(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::FixtureError, "cannot open " + path);
  FixtureSet set{dim, path, {}};
  std::string line;
  int lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r" || line[0] == '#') continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 3) raise(ErrorKind::FixtureError, path + ":" + std::to_string(lineno) + ": expected 3 fields");
    const bool header = first && fields[0] == "multidegree";
    first = false;
    if (header) continue;
    try {
      FixtureRow row{MultiDegree::parse(fields[0]), std::stoi(fields[1]), Integer(fields[2], 10)};
      if (row.md.dim() != dim) {
        raise(ErrorKind::FixtureError, path + ":" + std::to_string(lineno) + ": " + row.md.to_string() +
                                           " is not of dimension " + std::to_string(dim));
      }
      set.rows.push_back(std::move(row));
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      raise(ErrorKind::FixtureError, path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return set;
}

FixtureSet fixtures(int dim) {
  if (dim < 3 || dim > 5) raise(ErrorKind::UnknownDimension, "no fixture table for dimension " + std::to_string(dim));
  const auto path = std::filesystem::path(fixtures_dir()) / ("bps_genus1_dim" + std::to_string(dim) + ".csv");
  return load_fixture_file(path.string(), dim);
}

}  // namespace cimirror
