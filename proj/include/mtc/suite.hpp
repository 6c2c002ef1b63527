// Copyright 2026 The mtc Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtc/category.hpp"

namespace mtc {

struct SuiteOptions {
  int n_min = -2;
  int n_max = 2;
  double tol = 1e-9;
  double frobenius_tol = 1e-8;
  // Empty runs everything.
  std::vector<std::string> suites;
  std::uint64_t seed = 0;

  bool operator==(const SuiteOptions &) const = default;
};

// Suite stages in execution order.
const std::vector<std::string> &suite_names();

// Built-in names with the z_n(k) family replaced by a concrete member.
std::vector<std::string> representative_builtins();

// Built-in name or path to a category file.
CategorySpec resolve_target(const std::string &target);

struct SuiteResult {
  std::string tool_version;
  std::string target;
  SuiteOptions options;
  Report report;

  int exit_code() const { return report.ok() ? 0 : 1; }
  bool operator==(const SuiteResult &) const = default;
};

SuiteResult run_suite(const std::string &target, const SuiteOptions &opts = {});
SuiteResult run_suite(const CategorySpec &spec, const std::string &target, const SuiteOptions &opts);

// Stable key order. wall_time is written as 0 unless timings is set.
std::string suite_to_json(const SuiteResult &r, bool timings = false);
SuiteResult suite_from_json(const std::string &text);
std::string suite_to_text(const SuiteResult &r);

struct ComputeArgs {
  std::string i, j, k, l;
  std::string perm = "(1 2)";
  int arity = 0;  // 0: smallest arity that holds perm, at least 2
  int m = 2;
  bool json = false;
};

// xi | z | annulus | multifold | modular-data.
std::string compute(const std::string &command, const std::string &target, const ComputeArgs &args);

}  // namespace mtc
