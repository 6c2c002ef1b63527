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

// mtc: command-line front end over the C API.

#include <cstdio>
#include <memory>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "mtc/mtc.h"

namespace {

constexpr int kExitError = 2;

struct StringDeleter {
  void operator()(char *p) const { mtc_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int report_error(int status) {
  fmt::print(stderr, "mtc: {}: {}\n", mtc_status_name(status), mtc_last_error());
  return kExitError;
}

// "A..B" with optional signs.
bool parse_n_range(const std::string &text, int &lo, int &hi) {
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return false;
  lo = std::stoi(m[1].str());
  hi = std::stoi(m[2].str());
  return lo <= hi;
}

int run_list() {
  char *raw = nullptr;
  if (int st = mtc_list_builtins(&raw)) return report_error(st);
  OwnedString names(raw);
  fmt::print("{}", names.get());
  return 0;
}

struct CheckFlags {
  std::string target;
  std::string n_range;
  std::optional<double> tol;
  bool json = false;
  bool timings = false;
  std::optional<std::uint64_t> seed;
  std::string suites;
};

int run_check(const CheckFlags &f) {
  mtc_suite_options opts;
  if (int st = mtc_suite_options_default(&opts)) return report_error(st);
  if (!f.n_range.empty() && !parse_n_range(f.n_range, opts.n_min, opts.n_max)) {
    fmt::print(stderr, "mtc: --n-range expects A..B with A <= B, got '{}'\n", f.n_range);
    return kExitError;
  }
  if (f.tol) opts.tol = *f.tol;
  if (f.seed) opts.seed = *f.seed;
  if (!f.suites.empty()) opts.suites = f.suites.c_str();

  mtc_suite_result *res = nullptr;
  if (int st = mtc_run_suite(f.target.c_str(), &opts, &res)) return report_error(st);
  std::unique_ptr<mtc_suite_result, decltype(&mtc_suite_result_free)> guard(res, &mtc_suite_result_free);

  char *raw = nullptr;
  const int st = f.json ? mtc_suite_result_json(res, f.timings ? 1 : 0, &raw) : mtc_suite_result_text(res, &raw);
  if (st) return report_error(st);
  OwnedString out(raw);
  fmt::print("{}", out.get());

  const int code = mtc_suite_result_exit_code(res);
  if (code != 0 && f.json) {
    char *first = nullptr;
    if (mtc_suite_result_first_failure(res, &first) == MTC_OK && first) {
      OwnedString name(first);
      fmt::print(stderr, "first failure: {}\n", name.get());
    }
  }
  return code;
}

struct ComputeFlags {
  std::string command, target;
  std::string i, j, k, l;
  std::string perm = "(1 2)";
  int arity = 0;
  int m = 2;
  bool json = false;
};

int run_compute(const ComputeFlags &f) {
  mtc_compute_args args;
  mtc_compute_args_default(&args);
  auto opt = [](const std::string &s) { return s.empty() ? nullptr : s.c_str(); };
  args.i = opt(f.i);
  args.j = opt(f.j);
  args.k = opt(f.k);
  args.l = opt(f.l);
  args.perm = f.perm.c_str();
  args.arity = f.arity;
  args.m = f.m;
  args.json = f.json ? 1 : 0;
  char *raw = nullptr;
  if (int st = mtc_compute(f.command.c_str(), f.target.c_str(), &args, &raw)) return report_error(st);
  OwnedString out(raw);
  fmt::print("{}", out.get());
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Skeletal modular tensor categories: data checks and invariants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mtc_version()));

  CLI::App *list = app.add_subcommand("list", "List built-in categories");

  CheckFlags cf;
  CLI::App *check = app.add_subcommand("check", "Run the verification suite on a built-in or a category file");
  check->add_option("target", cf.target, "Built-in name or path")->required();
  check->add_option("--n-range", cf.n_range, "Level range A..B (inclusive)");
  check->add_option("--tol", cf.tol, "Absolute tolerance (default: MTC_TOL or 1e-9)");
  check->add_flag("--json", cf.json, "Emit the JSON report");
  check->add_flag("--timings", cf.timings, "Keep wall times in the JSON report");
  check->add_option("--seed", cf.seed, "Seed for randomized basis checks");
  check->add_option("--suite", cf.suites, "Comma-separated stages to run");

  ComputeFlags pf;
  CLI::App *compute = app.add_subcommand("compute", "Compute a single invariant");
  compute->add_option("command", pf.command, "xi | z | annulus | multifold | modular-data")
      ->required()
      ->check(CLI::IsMember({"xi", "z", "annulus", "multifold", "modular-data"}));
  compute->add_option("target", pf.target, "Built-in name or path")->required();
  compute->add_option("--i", pf.i, "Label");
  compute->add_option("--j", pf.j, "Label");
  compute->add_option("--k", pf.k, "Label");
  compute->add_option("--l", pf.l, "Label");
  compute->add_option("--perm", pf.perm, "Permutation in cycle notation")->capture_default_str();
  compute->add_option("--arity", pf.arity, "Number of tensor factors (0: from --perm)");
  compute->add_option("--m", pf.m, "Order of the multifold product")->capture_default_str();
  compute->add_flag("--json", pf.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (list->parsed()) return run_list();
  if (check->parsed()) return run_check(cf);
  if (compute->parsed()) return run_compute(pf);
  return kExitError;
}
