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


#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include <doctest.h>
#include <json.hpp>

#include "helpers.hpp"
#include "mtc/mtc.h"
#include "mtc/suite.hpp"

namespace {

using namespace mtc;
using namespace mtc::testing;
using json = nlohmann::json;

// Fibonacci with one F symbol scaled, written to a temporary file.
std::string corrupted_fibonacci_file() {
  CategorySpec s = builtin_category("fibonacci");
  s.name = "fibonacci_corrupted";
  for (auto &[key, v] : s.F)
    if (key.v[0] == 1 && key.v[1] == 1 && key.v[2] == 1 && key.v[3] == 1 && key.v[4] == 1 && key.v[7] == 1) v *= 1.1;
  const auto path = std::filesystem::temp_directory_path() / "mtc_corrupted_fibonacci.json";
  std::ofstream(path) << serialize_category_spec(s);
  return path.string();
}

SuiteOptions quick(std::vector<std::string> suites = {}) {
  SuiteOptions o;
  o.n_min = -1;
  o.n_max = 1;
  o.suites = std::move(suites);
  return o;
}

std::string take(char *p) {
  std::string s = p ? p : "";
  mtc_string_free(p);
  return s;
}

}  // namespace

TEST_SUITE("cli_reporting") {
  TEST_CASE("stage names and representatives") {
    CHECK(suite_names().front() == "validate");
    CHECK(suite_names().back() == "invariant");
    CHECK(suite_names().size() == 9);
    const auto reps = representative_builtins();
    CHECK(std::find(reps.begin(), reps.end(), "z_3(1)") != reps.end());
    CHECK(std::find(reps.begin(), reps.end(), "z_n(k)") == reps.end());
  }

  TEST_CASE("fibonacci passes every check") {
    const SuiteResult r = run_suite("fibonacci");
    CHECK(r.exit_code() == 0);
    const Summary s = r.report.summary();
    CHECK(s.failed == 0);
    CHECK(s.skipped == 0);
    CHECK(s.xfailed == 0);
    CHECK(s.passed > 100);
    CHECK(r.report.find("category.pentagon"));
    CHECK(r.report.find("azumaya.xi")->status == Status::Pass);
  }

  TEST_CASE("stages run in order") {
    const SuiteResult r = run_suite("semion", quick());
    std::vector<std::string> prefixes{"category.", "modular.", "deligne_square.", "module_pentagon.",
                                      "gamma_module_functor", "transposition_witness", "frobenius.", "azumaya.",
                                      "modular_invariant."};
    size_t last = 0;
    for (const auto &p : prefixes) {
      size_t first = r.report.checks.size();
      for (size_t i = 0; i < r.report.checks.size(); ++i)
        if (r.report.checks[i].name.rfind(p, 0) == 0) {
          first = i;
          break;
        }
      CAPTURE(p);
      REQUIRE(first < r.report.checks.size());
      CHECK(first >= last);
      last = first;
    }
  }

  TEST_CASE("non-modular control is green with expected failures") {
    const SuiteResult r = run_suite("rep_z2_symmetric", quick());
    CHECK(r.exit_code() == 0);
    const Check *xi = r.report.find("azumaya.xi");
    REQUIRE(xi);
    CHECK(xi->status == Status::XFail);
    CHECK(xi->message == "fails as expected (non-modular input)");
    const Check *v = r.report.find("verlinde.round_trip");
    REQUIRE(v);
    CHECK(v->status == Status::Skipped);
    CHECK_FALSE(v->message.empty());
    CHECK(r.report.summary().xfailed > 0);
  }

  TEST_CASE("corrupted file fails and names the first failure") {
    const std::string path = corrupted_fibonacci_file();
    const SuiteResult r = run_suite(path, quick());
    CHECK(r.exit_code() != 0);
    const Check *f = r.report.first_failure();
    REQUIRE(f);
    CHECK(f->name.rfind("category.", 0) == 0);
    CHECK(suite_to_text(r).find("first failure: " + f->name) != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("malformed options are rejected") {
    SuiteOptions o;
    o.n_min = 2;
    o.n_max = 1;
    CHECK_THROWS_AS(run_suite("trivial", o), Error);
    CHECK_THROWS_AS(run_suite("trivial", quick({"nonsense"})), Error);
    SuiteOptions t;
    t.tol = 0;
    CHECK_THROWS_AS(run_suite("trivial", t), Error);
    CHECK_THROWS_AS(run_suite("no_such_target"), Error);
  }

  TEST_CASE("stage subsets") {
    const SuiteResult r = run_suite("fibonacci", quick({"invariant"}));
    for (const auto &c : r.report.checks) {
      CAPTURE(c.name);
      const bool ok = c.name.rfind("modular_invariant.", 0) == 0 || c.name.rfind("annulus.", 0) == 0 ||
                      c.name.rfind("transposition.", 0) == 0 || c.name.rfind("permutation.", 0) == 0;
      CHECK(ok);
    }
    CHECK(r.report.find("annulus.hom_count"));
  }

  TEST_CASE("exit code tracks failures") {
    SuiteResult r;
    CHECK(r.exit_code() == 0);
    r.report.add("x", "t", 1.0, 0.5);
    CHECK(r.exit_code() == 1);
    r.report.checks[0].status = Status::XFail;
    CHECK(r.exit_code() == 0);
  }

  TEST_CASE("JSON report schema and round trip") {
    const SuiteResult r = run_suite("semion", quick({"validate", "modular"}));
    const std::string text = suite_to_json(r, true);
    const json j = json::parse(text);
    size_t last = 0;
    for (const char *key : {"\"tool_version\"", "\"target\"", "\"options\"", "\"checks\"", "\"summary\""}) {
      const size_t at = text.find(key);
      REQUIRE(at != std::string::npos);
      CHECK(at >= last);
      last = at;
    }
    CHECK(j["options"]["n_range"] == json::array({-1, 1}));
    CHECK(suite_from_json(text) == r);

    SuiteResult nan = r;
    nan.report.checks[0].max_deviation = std::numeric_limits<double>::quiet_NaN();
    const SuiteResult back = suite_from_json(suite_to_json(nan, true));
    CHECK(std::isnan(back.report.checks[0].max_deviation));
    CHECK_THROWS_AS(suite_from_json("{}"), Error);
  }

  TEST_CASE("JSON omits timings unless asked") {
    const SuiteResult r = run_suite("trivial", quick());
    const json j = json::parse(suite_to_json(r));
    for (const auto &c : j["checks"]) CHECK(c["wall_time"] == 0);
  }

  TEST_CASE("identical runs give identical JSON") {
    SuiteOptions o = quick();
    o.seed = 42;
    CHECK(suite_to_json(run_suite("ising", o)) == suite_to_json(run_suite("ising", o)));
  }

  TEST_CASE("compute commands") {
    ComputeArgs a;
    const std::string xi = compute("xi", "fibonacci", a);
    CHECK(xi.find("azumaya: yes") != std::string::npos);

    const std::string z = compute("z", "fibonacci", a);
    int lines = 0;
    for (char c : z) lines += c == '\n';
    CHECK(lines == 2 + 4);
    CHECK(z.find("1 2 1\n") != std::string::npos);

    a.i = a.j = a.k = a.l = "τ";
    CHECK(compute("annulus", "fibonacci", a) == "2\n");
    a.json = true;
    CHECK(json::parse(compute("annulus", "fibonacci", a))["annulus"] == 2);

    ComputeArgs m;
    m.m = 3;
    CHECK(compute("multifold", "fibonacci", m).find("tau tau tau : 1") != std::string::npos);
    m.json = true;
    CHECK(json::parse(compute("multifold", "fibonacci", m))["m"] == 3);

    ComputeArgs md;
    CHECK(compute("modular-data", "semion", md).find("modular: yes") != std::string::npos);
    md.json = true;
    CHECK(json::parse(compute("modular-data", "rep_z2_symmetric", md))["is_modular"] == false);

    ComputeArgs p;
    p.perm = "(1 2 3)";
    p.json = true;
    const json zj = json::parse(compute("z", "semion", p));
    CHECK(zj["arity"] == 3);
    CHECK(zj["triples"].size() == 8);
  }

  TEST_CASE("compute errors carry context") {
    ComputeArgs a;
    try {
      compute("annulus", "fibonacci", a);
      FAIL("expected an error");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
      CHECK(std::string(e.what()).find("compute annulus fibonacci") != std::string::npos);
    }
    CHECK_THROWS_AS(compute("volume", "fibonacci", a), Error);
    ComputeArgs z;
    z.perm = "(1 2)(6 7)";
    z.arity = 0;
    CHECK_THROWS_AS(compute("z", "ising", z), Error);
  }
}

TEST_SUITE("c_api") {
  TEST_CASE("version and builtins") {
    CHECK(std::string(mtc_version()) == MTC_VERSION);
    char *names = nullptr;
    REQUIRE(mtc_list_builtins(&names) == MTC_OK);
    CHECK(take(names).find("fibonacci\n") != std::string::npos);
  }

  TEST_CASE("category handles") {
    mtc_category *cat = nullptr;
    REQUIRE(mtc_category_builtin("ising", &cat) == MTC_OK);
    int rank = 0;
    CHECK(mtc_category_rank(cat, &rank) == MTC_OK);
    CHECK(rank == 3);
    char *text = nullptr;
    REQUIRE(mtc_category_serialize(cat, &text) == MTC_OK);
    mtc_category *back = nullptr;
    REQUIRE(mtc_category_from_string(text, &back) == MTC_OK);
    char *again = nullptr;
    REQUIRE(mtc_category_serialize(back, &again) == MTC_OK);
    CHECK(take(again) == take(text));
    mtc_category_free(back);
    mtc_category_free(cat);
  }

  TEST_CASE("errors set codes and messages") {
    mtc_category *cat = nullptr;
    CHECK(mtc_category_builtin("nope", &cat) == MTC_ERR_UNKNOWN_BUILTIN);
    CHECK(cat == nullptr);
    CHECK(std::string(mtc_last_error()).find("unknown built-in") != std::string::npos);
    CHECK(std::string(mtc_status_name(MTC_ERR_UNKNOWN_BUILTIN)) == "UnknownBuiltin");
    CHECK(mtc_category_from_string("{", &cat) == MTC_ERR_PARSE);
    CHECK(mtc_category_builtin(nullptr, &cat) == MTC_ERR_NULL_ARGUMENT);
    CHECK(mtc_category_builtin("trivial", &cat) == MTC_OK);
    CHECK(std::string(mtc_last_error()).empty());
    mtc_category_free(cat);
    mtc_category_free(nullptr);
  }

  TEST_CASE("suite through the C API matches the core") {
    mtc_suite_options o;
    REQUIRE(mtc_suite_options_default(&o) == MTC_OK);
    o.n_min = -1;
    o.n_max = 1;
    o.suites = "validate,invariant";
    mtc_suite_result *res = nullptr;
    REQUIRE(mtc_run_suite("fibonacci", &o, &res) == MTC_OK);
    CHECK(mtc_suite_result_exit_code(res) == 0);
    char *j = nullptr;
    REQUIRE(mtc_suite_result_json(res, 0, &j) == MTC_OK);
    CHECK(take(j) == suite_to_json(run_suite("fibonacci", quick({"validate", "invariant"}))));
    char *first = reinterpret_cast<char *>(1);
    CHECK(mtc_suite_result_first_failure(res, &first) == MTC_OK);
    CHECK(first == nullptr);
    char *text = nullptr;
    REQUIRE(mtc_suite_result_text(res, &text) == MTC_OK);
    CHECK(take(text).find("0 failed") != std::string::npos);
    mtc_suite_result_free(res);

    o.suites = "bogus";
    CHECK(mtc_run_suite("fibonacci", &o, &res) == MTC_ERR_INVALID_ARGUMENT);
  }

  TEST_CASE("suite on an explicit handle") {
    mtc_category *cat = nullptr;
    REQUIRE(mtc_category_builtin("semion", &cat) == MTC_OK);
    mtc_suite_options o;
    mtc_suite_options_default(&o);
    o.suites = "validate";
    mtc_suite_result *res = nullptr;
    REQUIRE(mtc_run_suite_category(cat, nullptr, &o, &res) == MTC_OK);
    char *j = nullptr;
    REQUIRE(mtc_suite_result_json(res, 0, &j) == MTC_OK);
    CHECK(json::parse(take(j))["target"] == "semion");
    mtc_suite_result_free(res);
    mtc_category_free(cat);
  }

  TEST_CASE("MTC_TOL feeds the default options") {
    ::setenv("MTC_TOL", "1e-8", 1);
    mtc_suite_options o;
    CHECK(mtc_suite_options_default(&o) == MTC_OK);
    CHECK(o.tol == 1e-8);
    ::setenv("MTC_TOL", "-1", 1);
    CHECK(mtc_suite_options_default(&o) == MTC_ERR_INVALID_ARGUMENT);
    CHECK(o.tol == 1e-9);
    ::unsetenv("MTC_TOL");
  }

  TEST_CASE("compute through the C API") {
    mtc_compute_args a;
    mtc_compute_args_default(&a);
    a.i = a.j = a.k = a.l = "tau";
    char *out = nullptr;
    REQUIRE(mtc_compute("annulus", "fibonacci", &a, &out) == MTC_OK);
    CHECK(take(out) == "2\n");
    CHECK(mtc_compute("annulus", "fibonacci", nullptr, &out) == MTC_ERR_INVALID_ARGUMENT);
  }
}
