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

#include "mtc/mtc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "mtc/category.hpp"
#include "mtc/suite.hpp"

struct mtc_category {
  mtc::CategorySpec spec;
};

struct mtc_suite_result {
  mtc::SuiteResult result;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string &msg) {
  g_last_error = msg;
  return code;
}

template <typename F>
int guarded(F &&body) {
  try {
    g_last_error.clear();
    body();
    return MTC_OK;
  } catch (const mtc::Error &e) {
    return fail(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(MTC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(MTC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MTC_ERR_INTERNAL, "unknown exception");
  }
}

char *dup_string(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

mtc::SuiteOptions to_options(const mtc_suite_options *o) {
  mtc::SuiteOptions out;
  if (!o) {
    out.tol = mtc::Tolerance::from_env().atol;
    return out;
  }
  out.n_min = o->n_min;
  out.n_max = o->n_max;
  out.tol = o->tol;
  out.frobenius_tol = o->frobenius_tol;
  out.seed = o->seed;
  if (o->suites) {
    std::stringstream ss(o->suites);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.suites.push_back(item);
    }
  }
  return out;
}

#define MTC_REQUIRE(ptr) \
  if (!(ptr)) return fail(MTC_ERR_NULL_ARGUMENT, #ptr " is null")

}  // namespace

extern "C" {

const char *mtc_version(void) { return MTC_VERSION; }

const char *mtc_last_error(void) { return g_last_error.c_str(); }

const char *mtc_status_name(int status) {
  if (status == MTC_ERR_NULL_ARGUMENT) return "NullArgument";
  if (status == MTC_ERR_INTERNAL) return "Internal";
  if (status < 0 || status > MTC_ERR_INVALID_ARGUMENT) return "Unknown";
  return mtc::error_code_name(static_cast<mtc::ErrorCode>(status));
}

void mtc_string_free(char *s) { std::free(s); }

int mtc_list_builtins(char **out) {
  MTC_REQUIRE(out);
  return guarded([&] {
    std::string s;
    for (const auto &n : mtc::builtin_names()) s += n + "\n";
    *out = dup_string(s);
  });
}

int mtc_category_builtin(const char *name, mtc_category **out) {
  MTC_REQUIRE(name);
  MTC_REQUIRE(out);
  return guarded([&] { *out = new mtc_category{mtc::builtin_category(name)}; });
}

int mtc_category_from_string(const char *text, mtc_category **out) {
  MTC_REQUIRE(text);
  MTC_REQUIRE(out);
  return guarded([&] { *out = new mtc_category{mtc::load_category_spec(text)}; });
}

int mtc_category_resolve(const char *target, mtc_category **out) {
  MTC_REQUIRE(target);
  MTC_REQUIRE(out);
  return guarded([&] { *out = new mtc_category{mtc::resolve_target(target)}; });
}

void mtc_category_free(mtc_category *cat) { delete cat; }

int mtc_category_rank(const mtc_category *cat, int *out) {
  MTC_REQUIRE(cat);
  MTC_REQUIRE(out);
  *out = cat->spec.rank;
  return MTC_OK;
}

int mtc_category_serialize(const mtc_category *cat, char **out) {
  MTC_REQUIRE(cat);
  MTC_REQUIRE(out);
  return guarded([&] { *out = dup_string(mtc::serialize_category_spec(cat->spec)); });
}

int mtc_suite_options_default(mtc_suite_options *opts) {
  MTC_REQUIRE(opts);
  const mtc::SuiteOptions d;
  opts->n_min = d.n_min;
  opts->n_max = d.n_max;
  opts->tol = d.tol;
  opts->frobenius_tol = d.frobenius_tol;
  opts->suites = nullptr;
  opts->seed = d.seed;
  return guarded([&] { opts->tol = mtc::Tolerance::from_env().atol; });
}

int mtc_run_suite(const char *target, const mtc_suite_options *opts, mtc_suite_result **out) {
  MTC_REQUIRE(target);
  MTC_REQUIRE(out);
  return guarded([&] { *out = new mtc_suite_result{mtc::run_suite(target, to_options(opts))}; });
}

int mtc_run_suite_category(const mtc_category *cat, const char *target_name, const mtc_suite_options *opts,
                           mtc_suite_result **out) {
  MTC_REQUIRE(cat);
  MTC_REQUIRE(out);
  const std::string name = target_name ? target_name : cat->spec.name;
  return guarded([&] { *out = new mtc_suite_result{mtc::run_suite(cat->spec, name, to_options(opts))}; });
}

void mtc_suite_result_free(mtc_suite_result *res) { delete res; }

int mtc_suite_result_exit_code(const mtc_suite_result *res) { return res ? res->result.exit_code() : 1; }

int mtc_suite_result_json(const mtc_suite_result *res, int timings, char **out) {
  MTC_REQUIRE(res);
  MTC_REQUIRE(out);
  return guarded([&] { *out = dup_string(mtc::suite_to_json(res->result, timings != 0)); });
}

int mtc_suite_result_text(const mtc_suite_result *res, char **out) {
  MTC_REQUIRE(res);
  MTC_REQUIRE(out);
  return guarded([&] { *out = dup_string(mtc::suite_to_text(res->result)); });
}

int mtc_suite_result_first_failure(const mtc_suite_result *res, char **out) {
  MTC_REQUIRE(res);
  MTC_REQUIRE(out);
  return guarded([&] {
    const mtc::Check *c = res->result.report.first_failure();
    *out = c ? dup_string(c->name) : nullptr;
  });
}

void mtc_compute_args_default(mtc_compute_args *args) {
  if (!args) return;
  const mtc::ComputeArgs d;
  args->i = args->j = args->k = args->l = nullptr;
  args->perm = nullptr;
  args->arity = d.arity;
  args->m = d.m;
  args->json = 0;
}

int mtc_compute(const char *command, const char *target, const mtc_compute_args *args, char **out) {
  MTC_REQUIRE(command);
  MTC_REQUIRE(target);
  MTC_REQUIRE(out);
  return guarded([&] {
    mtc::ComputeArgs a;
    if (args) {
      if (args->i) a.i = args->i;
      if (args->j) a.j = args->j;
      if (args->k) a.k = args->k;
      if (args->l) a.l = args->l;
      if (args->perm) a.perm = args->perm;
      a.arity = args->arity;
      a.m = args->m;
      a.json = args->json != 0;
    }
    *out = dup_string(mtc::compute(command, target, a));
  });
}

}  // extern "C"
