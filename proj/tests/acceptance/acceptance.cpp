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


// Acceptance gate: one PASS/FAIL line per criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "mtc/category.hpp"
#include "mtc/cft.hpp"
#include "mtc/deligne.hpp"
#include "mtc/diagram.hpp"
#include "mtc/frobenius.hpp"
#include "mtc/module_category.hpp"
#include "mtc/mtc.h"
#include "mtc/suite.hpp"

namespace {

using namespace mtc;

constexpr double kCoherenceTol = 1e-9;
constexpr double kSnapTol = 1e-6;
constexpr double kRelationTol = 1e-9;
constexpr double kPentagonTol = 1e-9;
constexpr double kFunctorTol = 1e-9;
constexpr double kTwistRoundTripTol = 1e-12;
constexpr double kWitnessTol = 1e-9;
constexpr double kFrobeniusTol = 1e-8;
constexpr double kSigmaTol = 1e-9;
constexpr double kXiTol = 1e-9;
constexpr double kUnitProjectionTol = 1e-8;
constexpr double kInvariantTol = 1e-9;
constexpr int kNMin = -2, kNMax = 2;

struct Outcome {
  bool pass = true;
  double deviation = 0.0;
  std::string detail;

  void track(double dev, double tol, const std::string &where) {
    deviation = std::max(deviation, dev);
    if (!(dev <= tol)) fail(where);
  }
  void require(bool ok, const std::string &where) {
    if (!ok) fail(where);
  }
  void fail(const std::string &where) {
    if (pass) detail = where;
    pass = false;
  }
};

std::vector<CategorySpec> builtins() {
  std::vector<CategorySpec> out;
  for (const auto &n : representative_builtins()) out.push_back(builtin_category(n));
  return out;
}

std::vector<CategorySpec> modular_builtins() {
  std::vector<CategorySpec> out;
  for (auto &s : builtins())
    if (modular_datum(s).is_modular) out.push_back(std::move(s));
  return out;
}

double check_dev(const Report &rep, const std::string &name) {
  const Check *c = rep.find(name);
  return c ? c->max_deviation : INFINITY;
}

Outcome coherence() {
  Outcome o;
  for (const auto &s : builtins()) {
    const Report rep = validate_category(s, {kCoherenceTol});
    for (const char *name : {"pentagon", "hexagon.forward", "hexagon.reverse", "ribbon"})
      o.track(check_dev(rep, name), kCoherenceTol, s.name + " " + name);
  }
  return o;
}

Outcome verlinde() {
  Outcome o;
  for (const auto &s : modular_builtins()) {
    const VerlindeResult v = verlinde_fusion(modular_datum(s), {kCoherenceTol, kSnapTol});
    o.track(v.max_snap_distance, kSnapTol, s.name + " snap");
    o.require(v.N == s.N, s.name + " fusion tensor");
  }
  return o;
}

Outcome sl2z() {
  Outcome o;
  for (const auto &s : modular_builtins()) {
    const ModularGroupResult g = modular_group_relations(modular_datum(s), {kRelationTol});
    o.track(check_dev(g.report, "sl2z.sts"), kRelationTol, s.name + " STS");
    o.track(check_dev(g.report, "sl2z.st_inv_s"), kRelationTol, s.name + " ST^-1S");
    o.track(std::abs(std::abs(g.gamma) - 1.0), kRelationTol, s.name + " |gamma|");
  }
  return o;
}

Outcome module_pentagon() {
  Outcome o;
  PentagonOptions all;
  all.sampling = Sampling::AllSimples;
  for (const char *name : {"fibonacci", "semion", "ising"}) {
    Engine E(builtin_category(name));
    for (int n = kNMin; n <= kNMax; ++n)
      for (Side side : {Side::Right, Side::Left}) {
        const Report rep = check_module_pentagon(E, n, side, {kPentagonTol}, all);
        o.track(rep.max_deviation(), kPentagonTol, std::string(name) + " n=" + std::to_string(n));
      }
  }
  return o;
}

Outcome twist_functor() {
  Outcome o;
  for (const auto &s : builtins()) {
    Engine E(s);
    for (int n = kNMin; n < kNMax; ++n) {
      const auto [data, rep] = gamma_twist_functor(E, n, {kFunctorTol});
      o.track(rep.max_deviation(), kFunctorTol, s.name + " n=" + std::to_string(n));
    }
    const std::vector<cplx> theta = extract_twist(gamma_twist_functor(E, 0, {kFunctorTol}).first);
    for (int i = 0; i < s.rank; ++i)
      o.track(std::abs(theta[i] - s.theta[i]), kTwistRoundTripTol, s.name + " twist round trip");
  }
  return o;
}

Outcome gamma_witness() {
  Outcome o;
  for (const char *name : {"fibonacci", "ising"}) {
    const CategorySpec s = builtin_category(name);
    Engine E(s);
    for (Label u = 0; u < s.rank; ++u)
      for (Label v = 0; v < s.rank; ++v) {
        const Report rep = transposition_nat_iso(E, u, v, {kWitnessTol});
        o.track(rep.max_deviation(), kWitnessTol, std::string(name) + " U=" + std::to_string(u) + " V=" + std::to_string(v));
      }
  }
  return o;
}

Outcome frobenius() {
  Outcome o;
  for (const char *name : {"fibonacci", "semion"}) {
    const auto ctx = make_ambient(builtin_category(name));
    std::vector<FrobeniusAlgebraData> algs;
    for (int n = kNMin; n <= kNMax; ++n) {
      algs.push_back(build_frobenius_algebra(ctx, n));
      const Report rep = verify_frobenius_axioms(algs.back(), {kFrobeniusTol});
      for (const char *ax : {"associativity", "unit", "coassociativity", "counit", "frobenius", "symmetry", "special"})
        o.track(check_dev(rep, std::string("frobenius.") + ax + ".n=" + std::to_string(n)), kFrobeniusTol,
                std::string(name) + " " + ax + " n=" + std::to_string(n));
    }
    for (size_t k = 0; k + 1 < algs.size(); ++k) {
      const Report rep = sigma_isomorphism(algs[k], algs[k + 1], {kSigmaTol}).second;
      o.track(rep.max_deviation(), kSigmaTol, std::string(name) + " sigma " + std::to_string(algs[k].n));
    }
  }
  return o;
}

Outcome azumaya() {
  Outcome o;
  for (const auto &s : modular_builtins()) {
    const XiResult xi = xi_azumaya(s, {kXiTol});
    for (int i = 0; i < s.rank; ++i) o.track(std::abs(xi.xi[i] - (i == 0 ? 1.0 : 0.0)), kXiTol, s.name + " xi");
    const auto ctx = make_ambient(s);
    for (int n = kNMin; n <= kNMax; ++n) {
      const CenterDatum c = left_center_idempotent(build_frobenius_algebra(ctx, n), {kUnitProjectionTol});
      o.track(c.unit_projection_deviation, kUnitProjectionTol, s.name + " P_A n=" + std::to_string(n));
    }
  }
  const CategorySpec z2 = builtin_category("rep_z2_symmetric");
  const XiResult xi = xi_azumaya(z2, {kXiTol});
  o.require(std::abs(xi.xi[0] - 1.0) < kXiTol && std::abs(xi.xi[1] - 1.0) < kXiTol, "rep_z2_symmetric xi");
  const CenterDatum c = left_center_idempotent(build_frobenius_algebra(z2, 0), {kUnitProjectionTol});
  o.require(c.rank_per_component == std::vector<int>{1, 1}, "rep_z2_symmetric ranks");
  return o;
}

Outcome permutation_invariant() {
  Outcome o;
  for (const auto &s : modular_builtins()) {
    const Report rep = check_modular_invariance(transposition_Z(s), s, {kInvariantTol});
    o.track(rep.max_deviation(), kInvariantTol, s.name + " transposition");
  }
  const CategorySpec fib = builtin_category("fibonacci");
  std::vector<std::vector<int>> group;
  std::vector<int> g{0, 1, 2};
  do group.push_back(g);
  while (std::next_permutation(g.begin(), g.end()));
  for (const auto &a : group)
    for (const auto &b : group) {
      std::vector<int> ab(3);
      for (int t = 0; t < 3; ++t) ab[t] = a[b[t]];
      const bool ok = permutation_Z_nfold(fib, ab).Z == permutation_Z_nfold(fib, a).Z * permutation_Z_nfold(fib, b).Z;
      o.require(ok, "S3 product " + cycle_notation(a) + cycle_notation(b));
    }
  return o;
}

Outcome annulus() {
  Outcome o;
  for (const auto &s : builtins()) {
    Engine E(s);
    const int r = s.rank;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
          for (int l = 0; l < r; ++l) {
            const int a = annulus_coefficients(s, i, j, k, l);
            o.require(a == E.hom_dim({i, j, k}, l) && a == fusion_count(s, {i, j, k}, l), s.name + " annulus");
          }
  }
  return o;
}

std::string run_json(const char *target) {
  mtc_suite_options opts;
  if (mtc_suite_options_default(&opts) != MTC_OK) return {};
  opts.seed = 7;
  mtc_suite_result *res = nullptr;
  if (mtc_run_suite(target, &opts, &res) != MTC_OK) return {};
  char *json = nullptr;
  std::string out;
  if (mtc_suite_result_json(res, 0, &json) == MTC_OK) out = json;
  mtc_string_free(json);
  mtc_suite_result_free(res);
  return out;
}

Outcome determinism() {
  Outcome o;
  for (const char *target : {"fibonacci", "rep_z2_symmetric"}) {
    const std::string a = run_json(target), b = run_json(target);
    o.require(!a.empty() && a == b, std::string(target) + " JSON differs");
  }
  return o;
}

struct Criterion {
  int id;
  const char *title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "coherence (pentagon, hexagons, ribbon) on all built-ins", coherence},
      {2, "Verlinde round trip on modular built-ins", verlinde},
      {3, "SL(2,Z) relations and |gamma| = 1", sl2z},
      {4, "module pentagon, fibonacci/semion/ising, n in -2..2, both sides", module_pentagon},
      {5, "twist-built gamma is a module functor; twist round trip", twist_functor},
      {6, "transposition witness on fibonacci and ising", gamma_witness},
      {7, "Frobenius suite on fibonacci and semion; sigma intertwiners", frobenius},
      {8, "Azumaya certificate and the non-modular control", azumaya},
      {9, "transposition invariant and S3 homomorphism", permutation_invariant},
      {10, "annulus coefficients equal Hom counts", annulus},
      {11, "byte-identical JSON reports", determinism},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d: %s (max deviation %.3e)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.deviation,
                o.pass ? "" : " at ", o.pass ? "" : o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
