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


#include <cstdlib>
#include <functional>

#include <doctest.h>
#include <json.hpp>

#include "helpers.hpp"
#include "mtc/category.hpp"
#include "mtc/diagram.hpp"

namespace {

using namespace mtc;
using namespace mtc::testing;
using json = nlohmann::json;

std::string error_message(const std::function<void()> &f, ErrorCode *code = nullptr) {
  try {
    f();
  } catch (const Error &e) {
    if (code) *code = e.code();
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("category_data") {
  TEST_CASE("fibonacci builtin data") {
    const CategorySpec s = builtin_category("fibonacci");
    CHECK(s.rank == 2);
    CHECK(s.dims[0] == doctest::Approx(1.0));
    CHECK(s.dims[1] == doctest::Approx(kPhi));
    CHECK(std::abs(s.theta[1] - expi(4 * kPi / 5)) < 1e-12);
    CHECK(s.multiplicity_free());
  }

  TEST_CASE("trivial builtin") {
    const CategorySpec s = builtin_category("trivial");
    CHECK(s.rank == 1);
    CHECK(s.fusion(0, 0, 0) == 1);
    CHECK(s.theta[0] == cplx(1.0));
    const Report rep = validate_category(s, {});
    CHECK(rep.ok());
    CHECK(rep.max_deviation() == 0.0);
  }

  TEST_CASE("every builtin validates to 1e-9 and is multiplicity free") {
    for (const auto &s : all_builtins()) {
      CAPTURE(s.name);
      const Report rep = validate_category(s, {});
      CHECK(rep.ok());
      CHECK(rep.max_deviation() < 1e-9);
      CHECK(s.multiplicity_free());
    }
  }

  TEST_CASE("unknown builtins are rejected with the available list") {
    ErrorCode code{};
    const std::string msg = error_message([] { builtin_category("lee_yang"); }, &code);
    CHECK(code == ErrorCode::UnknownBuiltin);
    CHECK(msg.find("fibonacci") != std::string::npos);
    CHECK(error_message([] { builtin_category("z_n(k)"); }, &code).find("z_3(1)") != std::string::npos);
    CHECK(code == ErrorCode::UnknownBuiltin);
    CHECK_THROWS_AS(builtin_category("z_0(1)"), Error);
  }

  TEST_CASE("perturbed R symbol breaks the hexagon by about the perturbation") {
    CategorySpec s = builtin_category("fibonacci");
    s.R.at(RKey{{1, 1, 1, 0, 0}}) *= expi(1e-3);
    const Report rep = validate_category(s, {});
    CHECK_FALSE(rep.ok());
    const Check *f = rep.find("hexagon.forward"), *r = rep.find("hexagon.reverse");
    REQUIRE(f);
    REQUIRE(r);
    const double dev = std::max(f->max_deviation, r->max_deviation);
    CHECK(dev > 3e-4);
    CHECK(dev < 3e-3);
    CHECK(rep.find("pentagon")->status == Status::Pass);
  }

  TEST_CASE("serialization round trip") {
    for (const auto &s : all_builtins()) {
      CAPTURE(s.name);
      CHECK(load_category_spec(serialize_category_spec(s)) == s);
    }
  }

  TEST_CASE("re-validating a parsed spec gives an identical report") {
    for (const auto &s : all_builtins()) {
      CAPTURE(s.name);
      const CategorySpec back = load_category_spec(serialize_category_spec(s));
      CHECK(without_timings(validate_category(back, {})) == without_timings(validate_category(s, {})));
    }
  }

  TEST_CASE("loader rejects a broken unit axiom and names it") {
    json doc = json::parse(serialize_category_spec(builtin_category("fibonacci")));
    for (auto &e : doc["fusion"])
      if (e[0] == 0 && e[1] == 1 && e[2] == 1) e[3] = 2;
    ErrorCode code{};
    const std::string msg = error_message([&] { load_category_spec(doc.dump()); }, &code);
    CHECK(code == ErrorCode::InvalidData);
    CHECK(msg.find("unit axiom") != std::string::npos);
  }

  TEST_CASE("loader requires braided data") {
    json doc = json::parse(serialize_category_spec(builtin_category("semion")));
    doc.erase("R");
    ErrorCode code{};
    const std::string msg = error_message([&] { load_category_spec(doc.dump()); }, &code);
    CHECK(code == ErrorCode::MissingSection);
    CHECK(msg.find("braided data required") != std::string::npos);
  }

  TEST_CASE("loader rejects malformed input") {
    CHECK_THROWS_AS(load_category_spec("{ not json"), Error);
    json doc = json::parse(serialize_category_spec(builtin_category("z_3(1)")));
    doc["dual"] = {0, 1, 1};
    ErrorCode code{};
    error_message([&] { load_category_spec(doc.dump()); }, &code);
    CHECK(code == ErrorCode::InvalidData);
    doc = json::parse(serialize_category_spec(builtin_category("semion")));
    doc["theta"][1] = {"x", 0.0};
    CHECK_THROWS_AS(load_category_spec(doc.dump()), Error);
  }

  TEST_CASE("dims are derived from F when absent") {
    const CategorySpec fib = builtin_category("fibonacci");
    json doc = json::parse(serialize_category_spec(fib));
    doc.erase("dims");
    const CategorySpec back = load_category_spec(doc.dump());
    CHECK(back.dims[1] == doctest::Approx(kPhi).epsilon(1e-12));
  }

  TEST_CASE("labels parse by name, greek alias or index") {
    const CategorySpec s = builtin_category("ising");
    CHECK(parse_label(s, "sigma") == 1);
    CHECK(parse_label(s, "σ") == 1);
    CHECK(parse_label(s, "2") == 2);
    CHECK(label_name(s, 2) == "psi");
    CHECK_THROWS_AS(parse_label(s, "3"), Error);
    CHECK_THROWS_AS(parse_label(s, "tau"), Error);
  }

  TEST_CASE("tolerance from the environment") {
    ::setenv("MTC_TOL", "1e-7", 1);
    CHECK(Tolerance::from_env().atol == 1e-7);
    ::setenv("MTC_TOL", "abc", 1);
    CHECK_THROWS_AS(Tolerance::from_env(), Error);
    ::unsetenv("MTC_TOL");
    CHECK(Tolerance::from_env().atol == 1e-9);
    CHECK(Tolerance{}.valid());
    CHECK_FALSE((Tolerance{1e-5, 1e-6}).valid());
  }

  TEST_CASE("global dimension of fibonacci") {
    const CategorySpec s = builtin_category("fibonacci");
    CHECK(s.global_dim() == doctest::Approx(3.6180339887).epsilon(1e-10));
    CHECK(modular_datum(s).global_dim == doctest::Approx(1 + kPhi * kPhi));
  }

  TEST_CASE("modular data of trivial and rep_z2_symmetric") {
    const ModularDatum t = modular_datum(builtin_category("trivial"));
    CHECK(t.is_modular);
    CHECK(std::abs(t.S(0, 0) - 1.0) < 1e-15);

    const ModularDatum z = modular_datum(builtin_category("rep_z2_symmetric"));
    CHECK_FALSE(z.is_modular);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(std::abs(z.S(i, j) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK_THROWS_AS(verlinde_fusion(z), Error);
    CHECK_THROWS_AS(modular_group_relations(z), Error);
  }

  TEST_CASE("S equals the normalized trace of the double braiding") {
    // Oracle: close the monodromy of U_i and U_j with the diagram engine.
    for (const auto &s : all_builtins()) {
      CAPTURE(s.name);
      Engine E(s);
      const ModularDatum md = modular_datum(s);
      const double s00 = 1.0 / std::sqrt(s.global_dim());
      for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j) {
          const cplx tr = E.trace(E.double_braiding_power({i, j}, 1, 1));
          CHECK(std::abs(md.S(i, j) - s00 * tr) < 1e-12);
        }
    }
  }

  TEST_CASE("S and T structure") {
    for (const auto &s : all_builtins()) {
      CAPTURE(s.name);
      const ModularDatum md = modular_datum(s);
      CHECK((md.S - md.S.transpose()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(std::abs(md.S(0, 0) - 1.0 / std::sqrt(md.global_dim)) < 1e-12);
      CHECK(md.S(0, 0).real() > 0);
      for (int i = 0; i < s.rank; ++i) {
        CHECK(md.T(i, i) == s.theta[i]);
        CHECK(md.C(i, s.dual[i]) == 1.0);
      }
    }
  }

  TEST_CASE("modular builtins: unitary S, S^2 proportional to C") {
    for (const auto &s : modular_builtins()) {
      CAPTURE(s.name);
      const ModularDatum md = modular_datum(s);
      const Eigen::Index r = md.S.rows();
      CHECK((md.S * md.S.adjoint() - Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff() < 1e-9);
      const Eigen::MatrixXcd S2 = md.S * md.S;
      const cplx scale = S2(0, 0);
      CHECK((S2 - scale * md.C.cast<cplx>()).cwiseAbs().maxCoeff() < 1e-9);
    }
  }

  TEST_CASE("Verlinde formula recovers the stored fusion rules") {
    for (const auto &s : modular_builtins()) {
      CAPTURE(s.name);
      const VerlindeResult v = verlinde_fusion(modular_datum(s));
      CHECK(v.N == s.N);
      CHECK(v.max_snap_distance < 1e-9);
    }
    const VerlindeResult semion = verlinde_fusion(modular_datum(builtin_category("semion")));
    CHECK(semion.N[(1 * 2 + 1) * 2 + 0] == 1);
    CHECK(semion.N[(1 * 2 + 1) * 2 + 1] == 0);
    const VerlindeResult trivial = verlinde_fusion(modular_datum(builtin_category("trivial")));
    CHECK(trivial.N == std::vector<int>{1});
  }

  TEST_CASE("Verlinde snapping reports far-from-integer entries") {
    ModularDatum md = modular_datum(builtin_category("fibonacci"));
    md.S(1, 1) *= 1.01;
    ErrorCode code{};
    error_message([&] { verlinde_fusion(md); }, &code);
    CHECK(code == ErrorCode::SnapFailure);
  }

  TEST_CASE("modular group relations") {
    const ModularGroupResult t = modular_group_relations(modular_datum(builtin_category("trivial")));
    CHECK(std::abs(t.gamma - 1.0) < 1e-15);
    CHECK(t.report.max_deviation() == 0.0);
    for (const auto &s : modular_builtins()) {
      CAPTURE(s.name);
      const ModularGroupResult g = modular_group_relations(modular_datum(s));
      CHECK(g.report.ok());
      CHECK(g.report.max_deviation() < 1e-9);
      CHECK(std::abs(std::abs(g.gamma) - 1.0) < 1e-9);
    }
  }

  TEST_CASE("fusion ring properties hold exactly") {
    for (const auto &s : all_builtins()) {
      CAPTURE(s.name);
      const int r = s.rank;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          CHECK(s.fusion(0, j, i) == (i == j));
          CHECK(s.fusion(i, j, 0) == (j == s.dual[i]));
          double sum = 0;
          for (int k = 0; k < r; ++k) sum += s.fusion(i, j, k) * s.dims[k];
          CHECK(std::abs(s.dims[i] * s.dims[j] - sum) < 1e-9);
          for (int k = 0; k < r; ++k)
            for (int l = 0; l < r; ++l) {
              int lhs = 0, rhs = 0;
              for (int m = 0; m < r; ++m) {
                lhs += s.fusion(i, j, m) * s.fusion(m, k, l);
                rhs += s.fusion(j, k, m) * s.fusion(i, m, l);
              }
              CHECK(lhs == rhs);
            }
        }
    }
  }

  TEST_CASE("error code names") {
    CHECK(std::string(error_code_name(ErrorCode::NotModular)) == "NotModular");
    CHECK(std::string(error_code_name(ErrorCode::Parse)) == "ParseError");
  }
}
