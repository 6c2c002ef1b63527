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
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mtc/category.hpp"

namespace mtc {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string &field, const std::string &what) {
  throw Error(ErrorCode::InvalidData, "field '" + field + "': " + what);
}

const json &require(const json &doc, const char *key) {
  if (!doc.contains(key)) {
    if (std::string(key) == "R") {
      throw Error(ErrorCode::MissingSection, "braided data required: missing section 'R'");
    }
    throw Error(ErrorCode::MissingSection, std::string("missing required section '") + key + "'");
  }
  return doc.at(key);
}

int as_int(const json &v, const std::string &field) {
  if (!v.is_number_integer()) bad(field, "expected an integer");
  return v.get<int>();
}

double as_real(const json &v, const std::string &field) {
  if (!v.is_number()) bad(field, "expected a number");
  return v.get<double>();
}

cplx as_complex(const json &v, const std::string &field) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    bad(field, "malformed complex literal, expected [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

const json &as_array(const json &v, const std::string &field) {
  if (!v.is_array()) bad(field, "expected an array");
  return v;
}

std::string idx(const std::string &base, size_t i) { return base + "[" + std::to_string(i) + "]"; }

void check_label(int v, int rank, const std::string &field) {
  if (v < 0 || v >= rank) bad(field, "label " + std::to_string(v) + " out of range 0.." + std::to_string(rank - 1));
}

}  // namespace

CategorySpec load_category_spec(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorCode::Parse, std::string("category file: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "category file: top level must be an object");

  CategorySpec s;
  const json &name = require(doc, "name");
  if (!name.is_string()) bad("name", "expected a string");
  s.name = name.get<std::string>();
  s.rank = as_int(require(doc, "rank"), "rank");
  if (s.rank < 1) bad("rank", "must be positive");
  const int r = s.rank;

  const json &dual = as_array(require(doc, "dual"), "dual");
  if (static_cast<int>(dual.size()) != r) bad("dual", "expected " + std::to_string(r) + " entries");
  for (size_t i = 0; i < dual.size(); ++i) {
    const int v = as_int(dual[i], idx("dual", i));
    check_label(v, r, idx("dual", i));
    s.dual.push_back(v);
  }

  s.N.assign(static_cast<size_t>(r) * r * r, 0);
  const json &fusion = as_array(require(doc, "fusion"), "fusion");
  for (size_t n = 0; n < fusion.size(); ++n) {
    const std::string f = idx("fusion", n);
    const json &e = as_array(fusion[n], f);
    if (e.size() != 4) bad(f, "expected [i, j, k, multiplicity]");
    int v[4];
    for (int t = 0; t < 4; ++t) v[t] = as_int(e[t], idx(f, t));
    for (int t = 0; t < 3; ++t) check_label(v[t], r, idx(f, t));
    if (v[3] < 0) bad(idx(f, 3), "multiplicity must be non-negative");
    s.fusion_ref(v[0], v[1], v[2]) = v[3];
  }

  const json &theta = as_array(require(doc, "theta"), "theta");
  if (static_cast<int>(theta.size()) != r) bad("theta", "expected " + std::to_string(r) + " entries");
  for (size_t i = 0; i < theta.size(); ++i) s.theta.push_back(as_complex(theta[i], idx("theta", i)));

  const json &F = as_array(require(doc, "F"), "F");
  for (size_t n = 0; n < F.size(); ++n) {
    const std::string f = idx("F", n);
    const json &e = as_array(F[n], f);
    if (e.size() != 12) bad(f, "expected [i, j, k, l, m, alpha, beta, n, gamma, delta, re, im]");
    FKey key;
    for (int t = 0; t < 10; ++t) key.v[t] = as_int(e[t], idx(f, t));
    for (int t : {0, 1, 2, 3, 4, 7}) check_label(key.v[t], r, idx(f, t));
    for (int t : {5, 6, 8, 9}) {
      if (key.v[t] < 1) bad(idx(f, t), "multiplicity indices are 1-based");
      --key.v[t];
    }
    const auto &v = key.v;
    if (v[5] >= s.fusion(v[0], v[1], v[4]) || v[6] >= s.fusion(v[4], v[2], v[3]) ||
        v[8] >= s.fusion(v[1], v[2], v[7]) || v[9] >= s.fusion(v[0], v[7], v[3])) {
      bad(f, "vertex not allowed by the fusion rules");
    }
    s.F[key] = {as_real(e[10], idx(f, 10)), as_real(e[11], idx(f, 11))};
  }

  const json &R = as_array(require(doc, "R"), "R");
  for (size_t n = 0; n < R.size(); ++n) {
    const std::string f = idx("R", n);
    const json &e = as_array(R[n], f);
    if (e.size() != 7) bad(f, "expected [i, j, k, alpha, beta, re, im]");
    RKey key;
    for (int t = 0; t < 5; ++t) key.v[t] = as_int(e[t], idx(f, t));
    for (int t = 0; t < 3; ++t) check_label(key.v[t], r, idx(f, t));
    for (int t : {3, 4}) {
      if (key.v[t] < 1) bad(idx(f, t), "multiplicity indices are 1-based");
      --key.v[t];
    }
    const int nm = s.fusion(key.v[0], key.v[1], key.v[2]);
    if (key.v[3] >= nm || key.v[4] >= nm) bad(f, "vertex not allowed by the fusion rules");
    s.R[key] = {as_real(e[5], idx(f, 5)), as_real(e[6], idx(f, 6))};
  }

  if (doc.contains("labels")) {
    const json &labels = as_array(doc["labels"], "labels");
    if (static_cast<int>(labels.size()) != r) bad("labels", "expected " + std::to_string(r) + " entries");
    for (size_t i = 0; i < labels.size(); ++i) {
      if (!labels[i].is_string()) bad(idx("labels", i), "expected a string");
      s.labels.push_back(labels[i].get<std::string>());
    }
  }
  if (doc.contains("product_of")) {
    const json &p = as_array(doc["product_of"], "product_of");
    for (size_t i = 0; i < p.size(); ++i) {
      if (!p[i].is_string()) bad(idx("product_of", i), "expected a string");
      s.product_of.push_back(p[i].get<std::string>());
    }
  }

  // Structural axioms that make the data usable at all.
  if (s.dual[0] != 0) bad("dual", "the unit must be self-dual");
  for (int i = 0; i < r; ++i) {
    if (s.dual[s.dual[i]] != i) {
      throw Error(ErrorCode::InvalidData, "dual table is not an involution: dual(dual(" +
                                              std::to_string(i) + ")) = " +
                                              std::to_string(s.dual[s.dual[i]]));
    }
  }
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) {
      const int want = (j == k) ? 1 : 0;
      for (auto [a, b] : {std::pair{0, j}, std::pair{j, 0}}) {
        if (s.fusion(a, b, k) != want) {
          throw Error(ErrorCode::InvalidData,
                      "unit axiom violated: N_{" + std::to_string(a) + "," + std::to_string(b) +
                          "}^{" + std::to_string(k) + "} = " + std::to_string(s.fusion(a, b, k)) +
                          ", expected " + std::to_string(want));
        }
      }
    }
  }

  if (doc.contains("dims")) {
    const json &dims = as_array(doc["dims"], "dims");
    if (static_cast<int>(dims.size()) != r) bad("dims", "expected " + std::to_string(r) + " entries");
    for (size_t i = 0; i < dims.size(); ++i) s.dims.push_back(as_real(dims[i], idx("dims", i)));
  } else {
    for (int i = 0; i < r; ++i) {
      auto it = s.F.find(FKey{{i, s.dual[i], i, i, 0, 0, 0, 0, 0, 0}});
      if (it == s.F.end() || std::abs(it->second) == 0.0) {
        bad("dims", "absent and cannot be derived: F^{i i* i}_i[0,0] is zero for label " + std::to_string(i));
      }
      s.dims.push_back(1.0 / std::abs(it->second));
    }
  }
  return s;
}

CategorySpec load_category_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open category file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_category_spec(ss.str());
}

std::string serialize_category_spec(const CategorySpec &s) {
  ojson doc;
  doc["name"] = s.name;
  doc["rank"] = s.rank;
  if (!s.labels.empty()) doc["labels"] = s.labels;
  if (!s.product_of.empty()) doc["product_of"] = s.product_of;
  doc["dual"] = s.dual;
  ojson fusion = ojson::array();
  for (int i = 0; i < s.rank; ++i)
    for (int j = 0; j < s.rank; ++j)
      for (int k = 0; k < s.rank; ++k)
        if (s.fusion(i, j, k)) fusion.push_back({i, j, k, s.fusion(i, j, k)});
  doc["fusion"] = fusion;
  ojson theta = ojson::array();
  for (const auto &t : s.theta) theta.push_back({t.real(), t.imag()});
  doc["theta"] = theta;
  doc["dims"] = s.dims;
  ojson F = ojson::array();
  for (const auto &[k, v] : s.F) {
    const auto &a = k.v;
    F.push_back({a[0], a[1], a[2], a[3], a[4], a[5] + 1, a[6] + 1, a[7], a[8] + 1, a[9] + 1,
                 v.real(), v.imag()});
  }
  doc["F"] = F;
  ojson R = ojson::array();
  for (const auto &[k, v] : s.R) {
    const auto &a = k.v;
    R.push_back({a[0], a[1], a[2], a[3] + 1, a[4] + 1, v.real(), v.imag()});
  }
  doc["R"] = R;
  return doc.dump(1) + "\n";
}

}  // namespace mtc
