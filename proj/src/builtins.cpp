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
#include <functional>
#include <numbers>
#include <optional>
#include <regex>

#include "mtc/category.hpp"

namespace mtc {
namespace {

constexpr double kPi = std::numbers::pi;

cplx phase(double turns) { return std::polar(1.0, 2.0 * kPi * turns); }

CategorySpec skeleton(const std::string &name, int rank, std::vector<std::string> labels) {
  CategorySpec s;
  s.name = name;
  s.rank = rank;
  s.labels = std::move(labels);
  s.dual.resize(rank);
  s.N.assign(static_cast<size_t>(rank) * rank * rank, 0);
  s.dims.assign(rank, 1.0);
  s.theta.assign(rank, 1.0);
  return s;
}

// Multiplicity-free F table: every admissible entry defaults to 1 and
// `value` may override it.
using FOverride = std::function<std::optional<cplx>(int, int, int, int, int, int)>;

void fill_f(CategorySpec &s, const FOverride &value) {
  const int r = s.rank;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d)
          for (int e = 0; e < r; ++e) {
            if (!s.fusion(a, b, e) || !s.fusion(e, c, d)) continue;
            for (int f = 0; f < r; ++f) {
              if (!s.fusion(b, c, f) || !s.fusion(a, f, d)) continue;
              cplx v = value(a, b, c, d, e, f).value_or(cplx(1.0));
              s.F[FKey{{a, b, c, d, e, 0, 0, f, 0, 0}}] = v;
            }
          }
}

using ROverride = std::function<cplx(int, int, int)>;

void fill_r(CategorySpec &s, const ROverride &value) {
  const int r = s.rank;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (s.fusion(a, b, c)) s.R[RKey{{a, b, c, 0, 0}}] = value(a, b, c);
}

CategorySpec make_trivial() {
  CategorySpec s = skeleton("trivial", 1, {"id"});
  s.dual = {0};
  s.fusion_ref(0, 0, 0) = 1;
  fill_f(s, [](int, int, int, int, int, int) { return std::optional<cplx>(); });
  fill_r(s, [](int, int, int) { return cplx(1.0); });
  return s;
}

// Group-like rank-n category on Z_n with trivial F.
CategorySpec make_cyclic(const std::string &name, int n, std::vector<std::string> labels,
                         const std::function<cplx(int, int)> &r_ab,
                         const std::function<cplx(int)> &theta) {
  CategorySpec s = skeleton(name, n, std::move(labels));
  for (int a = 0; a < n; ++a) {
    s.dual[a] = (n - a) % n;
    s.theta[a] = theta(a);
    for (int b = 0; b < n; ++b) s.fusion_ref(a, b, (a + b) % n) = 1;
  }
  fill_f(s, [](int, int, int, int, int, int) { return std::optional<cplx>(); });
  fill_r(s, [&](int a, int b, int) { return r_ab(a, b); });
  return s;
}

CategorySpec make_semion() {
  CategorySpec s = skeleton("semion", 2, {"id", "s"});
  s.dual = {0, 1};
  s.fusion_ref(0, 0, 0) = s.fusion_ref(0, 1, 1) = s.fusion_ref(1, 0, 1) = s.fusion_ref(1, 1, 0) = 1;
  s.theta = {1.0, cplx(0.0, 1.0)};
  fill_f(s, [](int a, int b, int c, int d, int, int) -> std::optional<cplx> {
    if (a == 1 && b == 1 && c == 1 && d == 1) return cplx(-1.0);
    return {};
  });
  fill_r(s, [](int a, int b, int) { return (a == 1 && b == 1) ? cplx(0.0, 1.0) : cplx(1.0); });
  return s;
}

CategorySpec make_fibonacci() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CategorySpec s = skeleton("fibonacci", 2, {"id", "tau"});
  s.dual = {0, 1};
  s.fusion_ref(0, 0, 0) = s.fusion_ref(0, 1, 1) = s.fusion_ref(1, 0, 1) = 1;
  s.fusion_ref(1, 1, 0) = s.fusion_ref(1, 1, 1) = 1;
  s.dims = {1.0, phi};
  s.theta = {1.0, phase(2.0 / 5.0)};
  fill_f(s, [phi](int a, int b, int c, int d, int e, int f) -> std::optional<cplx> {
    if (a != 1 || b != 1 || c != 1 || d != 1) return {};
    if (e == 0 && f == 0) return cplx(1.0 / phi);
    if (e == 1 && f == 1) return cplx(-1.0 / phi);
    return cplx(1.0 / std::sqrt(phi));
  });
  fill_r(s, [](int a, int b, int c) {
    if (a == 1 && b == 1) return c == 0 ? phase(-2.0 / 5.0) : phase(3.0 / 10.0);
    return cplx(1.0);
  });
  return s;
}

CategorySpec make_ising() {
  // 0 = id, 1 = sigma, 2 = psi
  CategorySpec s = skeleton("ising", 3, {"id", "sigma", "psi"});
  s.dual = {0, 1, 2};
  auto set = [&s](int a, int b, int c) { s.fusion_ref(a, b, c) = 1; };
  for (int a = 0; a < 3; ++a) {
    set(0, a, a);
    if (a) set(a, 0, a);
  }
  set(1, 1, 0);
  set(1, 1, 2);
  set(1, 2, 1);
  set(2, 1, 1);
  set(2, 2, 0);
  s.dims = {1.0, std::sqrt(2.0), 1.0};
  s.theta = {1.0, phase(1.0 / 16.0), -1.0};
  fill_f(s, [](int a, int b, int c, int d, int e, int f) -> std::optional<cplx> {
    if (a == 1 && b == 1 && c == 1 && d == 1) {
      const double v = 1.0 / std::sqrt(2.0);
      return cplx((e == 2 && f == 2) ? -v : v);
    }
    if (a == 1 && b == 2 && c == 1 && d == 2) return cplx(-1.0);
    if (a == 2 && b == 1 && c == 2 && d == 1) return cplx(-1.0);
    return {};
  });
  fill_r(s, [](int a, int b, int c) {
    if (a == 1 && b == 1) return c == 0 ? phase(-1.0 / 16.0) : phase(3.0 / 16.0);
    if ((a == 1 && b == 2) || (a == 2 && b == 1)) return cplx(0.0, -1.0);
    if (a == 2 && b == 2) return cplx(-1.0);
    return cplx(1.0);
  });
  return s;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"trivial", "semion", "fibonacci", "ising", "z_n(k)", "rep_z2_symmetric"};
}

CategorySpec builtin_category(const std::string &name) {
  if (name == "trivial") return make_trivial();
  if (name == "semion") return make_semion();
  if (name == "fibonacci") return make_fibonacci();
  if (name == "ising") return make_ising();
  if (name == "rep_z2_symmetric") {
    return make_cyclic(
        name, 2, {"id", "sign"}, [](int, int) { return cplx(1.0); },
        [](int) { return cplx(1.0); });
  }
  if (name == "z_n(k)") {
    throw Error(ErrorCode::UnknownBuiltin, "z_n(k) names a family; pick a member such as z_3(1)");
  }
  static const std::regex zn(R"(z_(\d+)\((-?\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, zn)) {
    const int n = std::stoi(m[1]);
    const int k = std::stoi(m[2]);
    if (n < 1 || n > 64) {
      throw Error(ErrorCode::UnknownBuiltin, "z_n(k) requires 1 <= n <= 64, got n = " + m[1].str());
    }
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
    return make_cyclic(
        name, n, labels,
        [n, k](int a, int b) { return phase(static_cast<double>((k * a * b) % n) / n); },
        [n, k](int a) { return phase(static_cast<double>((k * a * a) % n) / n); });
  }
  std::string list;
  for (const auto &b : builtin_names()) list += (list.empty() ? "" : ", ") + b;
  throw Error(ErrorCode::UnknownBuiltin, "unknown built-in '" + name + "'; available: " + list);
}

}  // namespace mtc
