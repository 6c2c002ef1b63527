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

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "mtc/category.hpp"
#include "mtc/suite.hpp"

namespace mtc::testing {

inline const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
inline const double kPi = std::acos(-1.0);

inline cplx expi(double x) { return std::polar(1.0, x); }

inline std::vector<CategorySpec> all_builtins() {
  std::vector<CategorySpec> out;
  for (const auto &n : representative_builtins()) out.push_back(builtin_category(n));
  return out;
}

inline std::vector<CategorySpec> modular_builtins() {
  std::vector<CategorySpec> out;
  for (auto &s : all_builtins())
    if (modular_datum(s).is_modular) out.push_back(std::move(s));
  return out;
}

// Random word of simple labels, length in [1, max_len].
inline std::vector<Label> random_word(std::mt19937_64 &rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len), lab(0, rank - 1);
  std::vector<Label> w(len(rng));
  for (auto &x : w) x = lab(rng);
  return w;
}

inline Report without_timings(Report r) {
  for (auto &c : r.checks) c.wall_time = 0.0;
  return r;
}

}  // namespace mtc::testing
