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

#include <array>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mtc/category.hpp"

namespace mtc {

constexpr int kMaxInvariantDim = 1024;

// Z indexed by flattened N-tuples of simple labels (row-major, first
// factor most significant).
struct ModularInvariant {
  int arity = 2;
  int base_rank = 1;
  Eigen::MatrixXi Z;
  // Image list of the permutation, 0-based: factor t goes to g[t].
  std::vector<int> permutation;
  // Set when the input category is not modular.
  bool non_modular_input = false;

  std::string cycles() const;
  std::vector<std::array<int, 3>> triples() const;
};

// Parses "(1 2)(3 4)" or "()" into a 0-based image list of length N.
std::vector<int> parse_cycles(const std::string &text, int N);
std::string cycle_notation(const std::vector<int> &g);

ModularInvariant transposition_Z(const CategorySpec &spec);
// Z_{I,J} = 1 iff J_t = I_{g(t)}, assembled as a product of adjacent
// transpositions. RankOverflow when rank^N exceeds max_dim.
ModularInvariant permutation_Z_nfold(const CategorySpec &spec, const std::vector<int> &g,
                                     int max_dim = kMaxInvariantDim);
// Direct construction from the definition, for cross-checks.
Eigen::MatrixXi permutation_matrix(int rank, const std::vector<int> &g);
// Bubble-sort factorization: g = s_{t_m} ∘ ... ∘ s_{t_1}, returned as t_1..t_m.
std::vector<int> adjacent_transpositions(const std::vector<int> &g);

// S^{⊗N}, T^{⊗N} and Z_{vac,vac} = 1. NotModular on degenerate input.
Report check_modular_invariance(const ModularInvariant &Z, const CategorySpec &spec, const Tolerance &tol);

// Σ_m N_ij^m N_mk^l.
int annulus_coefficients(const CategorySpec &spec, Label i, Label j, Label k, Label l);
// dim Hom(U_{w0} ⊗ ... ⊗ U_{wn}, U_l) by iterated fusion.
int fusion_count(const CategorySpec &spec, const std::vector<Label> &word, Label l);

// k ↦ N_ij^k.
std::vector<int> induced_module_decomposition(const CategorySpec &spec, Label i, Label j);

// Every m-tuple with its multiplicity in End(1). RankOverflow when rank^m
// exceeds max_dim.
std::map<std::vector<Label>, int> multifold_end_multiplicities(const CategorySpec &spec, int m,
                                                               int max_dim = kMaxInvariantDim);

}  // namespace mtc
