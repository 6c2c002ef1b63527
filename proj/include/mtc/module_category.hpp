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
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mtc/diagram.hpp"

namespace mtc {

// U × V in C ⊠ C, each factor given as a word of C. The unit strand is
// represented by the empty word.
struct PairObject {
  Word u, v;
};

using LabelPair = std::pair<Label, Label>;

Word strand(Label l);
PairObject pair_object(Label u, Label v);
PairObject tensor_pairs(const PairObject &x, const PairObject &y);

enum class Side { Right, Left };
enum class InductionSign { Plus, Minus };

// Multiplicities of M ⊗ U ⊗ V: k ↦ Σ_m N_MU^m N_mV^k.
std::vector<int> module_action(const CategorySpec &spec, Label M, Label U, Label V);

// ψ^(n)_{M,X,Y}: M U1 U2 V1 V2 tail -> M U1 V1 U2 V2 tail.
Morphism right_associator(Engine &E, int n, const Word &M, const PairObject &X, const PairObject &Y,
                          const Word &tail = {});
// ψ̂^(n)_{X,Y,M}: head U1 U2 V1 V2 M -> head U1 V1 U2 V2 M.
Morphism left_associator(Engine &E, int n, const Word &head, const PairObject &X, const PairObject &Y,
                         const Word &M);
Morphism build_associator(Engine &E, int n, Side side, Label M, LabelPair X, LabelPair Y);

double pentagon_deviation(Engine &E, int n, Side side, Label M, LabelPair X, LabelPair Y, LabelPair Z);

enum class Sampling { Auto, AllSimples, Random };

struct PentagonOptions {
  Sampling sampling = Sampling::Auto;
  std::uint64_t seed = 0;
  int draws = 64;
};

// Pentagon plus unit triangles for one (n, side).
Report check_module_pentagon(Engine &E, int n, Side side, const Tolerance &tol,
                             const PentagonOptions &opts = {});

// γ_{M,U×V} = [θ_{MU}^{-1} ∘ (θ_M ⊗ id_U)] ⊗ id_V on M U V tail.
Morphism twist_gamma(Engine &E, const Word &M, const PairObject &X, const Word &tail = {});

struct ModuleFunctorData {
  int source_n = 0;
  int target_n = 1;
  std::map<std::array<Label, 3>, Morphism> gamma;  // keyed by simple (M, U, V)
};

// γ: C^(n) -> C^(n+1), verified on all simple (M, X, Y).
std::pair<ModuleFunctorData, Report> gamma_twist_functor(Engine &E, int n, const Tolerance &tol);
// θ_U = γ_{1,1×U} ∘ γ_{1,U×1}^{-1}; WrongLevels unless the data goes 0 -> 1.
std::vector<cplx> extract_twist(const ModuleFunctorData &data);

// γ^{X,±}_{M,Y}: M U' V' U V tail -> M U V U' V' tail, with Y = U'×V'.
Morphism induction_gamma(Engine &E, int n, InductionSign sign, const Word &M, const PairObject &X,
                         const PairObject &Y, const Word &tail = {});

struct InductionStructure {
  InductionSign sign = InductionSign::Plus;
  LabelPair X{0, 0};
  int n = 0;
  std::map<std::array<Label, 3>, Morphism> gamma;  // keyed by simple (M, U', V')
  Report report;
};

InductionStructure alpha_induction(Engine &E, InductionSign sign, LabelPair X, int n, const Tolerance &tol);

// Γ_M = [D_{M,V} ⊗ id_U] ∘ (id_M ⊗ c_{U,V}): M U V tail -> M V U tail.
Morphism transposition_gamma(Engine &E, const Word &M, const Word &U, const Word &V, const Word &tail = {});
Report transposition_nat_iso(Engine &E, Label U, Label V, const Tolerance &tol);

// Closed forms of ψ^(0), ψ^(1) and invertibility (unitarity for unitary data)
// of ψ^(n) for n in [n_min, n_max].
Report check_associator_properties(Engine &E, int n_min, int n_max, const Tolerance &tol);
// ψ^(n) built directly vs ψ^(0) conjugated through n γ-steps.
Report check_gamma_chain(Engine &E, int n_max, const Tolerance &tol);
// (D_{MU1,U2} ⊗ id) ∘ D_{MU1U2,U3} = (id_{MU1} ⊗ D_{U2,U3}) ∘ D_{MU1,U2U3}.
Report check_double_braiding_identity(Engine &E, const Tolerance &tol);

// Mixed bimodule constraint: right γ = D_{M,U}^{-1} ⊗ id_V on M U V,
// left γ̂ = id_U ⊗ D_{V,M} on U V M.
Morphism bimodule_mixed_gamma(Engine &E, Side side, const Word &M, Label U, Label V);

// True when every F block and R matrix is unitary within tol.
bool data_is_unitary(const Engine &E, double tol);

}  // namespace mtc
