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

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "mtc/diagram.hpp"

namespace mtc {

// Direct sum of words; part p is the word parts[p].
struct SumObject {
  std::vector<Word> parts;

  int size() const { return static_cast<int>(parts.size()); }
  bool operator==(const SumObject &) const = default;
};

// Matrix of morphisms between direct sums, keyed by (target part, source
// part). Absent entries are zero.
struct SumMorphism {
  SumObject source, target;
  std::map<std::pair<int, int>, Morphism> parts;

  SumMorphism operator*(cplx s) const;
  double distance(const SumMorphism &o) const;
};

SumObject sum_unit();
// Parts flatten row-major: (p, q) -> p * y.size() + q.
SumObject sum_tensor(const SumObject &x, const SumObject &y);
SumMorphism sum_identity(Engine &E, const SumObject &x);
SumMorphism sum_compose(Engine &E, const SumMorphism &f, const SumMorphism &g);
SumMorphism sum_tensor(Engine &E, const SumMorphism &f, const SumMorphism &g);

// C and C ⊠ C engines plus the component labels (ī, i) of A.
struct AmbientContext {
  SpecPtr base, square;
  std::shared_ptr<Engine> base_engine, engine;
  std::vector<Label> components;

  Label pair_label(Label a, Label b) const { return a * base->rank + b; }
};

// NotPremodular without a full twist vector and braiding.
std::shared_ptr<AmbientContext> make_ambient(const CategorySpec &spec);

// f ⊠ g as a morphism of C ⊠ C. Both factors must have words of equal
// length; pad with unit strands where needed.
Morphism deligne_kron(AmbientContext &ctx, const Morphism &f, const Morphism &g);

struct FrobeniusAlgebraData {
  std::shared_ptr<AmbientContext> ctx;
  int n = 0;
  SumObject A;
  SumMorphism m, unit, coproduct, counit;

  double dim() const { return ctx->base->global_dim(); }
};

struct BuildOptions {
  // When set, every dual-basis pair f_α, f̄_α is replaced by a seeded
  // random unitary recombination before assembly.
  std::optional<std::uint64_t> basis_seed;
};

FrobeniusAlgebraData build_frobenius_algebra(std::shared_ptr<AmbientContext> ctx, int n,
                                             const BuildOptions &opts = {});
FrobeniusAlgebraData build_frobenius_algebra(const CategorySpec &spec, int n);

// Dual object A∨ and the (co)evaluations of A.
SumObject dual_object(const FrobeniusAlgebraData &alg);
SumMorphism coevaluation(const FrobeniusAlgebraData &alg, bool tilde);
SumMorphism evaluation(const FrobeniusAlgebraData &alg, bool tilde);

// The two maps A -> A∨ whose equality is the symmetry axiom.
std::pair<SumMorphism, SumMorphism> symmetry_maps(const FrobeniusAlgebraData &alg);
SumMorphism phi_map(const FrobeniusAlgebraData &alg);

// Associativity, unit, coassociativity, counit, Frobenius, symmetry,
// specialness and Φ. Check names carry the suffix ".n=<n>".
Report verify_frobenius_axioms(const FrobeniusAlgebraData &alg, const Tolerance &tol);
// Φ^(n) against Φ^(0) ∘ σ^{-2n}.
Report check_phi_relation(const FrobeniusAlgebraData &alg, const FrobeniusAlgebraData &alg0,
                          const Tolerance &tol);

// σ^k = ⊕ θ_ī^k ⊗ id_i.
SumMorphism sigma_power(const FrobeniusAlgebraData &alg, int k);
// σ^{to - from}, checked against product, unit, coproduct and counit.
std::pair<SumMorphism, Report> sigma_isomorphism(const FrobeniusAlgebraData &from,
                                                 const FrobeniusAlgebraData &to, const Tolerance &tol);

struct CenterDatum {
  SumMorphism P;
  std::vector<int> rank_per_component;
  bool is_trivial = false;
  double idempotency_deviation = 0.0;
  // |P - η∘ε / Dim|.
  double unit_projection_deviation = 0.0;
};

// P = m ∘ (m ⊗ id) ∘ (id ⊗ c_{A,A}) ∘ ((Δ∘η) ⊗ id).
CenterDatum left_center_idempotent(const FrobeniusAlgebraData &alg, const Tolerance &tol);

struct XiResult {
  std::vector<cplx> xi;
  bool is_azumaya = false;
};

// Scalar triple sum; XiNotZeroOne when some entry is neither 0 nor 1.
XiResult xi_azumaya(const CategorySpec &spec, const Tolerance &tol);

}  // namespace mtc
