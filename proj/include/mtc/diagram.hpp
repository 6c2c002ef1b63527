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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mtc/category.hpp"

namespace mtc {

using Word = std::vector<Label>;

constexpr int kMaxWordLength = 8;

// Left-nested tree ((w0 w1)_{e1} w2)_{e2} ... with vertex multiplicities.
struct FusionTree {
  Word word;
  std::vector<Label> internal_labels;  // e1 .. e_{n-2}
  std::vector<int> multiplicity_indices;  // 0-based, one per vertex
  Label root = 0;

  bool operator==(const FusionTree &) const = default;
};

// Linear map between words, stored per root charge c as a matrix from
// source trees (columns) to target trees (rows).
class Morphism {
 public:
  Word source, target;
  std::map<Label, Eigen::MatrixXcd> blocks;

  Morphism operator*(cplx s) const;
  Morphism operator+(const Morphism &o) const;
  Morphism operator-(const Morphism &o) const;

  // Blockwise max-norm distance; ShapeMismatch if the words differ.
  double distance(const Morphism &o) const;
  double max_abs() const;
  // Per-block nested arrays, annotated with the root charge.
  std::string dump() const;
};

enum class Crossing { Over, Under };
enum class ComposeMode { Sequential, Parallel };
enum class DualityOp { Cup, CupTilde, Cap, CapTilde };

class Engine {
 public:
  explicit Engine(SpecPtr spec);
  explicit Engine(const CategorySpec &spec);
  ~Engine();
  Engine(const Engine &) = delete;
  Engine &operator=(const Engine &) = delete;

  const CategorySpec &spec() const { return *spec_; }
  const SymbolTables &tables() const { return *tables_; }

  // Lexicographic on internal labels, then multiplicity indices.
  std::vector<FusionTree> hom_basis(const Word &w, Label root);
  int hom_dim(const Word &w, Label root);

  Morphism identity(const Word &w);
  Morphism zero(const Word &source, const Word &target);
  // Sequential: f ∘ g (needs f.source == g.target). Parallel: f ⊗ g.
  Morphism compose_and_tensor(const Morphism &f, const Morphism &g, ComposeMode mode);
  Morphism compose(const Morphism &f, const Morphism &g);
  Morphism tensor(const Morphism &f, const Morphism &g);
  // id_{left} ⊗ f ⊗ id_{right}
  Morphism embed(const Word &left, const Morphism &f, const Word &right);
  Morphism inverse(const Morphism &f);
  Morphism power(const Morphism &f, int n);

  // c on strands (position, position+1), 1-based. Over gives c_{x,y},
  // Under gives c^{-1}_{y,x}; both map (.., x, y, ..) to (.., y, x, ..).
  Morphism braid_generator(const Word &w, int position, Crossing dir);
  // c_{X,Y} with X = w[start, start+lx) and Y the next ly strands. With
  // inverse set, w holds Y then X and the result is c_{X,Y}^{-1}.
  Morphism braid_objects(const Word &w, int start, int lx, int ly, bool inverse = false);
  // D^n for the first `split` strands past the rest.
  Morphism double_braiding_power(const Word &w, int split, int n);
  // D^n for X = w[start, start+lx) past Y = next ly strands.
  Morphism double_braiding_range(const Word &w, int start, int lx, int ly, int n);
  // θ^power on the composite of w[begin, end).
  Morphism twist_insertion(const Word &w, int begin, int end, int power = 1);

  // Cup: inserts (i, i*) (CupTilde: (i*, i)) at `pos`; word grows by two.
  // Cap: removes (i*, i) (CapTilde: (i, i*)) at strands pos, pos+1.
  Morphism duality(const Word &w, DualityOp op, int pos, Label i = 0);
  cplx trace(const Morphism &f);

  // Gauge scalars on the canonical two-strand trees.
  cplx cup_norm(Label i, bool tilde) const;
  cplx cap_norm(Label i, bool tilde) const;

 private:
  struct Impl;
  SpecPtr spec_;
  std::unique_ptr<SymbolTables> tables_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mtc
