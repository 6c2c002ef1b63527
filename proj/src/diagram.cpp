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

#include "mtc/diagram.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

namespace mtc {

using Eigen::MatrixXcd;

// ---------------------------------------------------------------- Morphism

namespace {

void require_same_shape(const Morphism &a, const Morphism &b, const char *op) {
  if (a.source != b.source || a.target != b.target) {
    throw Error(ErrorCode::ShapeMismatch, std::string(op) + ": morphisms have different source or target");
  }
}

template <class Op>
Morphism combine(const Morphism &a, const Morphism &b, Op op) {
  Morphism out{a.source, a.target, {}};
  for (const auto &[c, m] : a.blocks) out.blocks[c] = m;
  for (const auto &[c, m] : b.blocks) {
    auto it = out.blocks.find(c);
    if (it == out.blocks.end()) {
      out.blocks[c] = op(MatrixXcd::Zero(m.rows(), m.cols()), m);
    } else {
      it->second = op(it->second, m);
    }
  }
  return out;
}

}  // namespace

Morphism Morphism::operator*(cplx s) const {
  Morphism out = *this;
  for (auto &[c, m] : out.blocks) m *= s;
  return out;
}

Morphism Morphism::operator+(const Morphism &o) const {
  require_same_shape(*this, o, "sum");
  return combine(*this, o, [](const MatrixXcd &x, const MatrixXcd &y) -> MatrixXcd { return x + y; });
}

Morphism Morphism::operator-(const Morphism &o) const {
  require_same_shape(*this, o, "difference");
  return combine(*this, o, [](const MatrixXcd &x, const MatrixXcd &y) -> MatrixXcd { return x - y; });
}

double Morphism::distance(const Morphism &o) const { return (*this - o).max_abs(); }

double Morphism::max_abs() const {
  double d = 0.0;
  for (const auto &[c, m] : blocks) {
    if (m.size()) d = std::max(d, m.cwiseAbs().maxCoeff());
  }
  return d;
}

std::string Morphism::dump() const {
  nlohmann::ordered_json doc;
  doc["source"] = source;
  doc["target"] = target;
  auto blocks_json = nlohmann::ordered_json::array();
  for (const auto &[c, m] : blocks) {
    nlohmann::ordered_json b;
    b["root"] = c;
    auto rows = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
      rows.push_back(row);
    }
    b["matrix"] = rows;
    blocks_json.push_back(b);
  }
  doc["blocks"] = blocks_json;
  return doc.dump();
}

// ---------------------------------------------------------------- Engine

namespace {

// e[k] is the charge after k+1 strands (e[0] = w[0], e[n-1] = root);
// mu[k] is the multiplicity of the vertex (e[k-1], w[k] -> e[k]), mu[0] = 0.
struct Tree {
  std::vector<int> e, mu;
};

using Code = std::vector<int>;

Code code_of(const Tree &t) {
  Code k(t.e);
  k.insert(k.end(), t.mu.begin(), t.mu.end());
  return k;
}

Tree tree_of(const Code &k) {
  const size_t n = k.size() / 2;
  return Tree{Code(k.begin(), k.begin() + n), Code(k.begin() + n, k.end())};
}

struct WordBasis {
  std::map<Label, std::vector<Tree>> trees;
  std::map<Label, std::map<Code, int>> index;

  int dim(Label c) const {
    auto it = trees.find(c);
    return it == trees.end() ? 0 : static_cast<int>(it->second.size());
  }
  int find(Label c, const Tree &t) const {
    auto it = index.find(c);
    if (it == index.end()) return -1;
    auto jt = it->second.find(code_of(t));
    return jt == it->second.end() ? -1 : jt->second;
  }
};

// Column layout of the split basis (T1 ⊗ T2) ∘ (a ⊗ b -> c, mu).
struct SplitEntry {
  Label a, b;
  int mu, offset, da, db;
};

struct SplitMap {
  std::map<Label, std::vector<SplitEntry>> entries;
  std::map<Label, MatrixXcd> P, Pinv;
};

MatrixXcd kron(const MatrixXcd &A, const MatrixXcd &B) {
  MatrixXcd K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

Word concat(const Word &a, const Word &b) {
  Word w(a);
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word slice(const Word &w, int begin, int end) { return Word(w.begin() + begin, w.begin() + end); }

}  // namespace

struct Engine::Impl {
  const CategorySpec &s;
  const SymbolTables &T;
  std::map<Word, std::unique_ptr<WordBasis>> bases;
  std::map<std::pair<Word, Word>, std::unique_ptr<SplitMap>> splits;
  std::map<std::tuple<Word, int, int>, Morphism> generators;
  std::map<std::tuple<Word, int, int, int>, Morphism> braids;
  std::map<std::tuple<Word, int, int, int>, Morphism> doubles;

  Impl(const CategorySpec &spec, const SymbolTables &tables) : s(spec), T(tables) {}

  const WordBasis &basis(const Word &w) {
    auto it = bases.find(w);
    if (it != bases.end()) return *it->second;
    if (static_cast<int>(w.size()) > kMaxWordLength) {
      throw Error(ErrorCode::InvalidArgument,
                  "word length " + std::to_string(w.size()) + " exceeds " + std::to_string(kMaxWordLength));
    }
    for (Label x : w) {
      if (x < 0 || x >= s.rank) throw Error(ErrorCode::InvalidArgument, "label " + std::to_string(x) + " out of range");
    }
    auto b = std::make_unique<WordBasis>();
    const int n = static_cast<int>(w.size());
    if (n == 0) {
      b->trees[0].push_back(Tree{});
    } else {
      Tree t{{w[0]}, {0}};
      auto rec = [&](auto &&self, int k) -> void {
        if (k == n) {
          b->trees[t.e.back()].push_back(t);
          return;
        }
        for (int x = 0; x < s.rank; ++x) {
          const int m = s.fusion(t.e[k - 1], w[k], x);
          for (int mu = 0; mu < m; ++mu) {
            t.e.push_back(x);
            t.mu.push_back(mu);
            self(self, k + 1);
            t.e.pop_back();
            t.mu.pop_back();
          }
        }
      };
      rec(rec, 1);
    }
    for (auto &[c, list] : b->trees) {
      auto internal = [n](const Tree &t) { return n >= 2 ? Code(t.e.begin() + 1, t.e.end() - 1) : Code{}; };
      std::stable_sort(list.begin(), list.end(), [&](const Tree &x, const Tree &y) {
        return std::make_pair(internal(x), x.mu) < std::make_pair(internal(y), y.mu);
      });
      auto &idx = b->index[c];
      for (int i = 0; i < static_cast<int>(list.size()); ++i) idx[code_of(list[i])] = i;
    }
    return *bases.emplace(w, std::move(b)).first->second;
  }

  // Expands the split tree (t1 ⊗ prefix_m(t2)) ∘ (a ⊗ b -> c, mu) in the
  // canonical basis of w1 + w2[0, m).
  void expand(const Word &w1, const Tree &t1, const Word &w2, const Tree &t2, int m, Label c, int mu,
              cplx coeff, std::map<Code, cplx> &out) {
    if (coeff == 0.0) return;
    if (w1.empty()) {
      Tree p;
      if (m > 0) p = Tree{Code(t2.e.begin(), t2.e.begin() + m), Code(t2.mu.begin(), t2.mu.begin() + m)};
      out[code_of(p)] += coeff;
      return;
    }
    if (m == 0) {
      out[code_of(t1)] += coeff;
      return;
    }
    if (m == 1) {
      Tree t = t1;
      t.e.push_back(c);
      t.mu.push_back(mu);
      out[code_of(t)] += coeff;
      return;
    }
    const Label a = t1.e.back();
    const Label b = t2.e[m - 1], bp = t2.e[m - 2], y = w2[m - 1];
    const int nu = t2.mu[m - 1];
    const FBlock *blk = T.f_block(a, bp, y, c);
    if (!blk) return;
    const int ri = blk->right_index(b, nu, mu, s.fusion(a, b, c));
    if (ri < 0) return;
    std::map<Code, cplx> sub;
    for (int li = 0; li < static_cast<int>(blk->left.size()); ++li) {
      const cplx v = blk->Finv(ri, li);
      if (v == 0.0) continue;
      const auto [e, kappa, lambda] = blk->left[li];
      sub.clear();
      expand(w1, t1, w2, t2, m - 1, e, kappa, coeff * v, sub);
      for (const auto &[code, val] : sub) {
        Tree t = tree_of(code);
        t.e.push_back(c);
        t.mu.push_back(lambda);
        out[code_of(t)] += val;
      }
    }
  }

  const SplitMap &split(const Word &w1, const Word &w2) {
    auto key = std::make_pair(w1, w2);
    auto it = splits.find(key);
    if (it != splits.end()) return *it->second;
    const WordBasis &b1 = basis(w1), &b2 = basis(w2);
    const Word w = concat(w1, w2);
    const WordBasis &bw = basis(w);
    auto sm = std::make_unique<SplitMap>();
    for (const auto &[c, canon] : bw.trees) {
      auto &entries = sm->entries[c];
      int offset = 0;
      for (const auto &[a, l1] : b1.trees) {
        for (const auto &[b, l2] : b2.trees) {
          const int n = s.fusion(a, b, c);
          for (int mu = 0; mu < n; ++mu) {
            const int da = static_cast<int>(l1.size()), db = static_cast<int>(l2.size());
            entries.push_back({a, b, mu, offset, da, db});
            offset += da * db;
          }
        }
      }
      const int dim = static_cast<int>(canon.size());
      MatrixXcd P = MatrixXcd::Zero(dim, offset);
      std::map<Code, cplx> col;
      for (const SplitEntry &se : entries) {
        const auto &l1 = b1.trees.at(se.a);
        const auto &l2 = b2.trees.at(se.b);
        for (int i1 = 0; i1 < se.da; ++i1) {
          for (int i2 = 0; i2 < se.db; ++i2) {
            col.clear();
            expand(w1, l1[i1], w2, l2[i2], static_cast<int>(w2.size()), c, se.mu, 1.0, col);
            const int j = se.offset + i1 * se.db + i2;
            for (const auto &[code, val] : col) {
              const int row = bw.find(c, tree_of(code));
              if (row < 0) throw Error(ErrorCode::InvalidData, "tensor basis change left the canonical basis");
              P(row, j) += val;
            }
          }
        }
      }
      if (P.rows() != P.cols()) throw Error(ErrorCode::InvalidData, "inconsistent hom-space dimensions");
      sm->Pinv[c] = P.fullPivLu().inverse();
      sm->P[c] = std::move(P);
    }
    return *splits.emplace(key, std::move(sm)).first->second;
  }

  MatrixXcd r_move(Label x, Label y, Label f, Crossing dir) const {
    if (dir == Crossing::Over) return T.r_matrix(x, y, f);
    return T.r_matrix(y, x, f).inverse();
  }

  // Generator at 0-based position p.
  const Morphism &generator(const Word &w, int p, Crossing dir) {
    auto key = std::make_tuple(w, p, static_cast<int>(dir));
    auto it = generators.find(key);
    if (it != generators.end()) return it->second;
    Word w2 = w;
    std::swap(w2[p], w2[p + 1]);
    const WordBasis &src = basis(w);
    const WordBasis &dst = basis(w2);
    Morphism out{w, w2, {}};
    const Label x = w[p], y = w[p + 1];
    for (const auto &[c, list] : src.trees) {
      MatrixXcd M = MatrixXcd::Zero(dst.dim(c), static_cast<Eigen::Index>(list.size()));
      for (int j = 0; j < static_cast<int>(list.size()); ++j) {
        const Tree &t = list[j];
        if (p == 0) {
          const Label f = t.e[1];
          const MatrixXcd Rm = r_move(x, y, f, dir);
          for (int g2 = 0; g2 < Rm.cols(); ++g2) {
            Tree t2 = t;
            t2.e[0] = y;
            t2.mu[1] = g2;
            M(dst.find(c, t2), j) += Rm(t.mu[1], g2);
          }
          continue;
        }
        const Label a = t.e[p - 1], e = t.e[p], d = t.e[p + 1];
        const FBlock *blk = T.f_block(a, x, y, d);
        const FBlock *blk2 = T.f_block(a, y, x, d);
        if (!blk || !blk2) continue;
        const int li = blk->left_index(e, t.mu[p], t.mu[p + 1], s.fusion(e, y, d));
        for (int ri = 0; ri < static_cast<int>(blk->right.size()); ++ri) {
          const cplx fv = blk->F(li, ri);
          if (fv == 0.0) continue;
          const auto [f, gamma, delta] = blk->right[ri];
          const MatrixXcd Rm = r_move(x, y, f, dir);
          for (int g2 = 0; g2 < Rm.cols(); ++g2) {
            const cplx rv = fv * Rm(gamma, g2);
            if (rv == 0.0) continue;
            const int ri2 = blk2->right_index(f, g2, delta, s.fusion(a, f, d));
            if (ri2 < 0) continue;
            for (int l2 = 0; l2 < static_cast<int>(blk2->left.size()); ++l2) {
              const cplx v = blk2->Finv(ri2, l2);
              if (v == 0.0) continue;
              const auto [e2, kappa, lambda] = blk2->left[l2];
              Tree t2 = t;
              t2.e[p] = e2;
              t2.mu[p] = kappa;
              t2.mu[p + 1] = lambda;
              M(dst.find(c, t2), j) += rv * v;
            }
          }
        }
      }
      out.blocks[c] = std::move(M);
    }
    return generators.emplace(key, std::move(out)).first->second;
  }
};

Engine::Engine(SpecPtr spec)
    : spec_(std::move(spec)),
      tables_(std::make_unique<SymbolTables>(*spec_)),
      impl_(std::make_unique<Impl>(*spec_, *tables_)) {}

Engine::Engine(const CategorySpec &spec) : Engine(std::make_shared<const CategorySpec>(spec)) {}

Engine::~Engine() = default;

std::vector<FusionTree> Engine::hom_basis(const Word &w, Label root) {
  const WordBasis &b = impl_->basis(w);
  std::vector<FusionTree> out;
  auto it = b.trees.find(root);
  if (it == b.trees.end()) return out;
  const int n = static_cast<int>(w.size());
  for (const Tree &t : it->second) {
    FusionTree ft;
    ft.word = w;
    ft.root = root;
    if (n >= 2) {
      ft.internal_labels.assign(t.e.begin() + 1, t.e.end() - 1);
      ft.multiplicity_indices.assign(t.mu.begin() + 1, t.mu.end());
    }
    out.push_back(std::move(ft));
  }
  return out;
}

int Engine::hom_dim(const Word &w, Label root) { return impl_->basis(w).dim(root); }

Morphism Engine::identity(const Word &w) {
  const WordBasis &b = impl_->basis(w);
  Morphism out{w, w, {}};
  for (const auto &[c, list] : b.trees) {
    const auto n = static_cast<Eigen::Index>(list.size());
    out.blocks[c] = MatrixXcd::Identity(n, n);
  }
  return out;
}

Morphism Engine::zero(const Word &source, const Word &target) {
  const WordBasis &bs = impl_->basis(source);
  const WordBasis &bt = impl_->basis(target);
  Morphism out{source, target, {}};
  for (const auto &[c, list] : bs.trees) {
    const int rows = bt.dim(c);
    if (rows) out.blocks[c] = MatrixXcd::Zero(rows, static_cast<Eigen::Index>(list.size()));
  }
  return out;
}

Morphism Engine::compose_and_tensor(const Morphism &f, const Morphism &g, ComposeMode mode) {
  return mode == ComposeMode::Sequential ? compose(f, g) : tensor(f, g);
}

Morphism Engine::compose(const Morphism &f, const Morphism &g) {
  if (f.source != g.target) {
    throw Error(ErrorCode::ShapeMismatch, "composition needs f.source == g.target");
  }
  Morphism out = zero(g.source, f.target);
  for (auto &[c, m] : out.blocks) {
    auto fi = f.blocks.find(c);
    auto gi = g.blocks.find(c);
    if (fi != f.blocks.end() && gi != g.blocks.end()) m = fi->second * gi->second;
  }
  return out;
}

Morphism Engine::tensor(const Morphism &f, const Morphism &g) {
  const SplitMap &src = impl_->split(f.source, g.source);
  const SplitMap &dst = impl_->split(f.target, g.target);
  Morphism out = zero(concat(f.source, g.source), concat(f.target, g.target));
  for (auto &[c, m] : out.blocks) {
    const auto &se = src.entries.at(c);
    const auto &te = dst.entries.at(c);
    MatrixXcd mid = MatrixXcd::Zero(m.rows(), m.cols());
    for (const SplitEntry &s : se) {
      auto fi = f.blocks.find(s.a);
      auto gi = g.blocks.find(s.b);
      if (fi == f.blocks.end() || gi == g.blocks.end()) continue;
      for (const SplitEntry &t : te) {
        if (t.a != s.a || t.b != s.b || t.mu != s.mu) continue;
        mid.block(t.offset, s.offset, t.da * t.db, s.da * s.db) = kron(fi->second, gi->second);
      }
    }
    m = dst.P.at(c) * mid * src.Pinv.at(c);
  }
  return out;
}

Morphism Engine::embed(const Word &left, const Morphism &f, const Word &right) {
  Morphism out = f;
  if (!left.empty()) out = tensor(identity(left), out);
  if (!right.empty()) out = tensor(out, identity(right));
  return out;
}

Morphism Engine::inverse(const Morphism &f) {
  Morphism out = zero(f.target, f.source);
  for (auto &[c, m] : out.blocks) {
    auto it = f.blocks.find(c);
    if (it == f.blocks.end() || it->second.rows() != it->second.cols()) {
      throw Error(ErrorCode::ShapeMismatch, "inverse needs square blocks");
    }
    m = it->second.inverse();
  }
  return out;
}

Morphism Engine::power(const Morphism &f, int n) {
  if (f.source != f.target) throw Error(ErrorCode::ShapeMismatch, "power needs an endomorphism");
  Morphism base = n < 0 ? inverse(f) : f;
  unsigned k = static_cast<unsigned>(n < 0 ? -static_cast<long>(n) : n);
  Morphism acc = identity(f.source);
  while (k) {
    if (k & 1u) acc = compose(base, acc);
    k >>= 1u;
    if (k) base = compose(base, base);
  }
  return acc;
}

Morphism Engine::braid_generator(const Word &w, int position, Crossing dir) {
  if (position < 1 || position >= static_cast<int>(w.size())) {
    throw Error(ErrorCode::PositionOutOfRange, "braid position " + std::to_string(position) +
                                                   " outside 1.." + std::to_string(static_cast<int>(w.size()) - 1));
  }
  impl_->basis(w);
  return impl_->generator(w, position - 1, dir);
}

Morphism Engine::braid_objects(const Word &w, int start, int lx, int ly, bool inverse) {
  const int n = static_cast<int>(w.size());
  if (start < 0 || lx < 0 || ly < 0 || start + lx + ly > n) {
    throw Error(ErrorCode::PositionOutOfRange, "braid range outside the word");
  }
  if (inverse) {
    // w holds Y then X; build c_{X,Y} on X then Y and invert.
    Word w0 = slice(w, 0, start);
    Word x = slice(w, start + ly, start + ly + lx), y = slice(w, start, start + ly);
    w0.insert(w0.end(), x.begin(), x.end());
    w0.insert(w0.end(), y.begin(), y.end());
    w0.insert(w0.end(), w.begin() + start + lx + ly, w.end());
    return this->inverse(braid_objects(w0, start, lx, ly, false));
  }
  auto key = std::make_tuple(w, start, lx, ly);
  auto it = impl_->braids.find(key);
  if (it != impl_->braids.end()) return it->second;
  Morphism acc = identity(w);
  Word cur = w;
  for (int k = lx - 1; k >= 0; --k) {
    for (int step = 0; step < ly; ++step) {
      const int p = start + k + step;
      acc = compose(impl_->generator(cur, p, Crossing::Over), acc);
      std::swap(cur[p], cur[p + 1]);
    }
  }
  return impl_->braids.emplace(key, std::move(acc)).first->second;
}

Morphism Engine::double_braiding_range(const Word &w, int start, int lx, int ly, int n) {
  auto key = std::make_tuple(w, start, lx, ly);
  auto it = impl_->doubles.find(key);
  if (it == impl_->doubles.end()) {
    Morphism c1 = braid_objects(w, start, lx, ly);
    Morphism c2 = braid_objects(c1.target, start, ly, lx);
    it = impl_->doubles.emplace(key, compose(c2, c1)).first;
  }
  return power(it->second, n);
}

Morphism Engine::double_braiding_power(const Word &w, int split, int n) {
  const int len = static_cast<int>(w.size());
  if (split < 0 || split > len) throw Error(ErrorCode::PositionOutOfRange, "split point outside the word");
  return double_braiding_range(w, 0, split, len - split, n);
}

Morphism Engine::twist_insertion(const Word &w, int begin, int end, int pw) {
  const int n = static_cast<int>(w.size());
  if (begin < 0 || end > n || begin > end) throw Error(ErrorCode::PositionOutOfRange, "twist range outside the word");
  const WordBasis &b = impl_->basis(w);
  if (begin == 0) {
    Morphism out{w, w, {}};
    for (const auto &[c, list] : b.trees) {
      const auto dim = static_cast<Eigen::Index>(list.size());
      MatrixXcd M = MatrixXcd::Zero(dim, dim);
      for (Eigen::Index i = 0; i < dim; ++i) {
        const cplx th = end == 0 ? cplx(1.0) : spec_->theta[list[i].e[end - 1]];
        M(i, i) = std::pow(th, pw);
      }
      out.blocks[c] = std::move(M);
    }
    return out;
  }
  // θ_{X' x} = D_{X', x} ∘ (θ_{X'} ⊗ θ_x), unrolled.
  cplx scalar = 1.0;
  for (int k = begin; k < end; ++k) scalar *= spec_->theta[w[k]];
  Morphism acc = identity(w) * scalar;
  for (int k = 1; k < end - begin; ++k) acc = compose(double_braiding_range(w, begin, k, 1, 1), acc);
  return power(acc, pw);
}

cplx Engine::cup_norm(Label i, bool tilde) const {
  if (!tilde) return 1.0;
  const Label ib = spec_->dual[i];
  return spec_->dims[i] * tables_->f_entry(FKey{{i, ib, i, i, 0, 0, 0, 0, 0, 0}});
}

cplx Engine::cap_norm(Label i, bool tilde) const {
  if (tilde) return spec_->dims[i];
  const Label ib = spec_->dual[i];
  return 1.0 / tables_->f_entry(FKey{{i, ib, i, i, 0, 0, 0, 0, 0, 0}});
}

Morphism Engine::duality(const Word &w, DualityOp op, int pos, Label i) {
  const int n = static_cast<int>(w.size());
  const bool cup = op == DualityOp::Cup || op == DualityOp::CupTilde;
  const bool tilde = op == DualityOp::CupTilde || op == DualityOp::CapTilde;
  if (pos < 0 || pos > n || (!cup && pos + 2 > n)) {
    throw Error(ErrorCode::PositionOutOfRange, "duality position outside the word");
  }
  Word pair;
  if (cup) {
    if (i < 0 || i >= spec_->rank) throw Error(ErrorCode::InvalidArgument, "cup label out of range");
    pair = tilde ? Word{spec_->dual[i], i} : Word{i, spec_->dual[i]};
  } else {
    pair = slice(w, pos, pos + 2);
    i = tilde ? pair[0] : pair[1];
    if (pair[tilde ? 1 : 0] != spec_->dual[i]) {
      throw Error(ErrorCode::ShapeMismatch, "cap needs a dual pair of strands");
    }
  }
  Morphism elem;
  if (cup) {
    elem = zero(Word{}, pair);
    elem.blocks.at(0)(0, 0) = cup_norm(i, tilde);
  } else {
    elem = zero(pair, Word{});
    elem.blocks.at(0)(0, 0) = cap_norm(i, tilde);
  }
  const Word left = slice(w, 0, pos);
  const Word right = cup ? slice(w, pos, n) : slice(w, pos + 2, n);
  return embed(left, elem, right);
}

cplx Engine::trace(const Morphism &f) {
  if (f.source != f.target) {
    throw Error(ErrorCode::TraceOnNonEndomorphism, "trace needs source == target");
  }
  cplx t = 0.0;
  for (const auto &[c, m] : f.blocks) t += spec_->dims[c] * m.trace();
  return t;
}

}  // namespace mtc
