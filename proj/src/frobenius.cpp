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

#include "mtc/frobenius.hpp"

#include <array>
#include <random>

#include "mtc/deligne.hpp"

namespace mtc {

// ---------------------------------------------------------------- sums

SumMorphism SumMorphism::operator*(cplx s) const {
  SumMorphism out{source, target, {}};
  for (const auto &[k, f] : parts) out.parts.emplace(k, f * s);
  return out;
}

double SumMorphism::distance(const SumMorphism &o) const {
  if (source != o.source || target != o.target) {
    throw Error(ErrorCode::ShapeMismatch, "distance between morphisms of different direct sums");
  }
  double d = 0.0;
  for (const auto &[k, f] : parts) {
    auto it = o.parts.find(k);
    d = std::max(d, it == o.parts.end() ? f.max_abs() : f.distance(it->second));
  }
  for (const auto &[k, g] : o.parts) {
    if (!parts.count(k)) d = std::max(d, g.max_abs());
  }
  return d;
}

SumObject sum_unit() { return SumObject{{Word{}}}; }

SumObject sum_tensor(const SumObject &x, const SumObject &y) {
  SumObject out;
  out.parts.reserve(x.parts.size() * y.parts.size());
  for (const Word &a : x.parts) {
    for (const Word &b : y.parts) {
      Word w(a);
      w.insert(w.end(), b.begin(), b.end());
      out.parts.push_back(std::move(w));
    }
  }
  return out;
}

SumMorphism sum_identity(Engine &E, const SumObject &x) {
  SumMorphism out{x, x, {}};
  for (int p = 0; p < x.size(); ++p) out.parts.emplace(std::make_pair(p, p), E.identity(x.parts[p]));
  return out;
}

SumMorphism sum_compose(Engine &E, const SumMorphism &f, const SumMorphism &g) {
  if (f.source != g.target) throw Error(ErrorCode::ShapeMismatch, "composition of mismatched direct sums");
  std::multimap<int, const std::pair<const std::pair<int, int>, Morphism> *> by_target;
  for (const auto &entry : g.parts) by_target.emplace(entry.first.first, &entry);
  SumMorphism out{g.source, f.target, {}};
  for (const auto &[ft, fm] : f.parts) {
    auto [lo, hi] = by_target.equal_range(ft.second);
    for (auto it = lo; it != hi; ++it) {
      const auto key = std::make_pair(ft.first, it->second->first.second);
      Morphism h = E.compose(fm, it->second->second);
      auto slot = out.parts.find(key);
      if (slot == out.parts.end()) {
        out.parts.emplace(key, std::move(h));
      } else {
        slot->second = slot->second + h;
      }
    }
  }
  return out;
}

SumMorphism sum_tensor(Engine &E, const SumMorphism &f, const SumMorphism &g) {
  SumMorphism out{sum_tensor(f.source, g.source), sum_tensor(f.target, g.target), {}};
  const int gs = g.source.size(), gt = g.target.size();
  for (const auto &[fk, fm] : f.parts) {
    for (const auto &[gk, gm] : g.parts) {
      out.parts.emplace(std::make_pair(fk.first * gt + gk.first, fk.second * gs + gk.second), E.tensor(fm, gm));
    }
  }
  return out;
}

// ---------------------------------------------------------------- ambient

std::shared_ptr<AmbientContext> make_ambient(const CategorySpec &spec) {
  if (static_cast<int>(spec.theta.size()) != spec.rank || spec.R.empty()) {
    throw Error(ErrorCode::NotPremodular, "'" + spec.name + "' has no braiding or twist data");
  }
  auto ctx = std::make_shared<AmbientContext>();
  ctx->base = std::make_shared<const CategorySpec>(spec);
  ctx->square = std::make_shared<const CategorySpec>(deligne_power(spec, 2));
  ctx->base_engine = std::make_shared<Engine>(ctx->base);
  ctx->engine = std::make_shared<Engine>(ctx->square);
  for (int i = 0; i < spec.rank; ++i) ctx->components.push_back(ctx->pair_label(spec.dual[i], i));
  return ctx;
}

namespace {

// Index in the base basis of each component tree of a product tree.
std::vector<std::pair<int, int>> split_trees(AmbientContext &ctx, const Word &w1, const Word &w2, const Word &w,
                                             Label c) {
  const CategorySpec &s = *ctx.base;
  const int r = s.rank, n = static_cast<int>(w.size());
  const Label c1 = c / r, c2 = c % r;
  const std::vector<FusionTree> t1 = ctx.base_engine->hom_basis(w1, c1);
  const std::vector<FusionTree> t2 = ctx.base_engine->hom_basis(w2, c2);
  auto find = [](const std::vector<FusionTree> &list, const FusionTree &t) {
    for (size_t i = 0; i < list.size(); ++i) {
      if (list[i] == t) return static_cast<int>(i);
    }
    throw Error(ErrorCode::InvalidData, "product tree has no component tree");
  };
  std::vector<std::pair<int, int>> out;
  for (const FusionTree &t : ctx.engine->hom_basis(w, c)) {
    FusionTree a{w1, {}, {}, c1}, b{w2, {}, {}, c2};
    for (Label e : t.internal_labels) {
      a.internal_labels.push_back(e / r);
      b.internal_labels.push_back(e % r);
    }
    for (int k = 1; k < n; ++k) {
      const Label prev = k == 1 ? w2[0] : b.internal_labels[k - 2];
      const Label cur = k == n - 1 ? c2 : b.internal_labels[k - 1];
      const int nb = s.fusion(prev, w2[k], cur);
      const int mu = t.multiplicity_indices[k - 1];
      a.multiplicity_indices.push_back(mu / nb);
      b.multiplicity_indices.push_back(mu % nb);
    }
    out.emplace_back(find(t1, a), find(t2, b));
  }
  return out;
}

}  // namespace

Morphism deligne_kron(AmbientContext &ctx, const Morphism &f, const Morphism &g) {
  if (f.source.size() != g.source.size() || f.target.size() != g.target.size()) {
    throw Error(ErrorCode::ShapeMismatch, "Deligne factors need words of equal length");
  }
  Word src, tgt;
  for (size_t k = 0; k < f.source.size(); ++k) src.push_back(ctx.pair_label(f.source[k], g.source[k]));
  for (size_t k = 0; k < f.target.size(); ++k) tgt.push_back(ctx.pair_label(f.target[k], g.target[k]));
  const int r = ctx.base->rank;
  Morphism out = ctx.engine->zero(src, tgt);
  for (auto &[c, M] : out.blocks) {
    auto fb = f.blocks.find(c / r);
    auto gb = g.blocks.find(c % r);
    if (fb == f.blocks.end() || gb == g.blocks.end()) continue;
    const auto si = split_trees(ctx, f.source, g.source, src, c);
    const auto ti = split_trees(ctx, f.target, g.target, tgt, c);
    for (Eigen::Index a = 0; a < M.rows(); ++a) {
      for (Eigen::Index b = 0; b < M.cols(); ++b) {
        M(a, b) = fb->second(ti[a].first, si[b].first) * gb->second(ti[a].second, si[b].second);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- algebra

namespace {

using Triple = std::array<Label, 3>;

// f_v: i j -> k with coefficients v over the basis trees; fbar_v: k -> i j
// with conjugate coefficients, so that f_u ∘ fbar_v = <v, u>.
Morphism vertex(Engine &B, Label i, Label j, Label k, const Eigen::VectorXcd &v) {
  Morphism f = B.zero({i, j}, {k});
  f.blocks.at(k).row(0) = v.transpose();
  return f;
}

Morphism covertex(Engine &B, Label i, Label j, Label k, const Eigen::VectorXcd &v) {
  Morphism f = B.zero({k}, {i, j});
  f.blocks.at(k).col(0) = v.conjugate();
  return f;
}

std::map<Triple, Eigen::MatrixXcd> basis_changes(const CategorySpec &s, const BuildOptions &opts) {
  std::map<Triple, Eigen::MatrixXcd> out;
  std::mt19937_64 rng(opts.basis_seed.value_or(0));
  std::normal_distribution<double> normal;
  for (Label i = 0; i < s.rank; ++i) {
    for (Label j = 0; j < s.rank; ++j) {
      for (Label k = 0; k < s.rank; ++k) {
        const int N = s.fusion(i, j, k);
        if (!N) continue;
        if (!opts.basis_seed) {
          out[{i, j, k}] = Eigen::MatrixXcd::Identity(N, N);
          continue;
        }
        Eigen::MatrixXcd G(N, N);
        for (Eigen::Index a = 0; a < N; ++a)
          for (Eigen::Index b = 0; b < N; ++b) G(a, b) = cplx(normal(rng), normal(rng));
        out[{i, j, k}] = Eigen::HouseholderQR<Eigen::MatrixXcd>(G).householderQ() * Eigen::MatrixXcd::Identity(N, N);
      }
    }
  }
  return out;
}

// First factor of m^(n) at (i, j -> k): ī j̄ -> k̄.
Morphism product_factor(Engine &B, int n, Label i, Label j, Label k, const Morphism &fbar) {
  const CategorySpec &s = B.spec();
  const Label ib = s.dual[i], jb = s.dual[j], kb = s.dual[k];
  Morphism out = B.duality({ib, jb}, DualityOp::Cup, 2, k);
  out = B.compose(B.embed({ib, jb}, fbar, {kb}), out);
  if (n != 0) out = B.compose(B.double_braiding_range(out.target, 0, 1, 1, n), out);
  out = B.compose(B.braid_generator(out.target, 2, Crossing::Over), out);
  out = B.compose(B.duality(out.target, DualityOp::Cap, 0), out);
  return B.compose(B.duality(out.target, DualityOp::Cap, 0), out);
}

// First factor of Δ^(n) at (k -> i, j): k̄ -> ī j̄, without its scalar.
Morphism coproduct_factor(Engine &B, int n, Label i, Label j, Label k, const Morphism &f) {
  const CategorySpec &s = B.spec();
  const Label ib = s.dual[i], jb = s.dual[j], kb = s.dual[k];
  Morphism out = B.duality({kb}, DualityOp::CupTilde, 0, i);
  out = B.compose(B.duality(out.target, DualityOp::CupTilde, 2, j), out);
  out = B.compose(B.braid_generator(out.target, 2, Crossing::Under), out);
  if (n != 0) out = B.compose(B.double_braiding_range(out.target, 0, 1, 1, -n), out);
  out = B.compose(B.embed({ib, jb}, f, {kb}), out);
  return B.compose(B.duality(out.target, DualityOp::CapTilde, 2), out);
}

int index_of(const std::vector<Label> &v, Label x) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == x) return static_cast<int>(i);
  }
  return -1;
}

std::string n_suffix(int n) { return ".n=" + std::to_string(n); }

}  // namespace

FrobeniusAlgebraData build_frobenius_algebra(std::shared_ptr<AmbientContext> ctx, int n, const BuildOptions &opts) {
  const CategorySpec &s = *ctx->base;
  Engine &B = *ctx->base_engine;
  Engine &P = *ctx->engine;
  const int r = s.rank;
  const double Dim = s.global_dim();

  FrobeniusAlgebraData alg;
  alg.ctx = ctx;
  alg.n = n;
  for (Label L : ctx->components) alg.A.parts.push_back({L});
  const SumObject AA = sum_tensor(alg.A, alg.A);
  alg.m = SumMorphism{AA, alg.A, {}};
  alg.coproduct = SumMorphism{alg.A, AA, {}};

  const auto changes = basis_changes(s, opts);
  for (const auto &[t, U] : changes) {
    const auto [i, j, k] = t;
    Morphism mk = P.zero(AA.parts[i * r + j], alg.A.parts[k]);
    Morphism dk = P.zero(alg.A.parts[k], AA.parts[i * r + j]);
    for (Eigen::Index a = 0; a < U.rows(); ++a) {
      const Eigen::VectorXcd v = U.row(a).transpose();
      const Morphism f = vertex(B, i, j, k, v), fbar = covertex(B, i, j, k, v);
      mk = mk + deligne_kron(*ctx, product_factor(B, n, i, j, k, fbar), f);
      dk = dk + deligne_kron(*ctx, coproduct_factor(B, n, i, j, k, f), fbar);
    }
    const double scale = s.dims[i] * s.dims[j] / (Dim * s.dims[k]);
    alg.m.parts.emplace(std::make_pair(k, i * r + j), mk);
    alg.coproduct.parts.emplace(std::make_pair(i * r + j, k), dk * scale);
  }

  const int zero = index_of(ctx->components, 0);
  Morphism eta = P.zero({}, alg.A.parts[zero]);
  eta.blocks.at(0)(0, 0) = 1.0;
  alg.unit = SumMorphism{sum_unit(), alg.A, {{{zero, 0}, eta}}};
  Morphism eps = P.zero(alg.A.parts[zero], {});
  eps.blocks.at(0)(0, 0) = Dim;
  alg.counit = SumMorphism{alg.A, sum_unit(), {{{0, zero}, eps}}};
  return alg;
}

FrobeniusAlgebraData build_frobenius_algebra(const CategorySpec &spec, int n) {
  return build_frobenius_algebra(make_ambient(spec), n);
}

SumObject dual_object(const FrobeniusAlgebraData &alg) {
  SumObject out;
  for (Label L : alg.ctx->components) out.parts.push_back({alg.ctx->square->dual[L]});
  return out;
}

SumMorphism coevaluation(const FrobeniusAlgebraData &alg, bool tilde) {
  Engine &P = *alg.ctx->engine;
  const SumObject Ad = dual_object(alg);
  const int r = alg.A.size();
  SumMorphism out{sum_unit(), tilde ? sum_tensor(Ad, alg.A) : sum_tensor(alg.A, Ad), {}};
  for (int i = 0; i < r; ++i) {
    out.parts.emplace(std::make_pair(i * r + i, 0),
                      P.duality({}, tilde ? DualityOp::CupTilde : DualityOp::Cup, 0, alg.ctx->components[i]));
  }
  return out;
}

SumMorphism evaluation(const FrobeniusAlgebraData &alg, bool tilde) {
  Engine &P = *alg.ctx->engine;
  const SumObject Ad = dual_object(alg);
  const int r = alg.A.size();
  SumMorphism out{tilde ? sum_tensor(alg.A, Ad) : sum_tensor(Ad, alg.A), sum_unit(), {}};
  for (int i = 0; i < r; ++i) {
    const Word &w = out.source.parts[i * r + i];
    out.parts.emplace(std::make_pair(0, i * r + i), P.duality(w, tilde ? DualityOp::CapTilde : DualityOp::Cap, 0));
  }
  return out;
}

std::pair<SumMorphism, SumMorphism> symmetry_maps(const FrobeniusAlgebraData &alg) {
  Engine &P = *alg.ctx->engine;
  const SumObject Ad = dual_object(alg);
  const SumMorphism idA = sum_identity(P, alg.A), idAd = sum_identity(P, Ad);
  const SumMorphism em = sum_compose(P, alg.counit, alg.m);
  SumMorphism first = sum_compose(P, sum_tensor(P, em, idAd), sum_tensor(P, idA, coevaluation(alg, false)));
  SumMorphism second = sum_compose(P, sum_tensor(P, idAd, em), sum_tensor(P, coevaluation(alg, true), idA));
  return {first, second};
}

SumMorphism phi_map(const FrobeniusAlgebraData &alg) {
  Engine &P = *alg.ctx->engine;
  const SumObject Ad = dual_object(alg);
  const SumMorphism idA = sum_identity(P, alg.A), idAd = sum_identity(P, Ad);
  SumMorphism out = sum_tensor(P, idA, coevaluation(alg, false));
  out = sum_compose(P, sum_tensor(P, sum_tensor(P, coevaluation(alg, true), alg.m), idAd), out);
  out = sum_compose(P, sum_tensor(P, sum_tensor(P, idAd, alg.m), idAd), out);
  return sum_compose(P, sum_tensor(P, evaluation(alg, false), idAd), out);
}

Report verify_frobenius_axioms(const FrobeniusAlgebraData &alg, const Tolerance &tol) {
  Engine &P = *alg.ctx->engine;
  const CategorySpec &s = *alg.ctx->base;
  const SumMorphism id = sum_identity(P, alg.A);
  const SumMorphism &m = alg.m, &d = alg.coproduct, &eta = alg.unit, &eps = alg.counit;
  auto C = [&](const SumMorphism &f, const SumMorphism &g) { return sum_compose(P, f, g); };
  auto T = [&](const SumMorphism &f, const SumMorphism &g) { return sum_tensor(P, f, g); };
  const std::string sfx = n_suffix(alg.n);
  const double t = tol.atol;
  Report rep;

  rep.add("frobenius.associativity" + sfx, "associativity of m^(n)", C(m, T(m, id)).distance(C(m, T(id, m))), t);
  rep.add("frobenius.unit" + sfx, "unit axiom for eta",
          std::max(C(m, T(eta, id)).distance(id), C(m, T(id, eta)).distance(id)), t);
  rep.add("frobenius.coassociativity" + sfx, "coassociativity of Delta^(n)",
          C(T(d, id), d).distance(C(T(id, d), d)), t);
  rep.add("frobenius.counit" + sfx, "counit axiom for epsilon",
          std::max(C(T(eps, id), d).distance(id), C(T(id, eps), d).distance(id)), t);
  const SumMorphism dm = C(d, m);
  rep.add("frobenius.frobenius" + sfx, "Frobenius compatibility of m and Delta",
          std::max(C(T(m, id), T(id, d)).distance(dm), C(T(id, m), T(d, id)).distance(dm)), t);
  const auto [s1, s2] = symmetry_maps(alg);
  rep.add("frobenius.symmetry" + sfx, "symmetry of the Frobenius form", s1.distance(s2), t);
  const SumMorphism ee = C(eps, eta);
  double ee_dev = 0.0;
  auto it = ee.parts.find({0, 0});
  ee_dev = std::abs((it == ee.parts.end() ? cplx(0.0) : it->second.blocks.at(0)(0, 0)) - alg.dim());
  rep.add("frobenius.special" + sfx, "specialness m Delta = id, eps eta = Dim",
          std::max(C(m, d).distance(id), ee_dev), t);

  // Φ maps the component (ī, i) onto itself inside A∨; only |Φ_i| is
  // gauge invariant.
  const SumMorphism phi = phi_map(alg);
  const int r = s.rank;
  double phi_dev = 0.0;
  for (const auto &[key, f] : phi.parts) {
    const Label i = key.second, j = key.first;
    double expected = 0.0;
    if (j == s.dual[i]) expected = alg.dim() / std::abs(s.dims[i]);
    for (const auto &[c, M] : f.blocks) {
      if (M.size()) phi_dev = std::max(phi_dev, std::abs(std::abs(M(0, 0)) - expected));
    }
  }
  for (Label i = 0; i < r; ++i) {
    if (!phi.parts.count({s.dual[i], i})) phi_dev = std::max(phi_dev, alg.dim() / std::abs(s.dims[i]));
  }
  rep.add("frobenius.phi_closed_form" + sfx, "Phi^(n) = Dim (+) 1/dim_i up to phase", phi_dev, t);
  return rep;
}

SumMorphism sigma_power(const FrobeniusAlgebraData &alg, int k) {
  Engine &P = *alg.ctx->engine;
  const CategorySpec &s = *alg.ctx->base;
  SumMorphism out{alg.A, alg.A, {}};
  for (Label i = 0; i < s.rank; ++i) {
    out.parts.emplace(std::make_pair(i, i), P.identity(alg.A.parts[i]) * std::pow(s.theta[s.dual[i]], k));
  }
  return out;
}

Report check_phi_relation(const FrobeniusAlgebraData &alg, const FrobeniusAlgebraData &alg0, const Tolerance &tol) {
  Engine &P = *alg.ctx->engine;
  const SumMorphism rhs = sum_compose(P, phi_map(alg0), sigma_power(alg0, -2 * alg.n));
  Report rep;
  rep.add("frobenius.phi_sigma_relation" + n_suffix(alg.n), "Phi^(n) = Phi^(0) sigma^(-2n)",
          phi_map(alg).distance(rhs), tol.atol);
  return rep;
}

std::pair<SumMorphism, Report> sigma_isomorphism(const FrobeniusAlgebraData &from, const FrobeniusAlgebraData &to,
                                                 const Tolerance &tol) {
  Engine &P = *from.ctx->engine;
  const int k = to.n - from.n;
  const SumMorphism sg = sigma_power(from, k), sgi = sigma_power(from, -k);
  auto C = [&](const SumMorphism &f, const SumMorphism &g) { return sum_compose(P, f, g); };
  auto T = [&](const SumMorphism &f, const SumMorphism &g) { return sum_tensor(P, f, g); };
  double dev = C(sg, C(from.m, T(sgi, sgi))).distance(to.m);
  dev = std::max(dev, C(sg, from.unit).distance(to.unit));
  dev = std::max(dev, C(T(sg, sg), C(from.coproduct, sgi)).distance(to.coproduct));
  dev = std::max(dev, C(from.counit, sgi).distance(to.counit));
  Report rep;
  rep.add("frobenius.sigma_intertwines.n=" + std::to_string(from.n) + "->" + std::to_string(to.n),
          "sigma^k intertwines the n-indexed Frobenius structures", dev, tol.atol);
  return {sg, rep};
}

CenterDatum left_center_idempotent(const FrobeniusAlgebraData &alg, const Tolerance &tol) {
  Engine &P = *alg.ctx->engine;
  const int r = alg.A.size();
  const SumMorphism id = sum_identity(P, alg.A);
  SumMorphism braid{sum_tensor(alg.A, alg.A), sum_tensor(alg.A, alg.A), {}};
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      const Word w{alg.ctx->components[a], alg.ctx->components[b]};
      braid.parts.emplace(std::make_pair(b * r + a, a * r + b), P.braid_generator(w, 1, Crossing::Over));
    }
  }
  SumMorphism p = sum_tensor(P, sum_compose(P, alg.coproduct, alg.unit), id);
  p = sum_compose(P, sum_tensor(P, id, braid), p);
  p = sum_compose(P, alg.m, sum_compose(P, sum_tensor(P, alg.m, id), p));

  CenterDatum out;
  out.P = p;
  out.idempotency_deviation = sum_compose(P, p, p).distance(p);
  out.unit_projection_deviation = p.distance(sum_compose(P, alg.unit, alg.counit) * (1.0 / alg.dim()));
  out.rank_per_component.assign(r, 0);
  for (const auto &[key, f] : p.parts) {
    if (key.first != key.second) continue;
    for (const auto &[c, M] : f.blocks) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
      const auto &sv = svd.singularValues();
      for (Eigen::Index q = 0; q < sv.size(); ++q) {
        if (sv(q) > tol.integer_snap) ++out.rank_per_component[key.first];
      }
    }
  }
  const int zero = index_of(alg.ctx->components, 0);
  out.is_trivial = true;
  for (int i = 0; i < r; ++i) {
    if (out.rank_per_component[i] != (i == zero ? 1 : 0)) out.is_trivial = false;
  }
  return out;
}

XiResult xi_azumaya(const CategorySpec &s, const Tolerance &tol) {
  if (static_cast<int>(s.theta.size()) != s.rank) {
    throw Error(ErrorCode::NotPremodular, "'" + s.name + "' has no twist data");
  }
  const double Dim = s.global_dim();
  XiResult out;
  out.is_azumaya = true;
  for (Label i = 0; i < s.rank; ++i) {
    cplx x = 0.0;
    for (Label j = 0; j < s.rank; ++j) {
      for (Label k = 0; k < s.rank; ++k) {
        const int N = s.fusion(k, j, i);
        if (N) x += double(N) * s.dims[j] * s.dims[k] / (Dim * s.dims[i]) * s.theta[i] * s.theta[k] / s.theta[j];
      }
    }
    if (std::abs(x) > tol.integer_snap && std::abs(x - 1.0) > tol.integer_snap) {
      throw Error(ErrorCode::XiNotZeroOne, "xi_" + label_name(s, i) + " is neither 0 nor 1");
    }
    if (std::abs(x - (i == 0 ? 1.0 : 0.0)) > tol.atol) out.is_azumaya = false;
    out.xi.push_back(x);
  }
  return out;
}

}  // namespace mtc
