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

#include "mtc/module_category.hpp"

#include <random>

namespace mtc {
namespace {

int len(const Word &w) { return static_cast<int>(w.size()); }

Word cat(std::initializer_list<const Word *> parts) {
  Word w;
  for (const Word *p : parts) w.insert(w.end(), p->begin(), p->end());
  return w;
}

std::string n_suffix(int n) { return ".n=" + std::to_string(n); }

const char *side_name(Side s) { return s == Side::Right ? "right" : "left"; }

// Inverse round trip, and for unitary data also M^† M = 1.
double invertibility_deviation(Engine &E, const Morphism &f) {
  return E.compose(E.inverse(f), f).distance(E.identity(f.source));
}

double unitarity_deviation(const Morphism &f) {
  double d = 0.0;
  for (const auto &[c, m] : f.blocks) {
    const Eigen::MatrixXcd g = m.adjoint() * m;
    d = std::max(d, (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff());
  }
  return d;
}

}  // namespace

Word strand(Label l) { return l == 0 ? Word{} : Word{l}; }

PairObject pair_object(Label u, Label v) { return {strand(u), strand(v)}; }

PairObject tensor_pairs(const PairObject &x, const PairObject &y) {
  return {cat({&x.u, &y.u}), cat({&x.v, &y.v})};
}

std::vector<int> module_action(const CategorySpec &s, Label M, Label U, Label V) {
  std::vector<int> out(s.rank, 0);
  for (int m = 0; m < s.rank; ++m) {
    const int a = s.fusion(M, U, m);
    if (!a) continue;
    for (int k = 0; k < s.rank; ++k) out[k] += a * s.fusion(m, V, k);
  }
  return out;
}

Morphism right_associator(Engine &E, int n, const Word &M, const PairObject &X, const PairObject &Y,
                          const Word &tail) {
  const Word w = cat({&M, &X.u, &Y.u, &X.v, &Y.v, &tail});
  const int a = len(M) + len(X.u);
  Morphism c = E.braid_objects(w, a, len(Y.u), len(X.v));
  if (n == 0) return c;
  Morphism d1 = E.double_braiding_range(w, 0, a, len(Y.u), n);
  Morphism d2 = E.double_braiding_range(c.target, 0, a + len(X.v), len(Y.u), -n);
  return E.compose(d2, E.compose(c, d1));
}

Morphism left_associator(Engine &E, int n, const Word &head, const PairObject &X, const PairObject &Y,
                         const Word &M) {
  const Word w = cat({&head, &X.u, &Y.u, &X.v, &Y.v, &M});
  const int o = len(head) + len(X.u);
  Morphism ci = E.braid_objects(w, o, len(X.v), len(Y.u), true);
  if (n == 0) return ci;
  Morphism d1 = E.double_braiding_range(w, o + len(Y.u), len(X.v), len(Y.v) + len(M), -n);
  Morphism d2 = E.double_braiding_range(ci.target, o, len(X.v), len(Y.u) + len(Y.v) + len(M), n);
  return E.compose(d2, E.compose(ci, d1));
}

Morphism build_associator(Engine &E, int n, Side side, Label M, LabelPair X, LabelPair Y) {
  const PairObject x = pair_object(X.first, X.second), y = pair_object(Y.first, Y.second);
  if (side == Side::Right) return right_associator(E, n, strand(M), x, y);
  return left_associator(E, n, {}, x, y, strand(M));
}

double pentagon_deviation(Engine &E, int n, Side side, Label m, LabelPair X, LabelPair Y, LabelPair Z) {
  const Word M = strand(m);
  const PairObject x = pair_object(X.first, X.second), y = pair_object(Y.first, Y.second),
                   z = pair_object(Z.first, Z.second);
  if (side == Side::Right) {
    const Word mx = cat({&M, &x.u, &x.v});
    const Word zt = cat({&z.u, &z.v});
    Morphism lhs = E.compose(right_associator(E, n, mx, y, z), right_associator(E, n, M, x, tensor_pairs(y, z)));
    Morphism rhs =
        E.compose(right_associator(E, n, M, x, y, zt), right_associator(E, n, M, tensor_pairs(x, y), z));
    return lhs.distance(rhs);
  }
  const Word zm = cat({&z.u, &z.v, &M});
  const Word xh = cat({&x.u, &x.v});
  Morphism lhs = E.compose(left_associator(E, n, {}, x, y, zm), left_associator(E, n, {}, tensor_pairs(x, y), z, M));
  Morphism rhs = E.compose(left_associator(E, n, xh, y, z, M), left_associator(E, n, {}, x, tensor_pairs(y, z), M));
  return lhs.distance(rhs);
}

Report check_module_pentagon(Engine &E, int n, Side side, const Tolerance &tol, const PentagonOptions &opts) {
  const int r = E.spec().rank;
  Sampling sampling = opts.sampling;
  if (sampling == Sampling::Auto) sampling = r <= 3 ? Sampling::AllSimples : Sampling::Random;
  double dev = 0.0;
  long count = 0;
  auto one = [&](Label m, LabelPair x, LabelPair y, LabelPair z) {
    dev = std::max(dev, pentagon_deviation(E, n, side, m, x, y, z));
    ++count;
  };
  if (sampling == Sampling::AllSimples) {
    for (int m = 0; m < r; ++m)
      for (int a = 0; a < r * r; ++a)
        for (int b = 0; b < r * r; ++b)
          for (int c = 0; c < r * r; ++c) one(m, {a / r, a % r}, {b / r, b % r}, {c / r, c % r});
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> pick(0, r - 1);
    for (int k = 0; k < opts.draws; ++k) {
      const Label m = pick(rng);
      LabelPair p[3];
      for (auto &q : p) {
        q.first = pick(rng);
        q.second = pick(rng);
      }
      one(m, p[0], p[1], p[2]);
    }
  }
  // Unit constraints are identities, so ψ with a unit argument must be id.
  double tri = 0.0;
  for (int m = 0; m < r; ++m)
    for (int a = 0; a < r * r; ++a) {
      const PairObject x = pair_object(a / r, a % r), unit{};
      const Word M = strand(m);
      Morphism p1 = side == Side::Right ? right_associator(E, n, M, unit, x) : left_associator(E, n, {}, unit, x, M);
      Morphism p2 = side == Side::Right ? right_associator(E, n, M, x, unit) : left_associator(E, n, {}, x, unit, M);
      tri = std::max({tri, p1.distance(E.identity(p1.source)), p2.distance(E.identity(p2.source))});
    }
  Report rep;
  const std::string base = std::string("module_pentagon.") + side_name(side) + n_suffix(n);
  const std::string scope = sampling == Sampling::AllSimples ? "all simple quadruples" : "random quadruples";
  rep.add(base, side == Side::Right ? "module pentagon for psi^(n)" : "left module pentagon for psi-hat^(n)", dev,
          tol.atol, std::to_string(count) + " " + scope);
  rep.add(std::string("module_triangle.") + side_name(side) + n_suffix(n), "unit constraint r_M = id", tri,
          tol.atol);
  return rep;
}

Morphism twist_gamma(Engine &E, const Word &M, const PairObject &X, const Word &tail) {
  const Word w = cat({&M, &X.u, &X.v, &tail});
  return E.compose(E.twist_insertion(w, 0, len(M) + len(X.u), -1), E.twist_insertion(w, 0, len(M), 1));
}

std::pair<ModuleFunctorData, Report> gamma_twist_functor(Engine &E, int n, const Tolerance &tol) {
  const int r = E.spec().rank;
  ModuleFunctorData data;
  data.source_n = n;
  data.target_n = n + 1;
  for (int m = 0; m < r; ++m)
    for (int u = 0; u < r; ++u)
      for (int v = 0; v < r; ++v) data.gamma.emplace(std::array<Label, 3>{m, u, v}, twist_gamma(E, strand(m), pair_object(u, v)));
  double dev = 0.0;
  for (int m = 0; m < r; ++m)
    for (int a = 0; a < r * r; ++a)
      for (int b = 0; b < r * r; ++b) {
        const Word M = strand(m);
        const PairObject x = pair_object(a / r, a % r), y = pair_object(b / r, b % r);
        const Word mx = cat({&M, &x.u, &x.v}), yt = cat({&y.u, &y.v});
        Morphism lhs = E.compose(twist_gamma(E, M, x, yt),
                                 E.compose(twist_gamma(E, mx, y), right_associator(E, n, M, x, y)));
        Morphism rhs = E.compose(right_associator(E, n + 1, M, x, y), twist_gamma(E, M, tensor_pairs(x, y)));
        dev = std::max(dev, lhs.distance(rhs));
      }
  Report rep;
  rep.add("gamma_module_functor" + n_suffix(n), "twist-built gamma is a module functor C^(n) -> C^(n+1)", dev,
          tol.atol);
  return {std::move(data), std::move(rep)};
}

std::vector<cplx> extract_twist(const ModuleFunctorData &data) {
  if (data.source_n != 0 || data.target_n != 1) {
    throw Error(ErrorCode::WrongLevels, "twist extraction needs gamma from level 0 to level 1, got " +
                                            std::to_string(data.source_n) + " -> " + std::to_string(data.target_n));
  }
  int r = 0;
  for (const auto &[k, g] : data.gamma) r = std::max(r, k[1] + 1);
  std::vector<cplx> theta(r, 1.0);
  for (int u = 1; u < r; ++u) {
    const Morphism &g1 = data.gamma.at({0, 0, u});
    const Morphism &g2 = data.gamma.at({0, u, 0});
    theta[u] = g1.blocks.at(u)(0, 0) / g2.blocks.at(u)(0, 0);
  }
  return theta;
}

Morphism induction_gamma(Engine &E, int n, InductionSign sign, const Word &M, const PairObject &X,
                         const PairObject &Y, const Word &tail) {
  Morphism to_action = E.inverse(right_associator(E, n, M, Y, X, tail));
  const Word &w = to_action.target;  // M U' U V' V tail
  const int m = len(M);
  Morphism br;
  if (sign == InductionSign::Plus) {
    br = E.braid_objects(w, m, len(Y.u), len(X.u));
    br = E.compose(E.braid_objects(br.target, m + len(X.u) + len(Y.u), len(Y.v), len(X.v)), br);
  } else {
    br = E.braid_objects(w, m, len(X.u), len(Y.u), true);
    br = E.compose(E.braid_objects(br.target, m + len(X.u) + len(Y.u), len(X.v), len(Y.v), true), br);
  }
  return E.compose(right_associator(E, n, M, X, Y, tail), E.compose(br, to_action));
}

InductionStructure alpha_induction(Engine &E, InductionSign sign, LabelPair X, int n, const Tolerance &tol) {
  const int r = E.spec().rank;
  InductionStructure out;
  out.sign = sign;
  out.X = X;
  out.n = n;
  const PairObject x = pair_object(X.first, X.second);
  const Word xt = cat({&x.u, &x.v});
  double inv = 0.0;
  for (int m = 0; m < r; ++m)
    for (int a = 0; a < r * r; ++a) {
      Morphism g = induction_gamma(E, n, sign, strand(m), x, pair_object(a / r, a % r));
      inv = std::max(inv, invertibility_deviation(E, g));
      out.gamma.emplace(std::array<Label, 3>{m, a / r, a % r}, std::move(g));
    }
  double dev = 0.0;
  for (int m = 0; m < r; ++m)
    for (int a = 0; a < r * r; ++a)
      for (int b = 0; b < r * r; ++b) {
        const Word M = strand(m);
        const PairObject y1 = pair_object(a / r, a % r), y2 = pair_object(b / r, b % r);
        const Word my1 = cat({&M, &y1.u, &y1.v}), mx = cat({&M, &x.u, &x.v}), y2t = cat({&y2.u, &y2.v});
        Morphism lhs = E.compose(induction_gamma(E, n, sign, M, x, y1, y2t),
                                 E.compose(induction_gamma(E, n, sign, my1, x, y2), right_associator(E, n, M, y1, y2, xt)));
        Morphism rhs = E.compose(right_associator(E, n, mx, y1, y2), induction_gamma(E, n, sign, M, x, tensor_pairs(y1, y2)));
        dev = std::max(dev, lhs.distance(rhs));
      }
  const std::string s = sign == InductionSign::Plus ? "plus" : "minus";
  const std::string tag = "(" + std::to_string(X.first) + "," + std::to_string(X.second) + ")";
  out.report.add("alpha_induction." + s + tag + n_suffix(n), "braided induction is a module functor", dev, tol.atol);
  out.report.add("alpha_induction_invertible." + s + tag + n_suffix(n), "gamma^{X,+-} invertible", inv, tol.atol);
  return out;
}

Morphism transposition_gamma(Engine &E, const Word &M, const Word &U, const Word &V, const Word &tail) {
  const Word w = cat({&M, &U, &V, &tail});
  Morphism c = E.braid_objects(w, len(M), len(U), len(V));
  return E.compose(E.double_braiding_range(c.target, 0, len(M), len(V), 1), c);
}

Report transposition_nat_iso(Engine &E, Label u, Label v, const Tolerance &tol) {
  const int r = E.spec().rank;
  const Word U = strand(u), V = strand(v);
  const PairObject x = pair_object(u, v), xt = pair_object(v, u);
  double inv = 0.0, dev = 0.0;
  for (int m = 0; m < r; ++m) {
    const Word M = strand(m);
    inv = std::max(inv, invertibility_deviation(E, transposition_gamma(E, M, U, V)));
    for (int a = 0; a < r * r; ++a) {
      const PairObject y = pair_object(a / r, a % r);
      const Word my = cat({&M, &y.u, &y.v}), yt = cat({&y.u, &y.v});
      Morphism lhs = E.compose(induction_gamma(E, 0, InductionSign::Minus, M, xt, y), transposition_gamma(E, my, U, V));
      Morphism rhs = E.compose(transposition_gamma(E, M, U, V, yt), induction_gamma(E, 0, InductionSign::Plus, M, x, y));
      dev = std::max(dev, lhs.distance(rhs));
    }
  }
  Report rep;
  const std::string tag = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  rep.add("transposition_witness" + tag, "Gamma_M intertwines alpha^+_{UxV} and alpha^-_{VxU}", dev, tol.atol);
  rep.add("transposition_invertible" + tag, "Gamma_M invertible", inv, tol.atol);
  return rep;
}

Report check_associator_properties(Engine &E, int n_min, int n_max, const Tolerance &tol) {
  const int r = E.spec().rank;
  const bool unitary = data_is_unitary(E, tol.atol);
  double s0 = 0.0, s1 = 0.0, inv = 0.0, uni = 0.0;
  for (int m = 0; m < r; ++m)
    for (int a = 0; a < r * r; ++a)
      for (int b = 0; b < r * r; ++b) {
        const Word M = strand(m);
        const PairObject x = pair_object(a / r, a % r), y = pair_object(b / r, b % r);
        const Word w = cat({&M, &x.u, &y.u, &x.v, &y.v});
        const int o = len(M) + len(x.u);
        for (int n = n_min; n <= n_max; ++n) {
          Morphism p = right_associator(E, n, M, x, y);
          inv = std::max(inv, invertibility_deviation(E, p));
          if (unitary) uni = std::max(uni, unitarity_deviation(p));
          if (n == 0) s0 = std::max(s0, p.distance(E.braid_objects(w, o, len(y.u), len(x.v))));
          if (n == 1) s1 = std::max(s1, p.distance(E.braid_objects(w, o, len(x.v), len(y.u), true)));
        }
      }
  Report rep;
  rep.add("associator.psi0_closed_form", "psi^(0) = id (x) c_{U2,V1} (x) id", s0, tol.atol);
  rep.add("associator.psi1_closed_form", "psi^(1) = id (x) c^-1_{V1,U2} (x) id", s1, tol.atol);
  rep.add("associator.invertible", "psi^(n) invertible", inv, tol.atol);
  if (unitary) {
    rep.add("associator.unitary", "psi^(n) unitary for unitary data", uni, tol.atol);
  } else {
    rep.skip("associator.unitary", "psi^(n) unitary for unitary data", "F/R data not unitary");
  }
  return rep;
}

Report check_gamma_chain(Engine &E, int n_max, const Tolerance &tol) {
  const int r = E.spec().rank;
  Report rep;
  for (int target = 1; target <= n_max; ++target) {
    double dev = 0.0;
    for (int m = 0; m < r; ++m)
      for (int a = 0; a < r * r; ++a)
        for (int b = 0; b < r * r; ++b) {
          const Word M = strand(m);
          const PairObject x = pair_object(a / r, a % r), y = pair_object(b / r, b % r);
          const Word mx = cat({&M, &x.u, &x.v}), yt = cat({&y.u, &y.v});
          Morphism left = E.compose(twist_gamma(E, M, x, yt), twist_gamma(E, mx, y));
          Morphism right = E.inverse(twist_gamma(E, M, tensor_pairs(x, y)));
          Morphism p = right_associator(E, 0, M, x, y);
          for (int k = 0; k < target; ++k) p = E.compose(left, E.compose(p, right));
          dev = std::max(dev, p.distance(right_associator(E, target, M, x, y)));
        }
    rep.add("associator.gamma_chain" + n_suffix(target), "psi^(n) = gamma-conjugate of psi^(0)", dev, tol.atol);
  }
  return rep;
}

Report check_double_braiding_identity(Engine &E, const Tolerance &tol) {
  const int r = E.spec().rank;
  double dev = 0.0;
  for (int m = 0; m < r; ++m)
    for (int u1 = 0; u1 < r; ++u1)
      for (int u2 = 0; u2 < r; ++u2)
        for (int u3 = 0; u3 < r; ++u3) {
          const Word M = strand(m), U1 = strand(u1), U2 = strand(u2), U3 = strand(u3);
          const Word w = cat({&M, &U1, &U2, &U3});
          const int a = len(M) + len(U1);
          Morphism lhs = E.compose(E.double_braiding_range(w, 0, a, len(U2), 1),
                                   E.double_braiding_range(w, 0, a + len(U2), len(U3), 1));
          Morphism rhs = E.compose(E.double_braiding_range(w, a, len(U2), len(U3), 1),
                                   E.double_braiding_range(w, 0, a, len(U2) + len(U3), 1));
          dev = std::max(dev, lhs.distance(rhs));
        }
  Report rep;
  rep.add("double_braiding.split_identity", "(D_{MU1,U2} (x) id) D_{MU1U2,U3} = (id (x) D_{U2,U3}) D_{MU1,U2U3}", dev,
          tol.atol);
  return rep;
}

Morphism bimodule_mixed_gamma(Engine &E, Side side, const Word &M, Label u, Label v) {
  const Word U = strand(u), V = strand(v);
  if (side == Side::Right) {
    return E.double_braiding_range(cat({&M, &U, &V}), 0, len(M), len(U), -1);
  }
  return E.double_braiding_range(cat({&U, &V, &M}), len(U), len(V), len(M), 1);
}

bool data_is_unitary(const Engine &E, double tol) {
  const CategorySpec &s = E.spec();
  const SymbolTables &T = E.tables();
  auto unitary = [tol](const Eigen::MatrixXcd &m) {
    if (m.size() == 0) return true;
    if (m.rows() != m.cols()) return false;
    return (m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
  };
  for (int a = 0; a < s.rank; ++a)
    for (int b = 0; b < s.rank; ++b)
      for (int c = 0; c < s.rank; ++c) {
        if (!unitary(T.r_matrix(a, b, c))) return false;
        for (int d = 0; d < s.rank; ++d) {
          const FBlock *blk = T.f_block(a, b, c, d);
          if (blk && !unitary(blk->F)) return false;
        }
      }
  return true;
}

}  // namespace mtc
