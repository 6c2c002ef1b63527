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

#include <algorithm>
#include <cmath>

#include "mtc/category.hpp"

namespace mtc {
namespace {

using Eigen::MatrixXcd;

// Channels z with N_xy^z > 0, per (x, y).
std::vector<std::vector<int>> channel_lists(const CategorySpec &s) {
  const int r = s.rank;
  std::vector<std::vector<int>> out(static_cast<size_t>(r) * r);
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int z = 0; z < r; ++z)
        if (s.fusion(x, y, z)) out[x * r + y].push_back(z);
  return out;
}

double exact_fusion_axioms(const CategorySpec &s, Report &rep) {
  const int r = s.rank;
  int unit = 0, duality = 0, assoc = 0, dual = 0;
  for (int i = 0; i < r; ++i) {
    if (s.dual[s.dual[i]] != i) ++dual;
    for (int k = 0; k < r; ++k) {
      if (s.fusion(0, i, k) != (i == k ? 1 : 0)) ++unit;
      if (s.fusion(i, 0, k) != (i == k ? 1 : 0)) ++unit;
      if (s.fusion(i, k, 0) != (k == s.dual[i] ? 1 : 0)) ++duality;
    }
  }
  if (s.dual[0] != 0) ++dual;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          long lhs = 0, rhs = 0;
          for (int m = 0; m < r; ++m) {
            lhs += static_cast<long>(s.fusion(i, j, m)) * s.fusion(m, k, l);
            rhs += static_cast<long>(s.fusion(j, k, m)) * s.fusion(i, m, l);
          }
          if (lhs != rhs) ++assoc;
        }
  rep.add("fusion.unit", "unit object fuses trivially", unit, 0.0,
          unit ? std::to_string(unit) + " violating entries" : "");
  rep.add("fusion.duality", "N_ij^0 = delta(j, dual i)", duality, 0.0,
          duality ? std::to_string(duality) + " violating entries" : "");
  rep.add("fusion.associativity", "fusion ring associativity", assoc, 0.0,
          assoc ? std::to_string(assoc) + " violating quadruples" : "");
  rep.add("fusion.dual_involution", "dual is an involution fixing the unit", dual, 0.0);
  return 0.0;
}

double pentagon_deviation(const CategorySpec &s, const SymbolTables &t) {
  const int r = s.rank;
  const auto ch = channel_lists(s);
  auto F = [&](int a, int b, int c, int d, int e, int al, int be, int f, int ga, int de) -> cplx {
    const FBlock *blk = t.f_block(a, b, c, d);
    if (!blk) return 0.0;
    const int li = blk->left_index(e, al, be, s.fusion(e, c, d));
    const int ri = blk->right_index(f, ga, de, s.fusion(a, f, d));
    return (li < 0 || ri < 0) ? cplx(0.0) : blk->F(li, ri);
  };
  double dev = 0.0;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d)
          for (int f : ch[a * r + b])
            for (int g : ch[f * r + c])
              for (int e : ch[g * r + d])
                for (int l : ch[c * r + d])
                  for (int k : ch[b * r + l]) {
                    if (!s.fusion(a, k, e)) continue;
                    const int n1 = s.fusion(a, b, f), n2 = s.fusion(f, c, g), n3 = s.fusion(g, d, e);
                    const int m1 = s.fusion(c, d, l), m2 = s.fusion(b, l, k), m3 = s.fusion(a, k, e);
                    for (int u1 = 0; u1 < n1; ++u1)
                      for (int u2 = 0; u2 < n2; ++u2)
                        for (int u3 = 0; u3 < n3; ++u3)
                          for (int v1 = 0; v1 < m1; ++v1)
                            for (int v2 = 0; v2 < m2; ++v2)
                              for (int v3 = 0; v3 < m3; ++v3) {
                                cplx p1 = 0.0;
                                for (int lam = 0; lam < s.fusion(f, l, e); ++lam) {
                                  p1 += F(f, c, d, e, g, u2, u3, l, v1, lam) *
                                        F(a, b, l, e, f, u1, lam, k, v2, v3);
                                }
                                cplx p2 = 0.0;
                                for (int h : ch[b * r + c]) {
                                  if (!s.fusion(a, h, g) || !s.fusion(h, d, k)) continue;
                                  for (int k1 = 0; k1 < s.fusion(b, c, h); ++k1)
                                    for (int k2 = 0; k2 < s.fusion(a, h, g); ++k2)
                                      for (int rho = 0; rho < s.fusion(h, d, k); ++rho) {
                                        p2 += F(a, b, c, g, f, u1, u2, h, k1, k2) *
                                              F(a, h, d, e, g, k2, u3, k, rho, v3) *
                                              F(b, c, d, k, h, k1, rho, l, v1, v2);
                                      }
                                }
                                dev = std::max(dev, std::abs(p1 - p2));
                              }
                  }
  return dev;
}

// Row-vector convention: coefficients transform by right multiplication.
// `vertex_map` moves a basis of Hom(x⊗y⊗z, d) to another one by acting with
// an R-matrix on the (first or outer) vertex.
struct HexagonTools {
  const CategorySpec &s;
  const SymbolTables &t;

  // Left basis (x,y,z;d) -> left basis (y,x,z;d): R^{xy}_e on the first vertex.
  MatrixXcd first_vertex(int x, int y, int z, int d) const {
    const FBlock *src = t.f_block(x, y, z, d);
    const FBlock *dst = t.f_block(y, x, z, d);
    MatrixXcd m = MatrixXcd::Zero(src->left.size(), dst->left.size());
    for (size_t i = 0; i < src->left.size(); ++i) {
      const auto [e, al, be] = src->left[i];
      const auto &R = t.r_matrix(x, y, e);
      for (int al2 = 0; al2 < R.cols(); ++al2) {
        const int j = dst->left_index(e, al2, be, s.fusion(e, z, d));
        m(i, j) += R(al, al2);
      }
    }
    return m;
  }
  // Right basis (x,y,z;d) -> right basis (x,z,y;d): R^{yz}_f on the inner vertex.
  MatrixXcd inner_vertex(int x, int y, int z, int d) const {
    const FBlock *src = t.f_block(x, y, z, d);
    const FBlock *dst = t.f_block(x, z, y, d);
    MatrixXcd m = MatrixXcd::Zero(src->right.size(), dst->right.size());
    for (size_t i = 0; i < src->right.size(); ++i) {
      const auto [f, ga, de] = src->right[i];
      const auto &R = t.r_matrix(y, z, f);
      for (int ga2 = 0; ga2 < R.cols(); ++ga2) {
        const int j = dst->right_index(f, ga2, de, s.fusion(x, f, d));
        m(i, j) += R(ga, ga2);
      }
    }
    return m;
  }
};

std::pair<double, double> hexagon_deviation(const CategorySpec &s, const SymbolTables &t) {
  const int r = s.rank;
  HexagonTools h{s, t};
  double d1 = 0.0, d2 = 0.0;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) {
          const FBlock *abc = t.f_block(a, b, c, d);
          if (!abc) continue;
          if (!t.f_block(b, c, a, d) || !t.f_block(b, a, c, d) || !t.f_block(c, a, b, d) ||
              !t.f_block(a, c, b, d)) {
            // Non-commutative fusion cannot carry a braiding.
            return {INFINITY, INFINITY};
          }
          // c_{a, b⊗c} = (id_b ⊗ c_{a,c}) ∘ (c_{a,b} ⊗ id_c)
          {
            const FBlock *bca = t.f_block(b, c, a, d);
            MatrixXcd outer = MatrixXcd::Zero(abc->right.size(), bca->left.size());
            for (size_t i = 0; i < abc->right.size(); ++i) {
              const auto [g, ga, de] = abc->right[i];
              const auto &R = t.r_matrix(a, g, d);
              for (int de2 = 0; de2 < R.cols(); ++de2) {
                outer(i, bca->left_index(g, ga, de2, s.fusion(g, a, d))) += R(de, de2);
              }
            }
            const MatrixXcd lhs = abc->F * outer;
            const MatrixXcd rhs = h.first_vertex(a, b, c, d) * t.f_block(b, a, c, d)->F *
                                  h.inner_vertex(b, a, c, d) * bca->Finv;
            d1 = std::max(d1, (lhs - rhs).cwiseAbs().maxCoeff());
          }
          // c_{a⊗b, c} = (c_{a,c} ⊗ id_b) ∘ (id_a ⊗ c_{b,c})
          {
            const FBlock *cab = t.f_block(c, a, b, d);
            MatrixXcd outer = MatrixXcd::Zero(abc->left.size(), cab->right.size());
            for (size_t i = 0; i < abc->left.size(); ++i) {
              const auto [e, al, be] = abc->left[i];
              const auto &R = t.r_matrix(e, c, d);
              for (int be2 = 0; be2 < R.cols(); ++be2) {
                outer(i, cab->right_index(e, al, be2, s.fusion(c, e, d))) += R(be, be2);
              }
            }
            const MatrixXcd lhs = outer * cab->Finv;
            const MatrixXcd rhs = abc->F * h.inner_vertex(a, b, c, d) *
                                  t.f_block(a, c, b, d)->Finv * h.first_vertex(a, c, b, d);
            d2 = std::max(d2, (lhs - rhs).cwiseAbs().maxCoeff());
          }
        }
  return {d1, d2};
}

}  // namespace

Report validate_category(const CategorySpec &s, const Tolerance &tol) {
  Report rep;
  exact_fusion_axioms(s, rep);
  if (!rep.ok()) {
    // The remaining checks index F and R through the fusion rules.
    rep.skip("pentagon", "pentagon equation for F", "fusion ring invalid");
    return rep;
  }
  const SymbolTables t(s);
  const int r = s.rank;

  double dev = 0.0;
  for (int i = 0; i < r; ++i) {
    dev = std::max(dev, std::abs(std::abs(s.theta[i]) - 1.0));
    dev = std::max(dev, std::abs(s.dims[i] - s.dims[s.dual[i]]));
  }
  dev = std::max(dev, std::abs(s.theta[0] - 1.0));
  dev = std::max(dev, std::abs(s.dims[0] - 1.0));
  bool zero_dim = false;
  for (double d : s.dims) zero_dim = zero_dim || d == 0.0;
  rep.add("ribbon.data", "|theta| = 1, theta_0 = 1, d_0 = 1, d real nonzero and dual-invariant",
          zero_dim ? INFINITY : dev, tol.atol);

  rep.add("pentagon", "pentagon equation for F", pentagon_deviation(s, t), tol.atol);
  const auto [h1, h2] = hexagon_deviation(s, t);
  rep.add("hexagon.forward", "hexagon for c_{a,b⊗c}", h1, tol.atol);
  rep.add("hexagon.reverse", "hexagon for c_{a⊗b,c}", h2, tol.atol);

  double rib = 0.0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        if (!s.fusion(i, j, k)) continue;
        const MatrixXcd dbl = t.r_matrix(i, j, k) * t.r_matrix(j, i, k);
        const cplx want = s.theta[k] / (s.theta[i] * s.theta[j]);
        const MatrixXcd diff = dbl - want * MatrixXcd::Identity(dbl.rows(), dbl.cols());
        rib = std::max(rib, diff.cwiseAbs().maxCoeff());
      }
  rep.add("ribbon", "double braiding on channel k equals theta_k/(theta_i theta_j)", rib, tol.atol);

  double hom = 0.0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      double sum = 0.0;
      for (int k = 0; k < r; ++k) sum += s.fusion(i, j, k) * s.dims[k];
      hom = std::max(hom, std::abs(s.dims[i] * s.dims[j] - sum));
    }
  rep.add("dims.homomorphism", "d_i d_j = sum_k N_ij^k d_k", hom, tol.atol);

  double fd = 0.0;
  for (int i = 0; i < r; ++i) {
    const cplx f00 = t.f_entry(FKey{{i, s.dual[i], i, i, 0, 0, 0, 0, 0, 0}});
    fd = std::max(fd, std::abs(std::abs(s.dims[i] * f00) - 1.0));
  }
  rep.add("dims.f_consistency", "|d_i F^{i i* i}_i[0,0]| = 1", fd, tol.atol);
  return rep;
}

}  // namespace mtc
