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

#include "mtc/deligne.hpp"

namespace mtc {
namespace {

CategorySpec product2(const CategorySpec &A, const CategorySpec &B) {
  const int ra = A.rank, rb = B.rank;
  auto L = [rb](int a, int b) { return a * rb + b; };
  CategorySpec P;
  P.rank = ra * rb;
  P.dual.resize(P.rank);
  P.dims.resize(P.rank);
  P.theta.resize(P.rank);
  P.N.assign(static_cast<size_t>(P.rank) * P.rank * P.rank, 0);
  for (int a = 0; a < ra; ++a) {
    for (int b = 0; b < rb; ++b) {
      const int l = L(a, b);
      P.dual[l] = L(A.dual[a], B.dual[b]);
      P.dims[l] = A.dims[a] * B.dims[b];
      P.theta[l] = A.theta[a] * B.theta[b];
    }
  }
  for (int a1 = 0; a1 < ra; ++a1)
    for (int a2 = 0; a2 < ra; ++a2)
      for (int a3 = 0; a3 < ra; ++a3) {
        const int na = A.fusion(a1, a2, a3);
        if (!na) continue;
        for (int b1 = 0; b1 < rb; ++b1)
          for (int b2 = 0; b2 < rb; ++b2)
            for (int b3 = 0; b3 < rb; ++b3) {
              const int nb = B.fusion(b1, b2, b3);
              if (nb) P.fusion_ref(L(a1, b1), L(a2, b2), L(a3, b3)) = na * nb;
            }
      }
  for (const auto &[ka, va] : A.F) {
    for (const auto &[kb, vb] : B.F) {
      const auto &x = ka.v, &y = kb.v;
      FKey k;
      for (int t : {0, 1, 2, 3, 4, 7}) k.v[t] = L(x[t], y[t]);
      k.v[5] = x[5] * B.fusion(y[0], y[1], y[4]) + y[5];
      k.v[6] = x[6] * B.fusion(y[4], y[2], y[3]) + y[6];
      k.v[8] = x[8] * B.fusion(y[1], y[2], y[7]) + y[8];
      k.v[9] = x[9] * B.fusion(y[0], y[7], y[3]) + y[9];
      P.F[k] = va * vb;
    }
  }
  for (const auto &[ka, va] : A.R) {
    for (const auto &[kb, vb] : B.R) {
      const auto &x = ka.v, &y = kb.v;
      const int nb = B.fusion(y[0], y[1], y[2]);
      P.R[RKey{{L(x[0], y[0]), L(x[1], y[1]), L(x[2], y[2]), x[3] * nb + y[3], x[4] * nb + y[4]}}] = va * vb;
    }
  }
  return P;
}

}  // namespace

Label flatten_label(const std::vector<Label> &components, int base_rank) {
  Label l = 0;
  for (Label c : components) l = l * base_rank + c;
  return l;
}

std::vector<Label> split_label(Label label, int base_rank, int arity) {
  std::vector<Label> out(arity);
  for (int k = arity - 1; k >= 0; --k) {
    out[k] = label % base_rank;
    label /= base_rank;
  }
  return out;
}

CategorySpec deligne_power(const CategorySpec &spec, int n, int max_rank) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Deligne power needs n >= 1");
  if (n == 1) return spec;
  long long rank = 1;
  for (int k = 0; k < n; ++k) {
    rank *= spec.rank;
    if (rank > max_rank) {
      throw Error(ErrorCode::RankOverflow, "rank of " + spec.name + "^" + std::to_string(n) +
                                               " exceeds the bound " + std::to_string(max_rank));
    }
  }
  CategorySpec P = spec;
  for (int k = 1; k < n; ++k) P = product2(P, spec);
  P.product_of.assign(n, spec.name);
  P.name = spec.name;
  for (int k = 1; k < n; ++k) P.name += "⊠" + spec.name;
  P.labels.clear();
  for (Label l = 0; l < P.rank; ++l) {
    std::string s = "(";
    const auto comps = split_label(l, spec.rank, n);
    for (int k = 0; k < n; ++k) s += (k ? "," : "") + label_name(spec, comps[k]);
    P.labels.push_back(s + ")");
  }
  return P;
}

}  // namespace mtc
