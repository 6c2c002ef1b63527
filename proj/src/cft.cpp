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

#include "mtc/cft.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace mtc {
namespace {

long checked_power(int base, int exp, int max_dim) {
  long v = 1;
  for (int t = 0; t < exp; ++t) {
    v *= base;
    if (v > max_dim) {
      throw Error(ErrorCode::RankOverflow, std::to_string(base) + "^" + std::to_string(exp) +
                                               " exceeds the bound " + std::to_string(max_dim));
    }
  }
  return v;
}

std::vector<int> digits(long index, int base, int n) {
  std::vector<int> d(n);
  for (int t = n - 1; t >= 0; --t) {
    d[t] = static_cast<int>(index % base);
    index /= base;
  }
  return d;
}

long undigits(const std::vector<int> &d, int base) {
  long v = 0;
  for (int x : d) v = v * base + x;
  return v;
}

void require_permutation(const std::vector<int> &g) {
  std::vector<int> seen(g.size(), 0);
  for (int x : g) {
    if (x < 0 || x >= static_cast<int>(g.size()) || seen[x]++) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation: " + cycle_notation(g));
    }
  }
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd &M, int n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int t = 0; t < n; ++t) {
    Eigen::MatrixXcd next(out.rows() * M.rows(), out.cols() * M.cols());
    for (Eigen::Index a = 0; a < out.rows(); ++a)
      for (Eigen::Index b = 0; b < out.cols(); ++b) next.block(a * M.rows(), b * M.cols(), M.rows(), M.cols()) = out(a, b) * M;
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::string ModularInvariant::cycles() const { return cycle_notation(permutation); }

std::vector<std::array<int, 3>> ModularInvariant::triples() const {
  std::vector<std::array<int, 3>> out;
  for (Eigen::Index a = 0; a < Z.rows(); ++a)
    for (Eigen::Index b = 0; b < Z.cols(); ++b)
      if (Z(a, b)) out.push_back({static_cast<int>(a), static_cast<int>(b), Z(a, b)});
  return out;
}

std::vector<int> parse_cycles(const std::string &text, int N) {
  std::vector<int> g(N);
  std::iota(g.begin(), g.end(), 0);
  std::vector<int> cycle;
  bool open = false;
  std::string number;
  auto flush_number = [&] {
    if (number.empty()) return;
    const int v = std::stoi(number) - 1;
    if (v < 0 || v >= N) throw Error(ErrorCode::InvalidArgument, "cycle entry " + number + " outside 1.." + std::to_string(N));
    cycle.push_back(v);
    number.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!open) throw Error(ErrorCode::InvalidArgument, "cycle entries must sit inside parentheses");
      number += ch;
    } else if (ch == '(') {
      if (open) throw Error(ErrorCode::InvalidArgument, "nested parentheses in cycle notation");
      open = true;
    } else if (ch == ')') {
      if (!open) throw Error(ErrorCode::InvalidArgument, "unbalanced ')' in cycle notation");
      flush_number();
      std::vector<int> sorted(cycle);
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::InvalidArgument, "repeated entry in cycle '" + text + "'");
      }
      // Apply the cycle after the ones to its right.
      std::vector<int> c(N);
      std::iota(c.begin(), c.end(), 0);
      for (size_t t = 0; t < cycle.size(); ++t) c[cycle[t]] = cycle[(t + 1) % cycle.size()];
      std::vector<int> h(N);
      for (int t = 0; t < N; ++t) h[t] = g[c[t]];
      g = h;
      cycle.clear();
      open = false;
    } else if (ch == ' ' || ch == ',') {
      flush_number();
    } else {
      throw Error(ErrorCode::InvalidArgument, std::string("unexpected character '") + ch + "' in cycle notation");
    }
  }
  if (open) throw Error(ErrorCode::InvalidArgument, "unterminated cycle");
  require_permutation(g);
  return g;
}

std::string cycle_notation(const std::vector<int> &g) {
  std::vector<bool> done(g.size(), false);
  std::ostringstream os;
  for (size_t s = 0; s < g.size(); ++s) {
    if (done[s] || g[s] == static_cast<int>(s)) continue;
    os << '(';
    size_t t = s;
    bool first = true;
    while (!done[t]) {
      done[t] = true;
      os << (first ? "" : " ") << t + 1;
      first = false;
      t = static_cast<size_t>(g[t]);
    }
    os << ')';
  }
  const std::string out = os.str();
  return out.empty() ? "()" : out;
}

Eigen::MatrixXi permutation_matrix(int rank, const std::vector<int> &g) {
  require_permutation(g);
  const int n = static_cast<int>(g.size());
  const long dim = checked_power(rank, n, kMaxInvariantDim);
  Eigen::MatrixXi Z = Eigen::MatrixXi::Zero(dim, dim);
  for (long I = 0; I < dim; ++I) {
    const std::vector<int> d = digits(I, rank, n);
    std::vector<int> e(n);
    for (int t = 0; t < n; ++t) e[t] = d[g[t]];
    Z(I, undigits(e, rank)) = 1;
  }
  return Z;
}

std::vector<int> adjacent_transpositions(const std::vector<int> &g) {
  require_permutation(g);
  std::vector<int> a(g), out;
  for (size_t pass = 0; pass < a.size(); ++pass) {
    for (size_t t = 0; t + 1 < a.size(); ++t) {
      if (a[t] > a[t + 1]) {
        std::swap(a[t], a[t + 1]);
        out.push_back(static_cast<int>(t));
      }
    }
  }
  return out;
}

ModularInvariant transposition_Z(const CategorySpec &spec) {
  return permutation_Z_nfold(spec, {1, 0});
}

ModularInvariant permutation_Z_nfold(const CategorySpec &spec, const std::vector<int> &g, int max_dim) {
  require_permutation(g);
  const int n = static_cast<int>(g.size());
  const long dim = checked_power(spec.rank, n, max_dim);
  ModularInvariant out;
  out.arity = n;
  out.base_rank = spec.rank;
  out.permutation = g;
  out.non_modular_input = !modular_datum(spec).is_modular;
  out.Z = Eigen::MatrixXi::Identity(dim, dim);
  const std::vector<int> steps = adjacent_transpositions(g);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[*it], s[*it + 1]);
    out.Z = out.Z * permutation_matrix(spec.rank, s);
  }
  return out;
}

Report check_modular_invariance(const ModularInvariant &Z, const CategorySpec &spec, const Tolerance &tol) {
  const ModularDatum md = modular_datum(spec, tol);
  if (!md.is_modular) throw Error(ErrorCode::NotModular, "'" + spec.name + "' has a degenerate S-matrix");
  const Eigen::MatrixXcd S = kron_power(md.S, Z.arity), T = kron_power(md.T, Z.arity);
  const Eigen::MatrixXcd z = Z.Z.cast<cplx>();
  const std::string sfx = "." + Z.cycles();
  Report rep;
  rep.add("modular_invariant.S" + sfx, "Z commutes with S", (S.transpose() * z * S.conjugate() - z).cwiseAbs().maxCoeff(),
          tol.atol);
  rep.add("modular_invariant.T" + sfx, "Z commutes with T", (T * z - z * T).cwiseAbs().maxCoeff(), tol.atol);
  rep.add("modular_invariant.vacuum" + sfx, "Z_{vac,vac} = 1", std::abs(Z.Z(0, 0) - 1.0), 0.0);
  return rep;
}

int annulus_coefficients(const CategorySpec &s, Label i, Label j, Label k, Label l) {
  int sum = 0;
  for (Label m = 0; m < s.rank; ++m) sum += s.fusion(i, j, m) * s.fusion(m, k, l);
  return sum;
}

int fusion_count(const CategorySpec &s, const std::vector<Label> &word, Label l) {
  std::vector<int> v(s.rank, 0);
  v[0] = 1;
  for (Label x : word) {
    std::vector<int> next(s.rank, 0);
    for (Label a = 0; a < s.rank; ++a) {
      if (!v[a]) continue;
      for (Label b = 0; b < s.rank; ++b) next[b] += v[a] * s.fusion(a, x, b);
    }
    v = std::move(next);
  }
  return v[l];
}

std::vector<int> induced_module_decomposition(const CategorySpec &s, Label i, Label j) {
  std::vector<int> out(s.rank);
  for (Label k = 0; k < s.rank; ++k) out[k] = s.fusion(i, j, k);
  return out;
}

std::map<std::vector<Label>, int> multifold_end_multiplicities(const CategorySpec &s, int m, int max_dim) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "multifold order must be at least 1");
  const long dim = checked_power(s.rank, m, max_dim);
  std::map<std::vector<Label>, int> out;
  for (long I = 0; I < dim; ++I) {
    std::vector<Label> t = digits(I, s.rank, m);
    out[t] = fusion_count(s, t, 0);
  }
  return out;
}

}  // namespace mtc
