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

#include <cstdlib>
#include <string>

#include "mtc/category.hpp"

namespace mtc {

const char *error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Ok:
      return "Ok";
    case ErrorCode::Parse:
      return "ParseError";
    case ErrorCode::MissingSection:
      return "MissingSection";
    case ErrorCode::InvalidData:
      return "InvalidData";
    case ErrorCode::UnknownBuiltin:
      return "UnknownBuiltin";
    case ErrorCode::NotModular:
      return "NotModular";
    case ErrorCode::SnapFailure:
      return "SnapFailure";
    case ErrorCode::RelationFailure:
      return "RelationFailure";
    case ErrorCode::ShapeMismatch:
      return "ShapeMismatch";
    case ErrorCode::PositionOutOfRange:
      return "PositionOutOfRange";
    case ErrorCode::TraceOnNonEndomorphism:
      return "TraceOnNonEndomorphism";
    case ErrorCode::RankOverflow:
      return "RankOverflow";
    case ErrorCode::WrongLevels:
      return "WrongLevels";
    case ErrorCode::XiNotZeroOne:
      return "XiNotZeroOne";
    case ErrorCode::NotPremodular:
      return "NotPremodular";
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

Tolerance Tolerance::from_env() {
  Tolerance t;
  if (const char *env = std::getenv("MTC_TOL")) {
    char *end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) {
      throw Error(ErrorCode::InvalidArgument, std::string("MTC_TOL is not a positive number: ") + env);
    }
    t.atol = v;
  }
  return t;
}

bool CategorySpec::multiplicity_free() const {
  for (int n : N) {
    if (n > 1) return false;
  }
  return true;
}

double CategorySpec::global_dim() const {
  double s = 0.0;
  for (double d : dims) s += d * d;
  return s;
}

SymbolTables::SymbolTables(const CategorySpec &spec) : spec_(spec) {
  const int r = spec.rank;
  auto key = [r](int a, int b, int c, int d) {
    return ((static_cast<long long>(a) * r + b) * r + c) * r + d;
  };
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      for (int c = 0; c < r; ++c) {
        for (int d = 0; d < r; ++d) {
          FBlock blk;
          blk.left_offset.assign(r, -1);
          blk.right_offset.assign(r, -1);
          for (int e = 0; e < r; ++e) {
            const int n1 = spec.fusion(a, b, e), n2 = spec.fusion(e, c, d);
            if (n1 == 0 || n2 == 0) continue;
            blk.left_offset[e] = static_cast<int>(blk.left.size());
            for (int al = 0; al < n1; ++al) {
              for (int be = 0; be < n2; ++be) blk.left.push_back({e, al, be});
            }
          }
          if (blk.left.empty()) continue;
          for (int f = 0; f < r; ++f) {
            const int n1 = spec.fusion(b, c, f), n2 = spec.fusion(a, f, d);
            if (n1 == 0 || n2 == 0) continue;
            blk.right_offset[f] = static_cast<int>(blk.right.size());
            for (int ga = 0; ga < n1; ++ga) {
              for (int de = 0; de < n2; ++de) blk.right.push_back({f, ga, de});
            }
          }
          const auto nl = static_cast<Eigen::Index>(blk.left.size());
          const auto nr = static_cast<Eigen::Index>(blk.right.size());
          blk.F = Eigen::MatrixXcd::Zero(nl, nr);
          f_.emplace(key(a, b, c, d), std::move(blk));
        }
      }
    }
  }
  for (const auto &[k, val] : spec.F) {
    const auto &v = k.v;
    auto it = f_.find(key(v[0], v[1], v[2], v[3]));
    if (it == f_.end()) continue;
    FBlock &blk = it->second;
    const int li = blk.left_index(v[4], v[5], v[6], spec.fusion(v[4], v[2], v[3]));
    const int ri = blk.right_index(v[7], v[8], v[9], spec.fusion(v[0], v[7], v[3]));
    if (li < 0 || ri < 0) continue;
    blk.F(li, ri) = val;
  }
  for (auto &[k, blk] : f_) {
    if (blk.F.rows() == blk.F.cols()) {
      blk.Finv = blk.F.fullPivLu().inverse();
    } else {
      // Non-square blocks only arise for inconsistent fusion data.
      blk.Finv = blk.F.completeOrthogonalDecomposition().pseudoInverse();
    }
  }
  r_.resize(static_cast<size_t>(r) * r * r);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      for (int c = 0; c < r; ++c) {
        const int n = spec.fusion(a, b, c);
        r_[(a * r + b) * r + c] = Eigen::MatrixXcd::Zero(n, n);
      }
    }
  }
  for (const auto &[k, val] : spec.R) {
    const auto &v = k.v;
    auto &m = r_[(v[0] * r + v[1]) * r + v[2]];
    if (v[3] < m.rows() && v[4] < m.cols()) m(v[3], v[4]) = val;
  }
}

const FBlock *SymbolTables::f_block(Label a, Label b, Label c, Label d) const {
  const int r = spec_.rank;
  auto it = f_.find(((static_cast<long long>(a) * r + b) * r + c) * r + d);
  return it == f_.end() ? nullptr : &it->second;
}

const Eigen::MatrixXcd &SymbolTables::r_matrix(Label a, Label b, Label c) const {
  const int r = spec_.rank;
  return r_[(a * r + b) * r + c];
}

cplx SymbolTables::f_entry(const FKey &key) const {
  const auto &v = key.v;
  const FBlock *blk = f_block(v[0], v[1], v[2], v[3]);
  if (!blk) return 0.0;
  const int li = blk->left_index(v[4], v[5], v[6], spec_.fusion(v[4], v[2], v[3]));
  const int ri = blk->right_index(v[7], v[8], v[9], spec_.fusion(v[0], v[7], v[3]));
  if (li < 0 || ri < 0) return 0.0;
  return blk->F(li, ri);
}

Label parse_label(const CategorySpec &spec, const std::string &text) {
  for (int i = 0; i < static_cast<int>(spec.labels.size()); ++i) {
    if (spec.labels[i] == text) return i;
  }
  // Greek aliases for builtin names.
  static const std::pair<const char *, const char *> aliases[] = {
      {"τ", "tau"}, {"σ", "sigma"}, {"ψ", "psi"}, {"𝟙", "id"}};
  for (const auto &[greek, ascii] : aliases) {
    if (text == greek) {
      for (int i = 0; i < static_cast<int>(spec.labels.size()); ++i) {
        if (spec.labels[i] == ascii) return i;
      }
    }
  }
  char *end = nullptr;
  long v = std::strtol(text.c_str(), &end, 10);
  if (!text.empty() && *end == '\0' && v >= 0 && v < spec.rank) return static_cast<Label>(v);
  throw Error(ErrorCode::InvalidArgument,
              "unknown label '" + text + "' for category '" + spec.name + "'");
}

std::string label_name(const CategorySpec &spec, Label i) {
  if (i >= 0 && i < static_cast<int>(spec.labels.size())) return spec.labels[i];
  return std::to_string(i);
}

}  // namespace mtc
