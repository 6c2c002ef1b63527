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

#include <cmath>

#include <Eigen/SVD>

#include "mtc/category.hpp"

namespace mtc {

using Eigen::MatrixXcd;

ModularDatum modular_datum(const CategorySpec &s, const Tolerance &tol) {
  const int r = s.rank;
  ModularDatum md;
  md.global_dim = s.global_dim();
  const double s00 = 1.0 / std::sqrt(md.global_dim);
  md.S = MatrixXcd::Zero(r, r);
  md.T = MatrixXcd::Zero(r, r);
  md.C = Eigen::MatrixXd::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    md.T(i, i) = s.theta[i];
    md.C(i, s.dual[i]) = 1.0;
    for (int j = 0; j < r; ++j) {
      cplx sum = 0.0;
      for (int k = 0; k < r; ++k) {
        const int n = s.fusion(i, j, k);
        if (n) sum += static_cast<double>(n) * s.theta[k] / (s.theta[i] * s.theta[j]) * s.dims[k];
      }
      md.S(i, j) = s00 * sum;
    }
  }
  Eigen::JacobiSVD<MatrixXcd> svd(md.S);
  md.min_singular_value = svd.singularValues().minCoeff();
  md.is_modular = md.min_singular_value > tol.atol;
  return md;
}

VerlindeResult verlinde_fusion(const ModularDatum &md, const Tolerance &tol) {
  if (!md.is_modular) throw Error(ErrorCode::NotModular, "Verlinde formula needs an invertible S");
  const int r = static_cast<int>(md.S.rows());
  VerlindeResult out;
  out.N.assign(static_cast<size_t>(r) * r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        cplx v = 0.0;
        for (int l = 0; l < r; ++l) v += md.S(i, l) * md.S(j, l) * std::conj(md.S(k, l)) / md.S(0, l);
        const double snapped = std::round(v.real());
        const double dist = std::abs(v - cplx(snapped, 0.0));
        out.max_snap_distance = std::max(out.max_snap_distance, dist);
        if (dist > tol.integer_snap || snapped < 0) {
          throw Error(ErrorCode::SnapFailure, "Verlinde entry (" + std::to_string(i) + "," +
                                                  std::to_string(j) + "," + std::to_string(k) +
                                                  ") is not a non-negative integer, distance " +
                                                  std::to_string(dist));
        }
        out.N[(i * r + j) * r + k] = static_cast<int>(snapped);
      }
  return out;
}

namespace {

std::pair<double, std::string> worst_entry(const MatrixXcd &diff) {
  Eigen::Index wi = 0, wj = 0;
  const double d = diff.cwiseAbs().maxCoeff(&wi, &wj);
  return {d, "worst entry (" + std::to_string(wi) + "," + std::to_string(wj) + ")"};
}

}  // namespace

ModularGroupResult modular_group_relations(const ModularDatum &md, const Tolerance &tol) {
  if (!md.is_modular) throw Error(ErrorCode::NotModular, "SL(2,Z) relations need an invertible S");
  const MatrixXcd &S = md.S;
  const MatrixXcd &t = md.T;
  const MatrixXcd ti = t.inverse();
  const MatrixXcd C = md.C.cast<cplx>();
  const MatrixXcd lhs1 = S * t * S;
  const MatrixXcd rhs1 = ti * S * ti * C;
  ModularGroupResult out;
  out.gamma = lhs1(0, 0) / rhs1(0, 0);
  const auto [d1, w1] = worst_entry(lhs1 - out.gamma * rhs1);
  const auto [d2, w2] = worst_entry(S * ti * S - (1.0 / out.gamma) * t * S * t);
  out.report.add("sl2z.sts", "S t S = gamma t^-1 S t^-1 C", d1, tol.atol, w1);
  out.report.add("sl2z.st_inv_s", "S t^-1 S = gamma^-1 t S t", d2, tol.atol, w2);
  out.report.add("sl2z.gamma_unimodular", "|gamma| = 1", std::abs(std::abs(out.gamma) - 1.0), tol.atol);
  return out;
}

}  // namespace mtc
