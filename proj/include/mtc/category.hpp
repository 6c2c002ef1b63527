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

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "mtc/report.hpp"

namespace mtc {

using cplx = std::complex<double>;
using Label = int;

enum class ErrorCode {
  Ok = 0,
  Parse,
  MissingSection,
  InvalidData,
  UnknownBuiltin,
  NotModular,
  SnapFailure,
  RelationFailure,
  ShapeMismatch,
  PositionOutOfRange,
  TraceOnNonEndomorphism,
  RankOverflow,
  WrongLevels,
  XiNotZeroOne,
  NotPremodular,
  InvalidArgument,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Tolerance {
  double atol = 1e-9;
  double integer_snap = 1e-6;

  // Defaults, with atol taken from MTC_TOL when set.
  static Tolerance from_env();
  bool valid() const { return atol > 0 && atol < integer_snap && integer_snap < 1; }
};

// Sparse F key: Hom(a⊗b⊗c, d), left channel (e; alpha, beta), right
// channel (f; gamma, delta). Multiplicity indices are 0-based.
struct FKey {
  std::array<int, 10> v;
  auto operator<=>(const FKey &) const = default;
};

// Sparse R key: channel c of a⊗b, multiplicity alpha -> beta.
struct RKey {
  std::array<int, 5> v;
  auto operator<=>(const RKey &) const = default;
};

struct CategorySpec {
  std::string name;
  int rank = 0;
  std::vector<Label> dual;
  std::vector<int> N;  // N[(i*rank + j)*rank + k]
  std::vector<double> dims;
  std::vector<cplx> theta;
  std::map<FKey, cplx> F;
  std::map<RKey, cplx> R;
  // Component names for Deligne powers; empty for a base category.
  std::vector<std::string> product_of;
  // Optional display names; "0".."rank-1" when empty.
  std::vector<std::string> labels;

  int fusion(Label i, Label j, Label k) const { return N[(i * rank + j) * rank + k]; }
  int &fusion_ref(Label i, Label j, Label k) { return N[(i * rank + j) * rank + k]; }
  bool multiplicity_free() const;
  double global_dim() const;

  bool operator==(const CategorySpec &) const = default;
};

using SpecPtr = std::shared_ptr<const CategorySpec>;

// Dense F block for Hom(a⊗b⊗c, d). Rows enumerate the left basis
// ((ab)_e c)_d, columns the right basis (a(bc)_f)_d. A left splitting tree
// expands as sum_R F(L,R) times the right tree.
struct FBlock {
  std::vector<std::array<int, 3>> left, right;  // (e, alpha, beta), (f, gamma, delta)
  std::vector<int> left_offset, right_offset;   // per e (resp. f), -1 if absent
  Eigen::MatrixXcd F, Finv;

  int left_index(int e, int alpha, int beta, int n_ec_d) const {
    return left_offset[e] < 0 ? -1 : left_offset[e] + alpha * n_ec_d + beta;
  }
  int right_index(int f, int gamma, int delta, int n_af_d) const {
    return right_offset[f] < 0 ? -1 : right_offset[f] + gamma * n_af_d + delta;
  }
};

// Dense lookup tables built once per spec.
class SymbolTables {
 public:
  explicit SymbolTables(const CategorySpec &spec);

  const CategorySpec &spec() const { return spec_; }
  // nullptr when Hom(a⊗b⊗c, d) = 0.
  const FBlock *f_block(Label a, Label b, Label c, Label d) const;
  // N_ab^c square matrix R(alpha, beta); empty when N_ab^c = 0.
  const Eigen::MatrixXcd &r_matrix(Label a, Label b, Label c) const;
  cplx f_entry(const FKey &key) const;

 private:
  const CategorySpec &spec_;
  std::unordered_map<long long, FBlock> f_;
  std::vector<Eigen::MatrixXcd> r_;
  Eigen::MatrixXcd empty_;
};

struct ModularDatum {
  Eigen::MatrixXcd S;
  Eigen::MatrixXcd T;
  Eigen::MatrixXd C;
  double global_dim = 1.0;
  bool is_modular = false;
  double min_singular_value = 0.0;
};

struct VerlindeResult {
  std::vector<int> N;
  double max_snap_distance = 0.0;
};

struct ModularGroupResult {
  cplx gamma;
  Report report;
};

// File schema (JSON). Does not run coherence checks.
CategorySpec load_category_spec(const std::string &text);
CategorySpec load_category_file(const std::string &path);
std::string serialize_category_spec(const CategorySpec &spec);

std::vector<std::string> builtin_names();
// Accepts the names above plus z_n(k) for integers n >= 1, k.
CategorySpec builtin_category(const std::string &name);

Report validate_category(const CategorySpec &spec, const Tolerance &tol);
ModularDatum modular_datum(const CategorySpec &spec, const Tolerance &tol = {});
VerlindeResult verlinde_fusion(const ModularDatum &md, const Tolerance &tol = {});
ModularGroupResult modular_group_relations(const ModularDatum &md,
                                           const Tolerance &tol = {});

// Label lookup by index or by the names used in builtins ("tau", "τ", "sigma").
Label parse_label(const CategorySpec &spec, const std::string &text);
std::string label_name(const CategorySpec &spec, Label i);

}  // namespace mtc
