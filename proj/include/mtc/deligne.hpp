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

#include <vector>

#include "mtc/category.hpp"

namespace mtc {

constexpr int kDefaultMaxRank = 64;

// C^{⊠n} with componentwise data and braiding c × ... × c. Labels flatten
// row-major over components; multiplicity indices flatten the same way.
CategorySpec deligne_power(const CategorySpec &spec, int n, int max_rank = kDefaultMaxRank);

Label flatten_label(const std::vector<Label> &components, int base_rank);
std::vector<Label> split_label(Label label, int base_rank, int arity);

}  // namespace mtc
