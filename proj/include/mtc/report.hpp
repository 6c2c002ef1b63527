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

#include <string>
#include <vector>

namespace mtc {

enum class Status { Pass, Fail, Skipped, XFail };

const char *status_name(Status s);
Status status_from_name(const std::string &s);

struct Check {
  std::string name;
  std::string theorem_tag;
  Status status = Status::Pass;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  double wall_time = 0.0;
  std::string message;

  bool operator==(const Check &) const = default;
};

struct Summary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int xfailed = 0;
};

class Report {
 public:
  std::vector<Check> checks;

  // Status is pass iff deviation <= tol.
  Check &add(const std::string &name, const std::string &tag, double deviation, double tol,
             const std::string &message = {});
  Check &skip(const std::string &name, const std::string &tag, const std::string &reason);
  void append(const Report &other);

  Summary summary() const;
  bool ok() const { return summary().failed == 0; }
  double max_deviation() const;
  const Check *find(const std::string &name) const;
  const Check *first_failure() const;

  bool operator==(const Report &) const = default;
};

}  // namespace mtc
