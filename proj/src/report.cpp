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

#include "mtc/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mtc {

const char *status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
    case Status::XFail:
      return "xfail";
  }
  return "fail";
}

Status status_from_name(const std::string &s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skipped") return Status::Skipped;
  if (s == "xfail") return Status::XFail;
  throw std::invalid_argument("unknown status '" + s + "'");
}

Check &Report::add(const std::string &name, const std::string &tag, double deviation, double tol,
                   const std::string &message) {
  Check c;
  c.name = name;
  c.theorem_tag = tag;
  c.max_deviation = deviation;
  c.tolerance = tol;
  // NaN deviations must fail.
  c.status = (deviation <= tol) ? Status::Pass : Status::Fail;
  c.message = message;
  checks.push_back(std::move(c));
  return checks.back();
}

Check &Report::skip(const std::string &name, const std::string &tag, const std::string &reason) {
  Check c;
  c.name = name;
  c.theorem_tag = tag;
  c.status = Status::Skipped;
  c.message = reason;
  checks.push_back(std::move(c));
  return checks.back();
}

void Report::append(const Report &other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

Summary Report::summary() const {
  Summary s;
  for (const auto &c : checks) {
    switch (c.status) {
      case Status::Pass:
        ++s.passed;
        break;
      case Status::Fail:
        ++s.failed;
        break;
      case Status::Skipped:
        ++s.skipped;
        break;
      case Status::XFail:
        ++s.xfailed;
        break;
    }
  }
  return s;
}

double Report::max_deviation() const {
  double m = 0.0;
  for (const auto &c : checks) {
    if (c.status == Status::Pass || c.status == Status::Fail) m = std::max(m, c.max_deviation);
  }
  return m;
}

const Check *Report::find(const std::string &name) const {
  for (const auto &c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const Check *Report::first_failure() const {
  for (const auto &c : checks) {
    if (c.status == Status::Fail) return &c;
  }
  return nullptr;
}

}  // namespace mtc
