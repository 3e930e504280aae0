// Copyright 2026 The openshop-games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPENSHOP_WORKED_EXAMPLES_HPP_
#define OPENSHOP_WORKED_EXAMPLES_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "openshop/coalition_search.hpp"
#include "openshop/shop.hpp"

namespace openshop {

// A reference instance together with its expected schedules.
struct WorkedExample {
  std::string id;  // ex1 .. ex6, ex7_nonbalanced
  Instance instance;
  std::map<std::string, Schedule> schedules;

  const Schedule& schedule(const std::string& name) const;
};

std::vector<std::string> ExampleIds();

// Throws InvalidInput for an unknown id.
WorkedExample LoadExample(std::string_view id);

struct ExampleAssertion {
  enum class Status { kPass, kFail, kLowerBoundOnly };

  std::string example;
  std::string name;
  std::string expected;
  std::string actual;
  Status status = Status::kFail;
};

struct ExampleReport {
  std::vector<ExampleAssertion> assertions;

  bool all_passed() const;
  bool any_failed() const;
  bool any_lower_bound_only() const;
};

const char* StatusName(ExampleAssertion::Status s);

// Runs every fixture, or only `filter` when given.
ExampleReport RunExamples(std::optional<std::string_view> filter = std::nullopt,
                          const SearchConfig& cfg = {});

}  // namespace openshop

#endif  // OPENSHOP_WORKED_EXAMPLES_HPP_
