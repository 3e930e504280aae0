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

#ifndef OPENSHOP_IO_HPP_
#define OPENSHOP_IO_HPP_

#include <string>

#include "json.hpp"
#include "openshop/game.hpp"
#include "openshop/shop.hpp"

// JSON formats. Row i of a start matrix lists job i+1's start slots on
// machines 1..m.
//
//   instance:   {"n": 2, "m": 2, "s0": [[0, 1], [1, 2]]}
//   schedule:   {"n": 2, "m": 2, "schedule": [[0, 1], [1, 2]]}
//   game:       {"n": 3, "regime": "bar2",
//                "values": {"": 0, "1": 0, "2": 3, "1,2": 3, ...}}
//   allocation: {"x": ["0", "1/2", "-1"]}
//
// Malformed input throws InvalidInput.

namespace openshop {

using Json = nlohmann::json;

Json InstanceToJson(const Instance& inst);
Instance InstanceFromJson(const Json& j);

Json ScheduleToJson(const Schedule& s);
Schedule ScheduleFromJson(const Json& j);

Json GameToJson(const TUGame& game);
TUGame GameFromJson(const Json& j);

Json AllocationToJson(const Allocation& a);
Allocation AllocationFromJson(const Json& j);

std::string RationalToString(const Rational& q);
Rational RationalFromString(const std::string& text);

Json ReadJsonFile(const std::string& path);

}  // namespace openshop

#endif  // OPENSHOP_IO_HPP_
