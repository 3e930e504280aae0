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

#ifndef OPENSHOP_GANTT_HPP_
#define OPENSHOP_GANTT_HPP_

#include <string>
#include <string_view>

#include "openshop/shop.hpp"

namespace openshop {

// Slot table, one row per machine and one column per slot:
//
//   m1 | 1 | 4 | 3 | 2 | 5 |   |   | 6 |
//   m2 | 2 | 1 | 4 | 3 | 6 | 5 |   |   |
//
// Cells hold 1-based job numbers, blank when the machine idles.
std::string RenderGantt(const Schedule& s);

// Inverse of RenderGantt. Throws InvalidInput on malformed tables or when
// some job does not appear exactly once per machine.
Schedule ParseGantt(std::string_view text);

}  // namespace openshop

#endif  // OPENSHOP_GANTT_HPP_
