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

#ifndef OPENSHOP_ADMISSIBILITY_HPP_
#define OPENSHOP_ADMISSIBILITY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "openshop/shop.hpp"

// Which rearrangements a coalition may adopt. A regime pairs a condition on
// the outsiders' places in the scheme with a condition on their times; a
// schedule is admissible when both hold for every job outside the coalition.

namespace openshop {

enum class SchemeCondition {
  kPredecessorSet,  // outsiders keep their predecessor set on every machine
  kPosition,        // outsiders keep their rank on every machine
  kNone,
};

enum class TimeCondition {
  kNone,
  kStartEqual,     // outsider starts unchanged
  kStartLeq,       // outsider starts not later
  kCompletionLeq,  // outsider completion times not later
};

struct Regime {
  SchemeCondition scheme = SchemeCondition::kPredecessorSet;
  TimeCondition time = TimeCondition::kNone;

  // CLI/JSON name: as1..as4, as2p..as4p, bar2..bar4. The two unnamed
  // combinations print as "pos0" and "free".
  std::string name() const;
  // False only for pos0 and free.
  bool is_named() const;

  friend bool operator==(const Regime&, const Regime&) = default;
};

// Throws InvalidInput on an unknown name.
Regime ParseRegime(std::string_view name);
// as1, as2, as3, as4, as2p, as3p, as4p, bar2, bar3, bar4.
std::vector<Regime> NamedRegimes();
// All 12 scheme x time combinations.
std::vector<Regime> AllRegimes();

inline constexpr Regime kAS1{SchemeCondition::kPredecessorSet, TimeCondition::kNone};
inline constexpr Regime kAS2{SchemeCondition::kPredecessorSet, TimeCondition::kStartEqual};
inline constexpr Regime kAS3{SchemeCondition::kPredecessorSet, TimeCondition::kStartLeq};
inline constexpr Regime kAS4{SchemeCondition::kPredecessorSet, TimeCondition::kCompletionLeq};
inline constexpr Regime kAS2p{SchemeCondition::kPosition, TimeCondition::kStartEqual};
inline constexpr Regime kAS3p{SchemeCondition::kPosition, TimeCondition::kStartLeq};
inline constexpr Regime kAS4p{SchemeCondition::kPosition, TimeCondition::kCompletionLeq};
inline constexpr Regime kBar2{SchemeCondition::kNone, TimeCondition::kStartEqual};
inline constexpr Regime kBar3{SchemeCondition::kNone, TimeCondition::kStartLeq};
inline constexpr Regime kBar4{SchemeCondition::kNone, TimeCondition::kCompletionLeq};

// Both schedules must be feasible and of the same shape.
bool SatisfiesSchemeCondition(const Schedule& s, const Schedule& s0,
                              Coalition coalition, SchemeCondition cond);
bool SatisfiesTimeCondition(const Schedule& s, const Schedule& s0,
                            Coalition coalition, TimeCondition cond);

// For the grand coalition every feasible schedule is admissible. An
// infeasible or mis-shaped `s` is not admissible.
bool IsAdmissible(const Schedule& s, const Instance& inst, Coalition coalition,
                  Regime regime);

// Diagnostic for rearrangements that need outsiders to act: the first
// outsider operation (job, machine) that starts later than initially.
std::optional<std::pair<int, int>> DelayedOutsiderOperation(
    const Schedule& s, const Schedule& s0, Coalition coalition);

}  // namespace openshop

#endif  // OPENSHOP_ADMISSIBILITY_HPP_
