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

#include "openshop/admissibility.hpp"

#include <array>

namespace openshop {

namespace {

struct NamedRegime {
  std::string_view name;
  Regime regime;
};

constexpr std::array<NamedRegime, 12> kRegimeNames{{
    {"as1", kAS1},
    {"as2", kAS2},
    {"as3", kAS3},
    {"as4", kAS4},
    {"as2p", kAS2p},
    {"as3p", kAS3p},
    {"as4p", kAS4p},
    {"bar2", kBar2},
    {"bar3", kBar3},
    {"bar4", kBar4},
    {"pos0", {SchemeCondition::kPosition, TimeCondition::kNone}},
    {"free", {SchemeCondition::kNone, TimeCondition::kNone}},
}};

constexpr std::size_t kNumNamed = 10;

void CheckShapes(const Schedule& s, const Schedule& s0) {
  if (s.num_jobs() != s0.num_jobs() || s.num_machines() != s0.num_machines()) {
    throw InvalidInput("schedules differ in shape");
  }
}

}  // namespace

std::string Regime::name() const {
  for (const auto& entry : kRegimeNames) {
    if (entry.regime == *this) return std::string(entry.name);
  }
  return "?";
}

bool Regime::is_named() const {
  for (std::size_t k = 0; k < kNumNamed; ++k) {
    if (kRegimeNames[k].regime == *this) return true;
  }
  return false;
}

Regime ParseRegime(std::string_view name) {
  for (const auto& entry : kRegimeNames) {
    if (entry.name == name) return entry.regime;
  }
  throw InvalidInput("unknown regime '" + std::string(name) + "'");
}

std::vector<Regime> NamedRegimes() {
  std::vector<Regime> out;
  for (std::size_t k = 0; k < kNumNamed; ++k) out.push_back(kRegimeNames[k].regime);
  return out;
}

std::vector<Regime> AllRegimes() {
  std::vector<Regime> out;
  for (const auto& entry : kRegimeNames) out.push_back(entry.regime);
  return out;
}

bool SatisfiesSchemeCondition(const Schedule& s, const Schedule& s0,
                              Coalition coalition, SchemeCondition cond) {
  CheckShapes(s, s0);
  if (cond == SchemeCondition::kNone) return true;
  const Scheme now = SchemeOf(s);
  const Scheme before = SchemeOf(s0);
  const int n = s.num_jobs();
  for (int i = 0; i < n; ++i) {
    if (coalition.contains(i)) continue;
    for (int j = 0; j < s.num_machines(); ++j) {
      const bool same =
          cond == SchemeCondition::kPosition
              ? now.position[j][i] == before.position[j][i]
              : now.predecessors(i, j) == before.predecessors(i, j);
      if (!same) return false;
    }
  }
  return true;
}

bool SatisfiesTimeCondition(const Schedule& s, const Schedule& s0,
                            Coalition coalition, TimeCondition cond) {
  CheckShapes(s, s0);
  for (int i = 0; i < s.num_jobs(); ++i) {
    if (coalition.contains(i)) continue;
    switch (cond) {
      case TimeCondition::kNone:
        return true;
      case TimeCondition::kCompletionLeq:
        if (CompletionTime(s, i) > CompletionTime(s0, i)) return false;
        break;
      case TimeCondition::kStartEqual:
      case TimeCondition::kStartLeq:
        for (int j = 0; j < s.num_machines(); ++j) {
          const int now = s.start(i, j);
          const int before = s0.start(i, j);
          if (cond == TimeCondition::kStartEqual ? now != before : now > before) {
            return false;
          }
        }
        break;
    }
  }
  return true;
}

bool IsAdmissible(const Schedule& s, const Instance& inst, Coalition coalition,
                  Regime regime) {
  if (s.num_jobs() != inst.n() || s.num_machines() != inst.m()) return false;
  if (!IsFeasible(s)) return false;
  if (coalition.is_grand(inst.n())) return true;
  return SatisfiesSchemeCondition(s, inst.s0(), coalition, regime.scheme) &&
         SatisfiesTimeCondition(s, inst.s0(), coalition, regime.time);
}

std::optional<std::pair<int, int>> DelayedOutsiderOperation(
    const Schedule& s, const Schedule& s0, Coalition coalition) {
  CheckShapes(s, s0);
  for (int i = 0; i < s.num_jobs(); ++i) {
    if (coalition.contains(i)) continue;
    for (int j = 0; j < s.num_machines(); ++j) {
      if (s.start(i, j) > s0.start(i, j)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace openshop
