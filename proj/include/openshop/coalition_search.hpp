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

#ifndef OPENSHOP_COALITION_SEARCH_HPP_
#define OPENSHOP_COALITION_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "openshop/admissibility.hpp"
#include "openshop/shop.hpp"

namespace openshop {

inline constexpr std::int64_t kDefaultNodeLimit = 200'000'000;

struct SearchConfig {
  // Exclusive upper bound on start slots. Defaults to DefaultHorizon().
  std::optional<int> horizon;
  // Search nodes allowed per coalition (witness pass included). Unlimited
  // when empty.
  std::optional<std::int64_t> node_limit = kDefaultNodeLimit;
  // Also return the lexicographically smallest optimal start matrix.
  bool record_witness = false;
};

// makespan(s0) + n*m.
int DefaultHorizon(const Instance& inst);

struct CoalitionResult {
  int value = 0;     // c_T(s0) - min_cost
  int min_cost = 0;  // minimum coalition cost over admissible schedules
  std::optional<Schedule> witness;
  // False when the node budget ran out during the tie-break pass; the
  // witness is then optimal but not necessarily the smallest.
  bool witness_is_lexmin = false;
  std::int64_t nodes = 0;
};

// The node budget ran out. The best schedule found so far gives an upper
// bound on the minimum cost (hence a lower bound on the value).
class SearchLimitExceeded : public std::runtime_error {
 public:
  SearchLimitExceeded(int best_cost, int lower_bound, int initial_cost,
                      std::int64_t nodes);

  int best_cost() const { return best_cost_; }
  int cost_lower_bound() const { return lower_bound_; }
  int value_lower_bound() const { return initial_cost_ - best_cost_; }
  int value_upper_bound() const { return initial_cost_ - lower_bound_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  int best_cost_;
  int lower_bound_;
  int initial_cost_;
  std::int64_t nodes_;
};

// Exact minimum of c_T(s) over feasible integer schedules with starts below
// the horizon that are admissible for T under `regime`. The empty
// coalition has value 0. Throws SearchLimitExceeded when the node budget is
// exhausted and InvalidInput when the horizon is below makespan(s0).
//
// The search fixes one slot at a time, machine by machine. It only builds
// schedules in which no operation could move to an earlier slot on its own
// (pinned operations excepted); shifting such an operation never breaks a
// scheme condition, a deadline or a pin, and never raises the cost, so the
// restriction keeps an optimal and the lexicographically smallest optimal
// schedule.
CoalitionResult MinCoalitionCost(const Instance& inst, Coalition coalition,
                                 Regime regime, const SearchConfig& cfg = {});

// True iff the minimum coalition cost is the same at horizon H and H + m.
bool HorizonStabilityCheck(const Instance& inst, Coalition coalition,
                           Regime regime, int horizon);

}  // namespace openshop

#endif  // OPENSHOP_COALITION_SEARCH_HPP_
