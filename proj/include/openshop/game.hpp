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

#ifndef OPENSHOP_GAME_HPP_
#define OPENSHOP_GAME_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "openshop/admissibility.hpp"
#include "openshop/coalition_search.hpp"
#include "openshop/exact_lp.hpp"
#include "openshop/shop.hpp"

namespace openshop {

// Transferable-utility game over n players, indexed by coalition bitmask.
struct TUGame {
  int n = 0;
  Regime regime;
  std::vector<int> values;  // values[mask]; values[0] == 0
  // False where the search budget ran out; values[mask] is then the best
  // lower bound found.
  std::vector<bool> exact;
  // Optimal admissible schedules, filled when witnesses were requested.
  std::vector<std::optional<Schedule>> witnesses;

  int value(Coalition c) const { return values[c.bits()]; }
  bool complete() const;
  // Game from explicit values; `values` must have 2^n entries.
  static TUGame FromValues(int n, std::vector<int> values, Regime regime = {});
};

struct GameBuildOptions {
  int max_players = 16;
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Coalition values for every T subset of N. Throws InvalidInput when n
// exceeds `max_players`.
TUGame BuildGame(const Instance& inst, Regime regime, const SearchConfig& cfg,
                 const GameBuildOptions& options = {});

struct Allocation {
  std::vector<Rational> x;

  Rational total(Coalition c) const;
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

// x_i = C_i(s0) - C_i(s_N^j) with s_N^j = JBasedOptimal(inst, j).
Allocation MuJ(const Instance& inst, int machine);
// Average of MuJ over all machines.
Allocation MuBar(const Instance& inst);

struct CoreCheck {
  bool member = false;
  bool efficient = false;
  // A coalition S with x(S) < v(S), when efficiency holds.
  std::optional<Coalition> violated;
};

CoreCheck IsCoreMember(const TUGame& game, const Allocation& x);

struct CoreAnalysis {
  bool nonempty = false;
  // min x(N) subject to x(S) >= v(S) for every proper nonempty S.
  Rational min_total;
  std::optional<Allocation> point;
  // Balanced collection with sum w_S v(S) = min_total > v(N) when empty.
  std::vector<std::pair<Coalition, Rational>> balancing_weights;
};

// Decided by exact LP: the core is nonempty iff min x(N) <= v(N).
CoreAnalysis CoreNonempty(const TUGame& game);

struct SuperadditivityCheck {
  bool holds = true;
  std::optional<std::pair<Coalition, Coalition>> witness;  // disjoint S, T
};

struct ConvexityCheck {
  struct Witness {
    Coalition smaller;  // S, subset of `larger`
    Coalition larger;   // T, not containing `player`
    int player = 0;
  };
  bool holds = true;
  std::optional<Witness> witness;
};

SuperadditivityCheck CheckSuperadditive(const TUGame& game);
// v(S u {i}) - v(S) <= v(T u {i}) - v(T) for S subset T, i not in T.
ConvexityCheck CheckConvex(const TUGame& game);

}  // namespace openshop

#endif  // OPENSHOP_GAME_HPP_
