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

#include "openshop/game.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "openshop/optimal.hpp"

namespace openshop {

bool TUGame::complete() const {
  return std::all_of(exact.begin(), exact.end(), [](bool b) { return b; });
}

TUGame TUGame::FromValues(int n, std::vector<int> values, Regime regime) {
  if (n < 1 || n > 24) throw InvalidInput("game size out of range");
  if (values.size() != (std::size_t{1} << n)) {
    throw InvalidInput("game needs 2^n values");
  }
  if (values[0] != 0) throw InvalidInput("v(empty) must be 0");
  TUGame g;
  g.n = n;
  g.regime = regime;
  g.values = std::move(values);
  g.exact.assign(g.values.size(), true);
  return g;
}

TUGame BuildGame(const Instance& inst, Regime regime, const SearchConfig& cfg,
                 const GameBuildOptions& options) {
  const int n = inst.n();
  if (n > options.max_players) {
    throw InvalidInput("game over " + std::to_string(n) +
                       " players exceeds the limit of " +
                       std::to_string(options.max_players));
  }
  const std::size_t count = std::size_t{1} << n;
  TUGame game;
  game.n = n;
  game.regime = regime;
  game.values.assign(count, 0);
  game.exact.assign(count, true);
  if (cfg.record_witness) game.witnesses.assign(count, std::nullopt);

  std::atomic<std::size_t> next{1};
  std::mutex error_mu;
  std::exception_ptr error;
  auto worker = [&]() {
    for (std::size_t mask = next++; mask < count; mask = next++) {
      try {
        const CoalitionResult r = MinCoalitionCost(
            inst, Coalition(static_cast<Coalition::Mask>(mask)), regime, cfg);
        game.values[mask] = r.value;
        if (cfg.record_witness) game.witnesses[mask] = r.witness;
      } catch (const SearchLimitExceeded& e) {
        game.values[mask] = e.value_lower_bound();
        game.exact[mask] = false;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return game;
}

Rational Allocation::total(Coalition c) const {
  Rational sum = 0;
  for (int i : c.members()) sum += x[i];
  return sum;
}

Allocation MuJ(const Instance& inst, int machine) {
  const Schedule base = JBasedOptimal(inst, machine);
  Allocation a;
  for (int i = 0; i < inst.n(); ++i) {
    a.x.emplace_back(CompletionTime(inst.s0(), i) - CompletionTime(base, i));
  }
  return a;
}

Allocation MuBar(const Instance& inst) {
  Allocation a;
  a.x.assign(inst.n(), Rational(0));
  for (int j = 0; j < inst.m(); ++j) {
    const Allocation mu = MuJ(inst, j);
    for (int i = 0; i < inst.n(); ++i) a.x[i] += mu.x[i];
  }
  for (auto& v : a.x) {
    v /= inst.m();
    v.canonicalize();
  }
  return a;
}

CoreCheck IsCoreMember(const TUGame& game, const Allocation& x) {
  if (static_cast<int>(x.x.size()) != game.n) {
    throw InvalidInput("allocation has " + std::to_string(x.x.size()) +
                       " entries for a " + std::to_string(game.n) +
                       "-player game");
  }
  CoreCheck out;
  const Coalition grand = Coalition::Grand(game.n);
  out.efficient = x.total(grand) == game.value(grand);
  if (!out.efficient) return out;
  for (Coalition::Mask mask = 1; mask < grand.bits(); ++mask) {
    const Coalition s(mask);
    if (x.total(s) < game.value(s)) {
      out.violated = s;
      return out;
    }
  }
  out.member = true;
  return out;
}

CoreAnalysis CoreNonempty(const TUGame& game) {
  const int n = game.n;
  const Coalition grand = Coalition::Grand(n);
  CoreAnalysis out;
  if (n == 1) {
    out.nonempty = true;
    out.min_total = game.value(grand);
    out.point = Allocation{{Rational(game.value(grand))}};
    return out;
  }
  // Dual of min x(N) s.t. x(S) >= v(S): maximize sum w_S v(S) over
  // balancing weights, sum_{S contains i} w_S = 1, w >= 0.
  const Coalition::Mask proper = grand.bits();
  std::vector<Coalition::Mask> columns;
  for (Coalition::Mask mask = 1; mask < proper; ++mask) columns.push_back(mask);
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(columns.size()));
  std::vector<Rational> c(columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      if ((columns[k] >> i) & 1U) a[i][k] = 1;
    }
    c[k] = game.value(Coalition(columns[k]));
  }
  const std::vector<Rational> b(n, Rational(1));
  const LpSolution lp = MaximizeStandardForm(a, b, c);
  if (lp.status != LpSolution::Status::kOptimal) {
    throw std::logic_error("balancing LP is always feasible and bounded");
  }
  out.min_total = lp.objective;
  const Rational grand_value = game.value(grand);
  out.nonempty = lp.objective <= grand_value;
  if (out.nonempty) {
    Allocation x{lp.dual};
    x.x[0] += grand_value - lp.objective;
    out.point = std::move(x);
  } else {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (lp.primal[k] != 0) {
        out.balancing_weights.emplace_back(Coalition(columns[k]), lp.primal[k]);
      }
    }
  }
  return out;
}

SuperadditivityCheck CheckSuperadditive(const TUGame& game) {
  const Coalition::Mask full = Coalition::Grand(game.n).bits();
  SuperadditivityCheck out;
  for (Coalition::Mask s = 1; s <= full; ++s) {
    const Coalition::Mask rest = full & ~s;
    // Enumerate nonempty T inside the complement of S, with S < T to skip
    // mirrored pairs.
    for (Coalition::Mask t = rest; t != 0; t = (t - 1) & rest) {
      if (t < s) continue;
      if (game.values[s | t] < game.values[s] + game.values[t]) {
        out.holds = false;
        out.witness = std::make_pair(Coalition(s), Coalition(t));
        return out;
      }
    }
  }
  return out;
}

ConvexityCheck CheckConvex(const TUGame& game) {
  const Coalition::Mask full = Coalition::Grand(game.n).bits();
  ConvexityCheck out;
  for (int i = 0; i < game.n; ++i) {
    const Coalition::Mask bit = Coalition::Mask{1} << i;
    const Coalition::Mask others = full & ~bit;
    // T ranges over subsets of N \ {i}, S over subsets of T.
    for (Coalition::Mask t = others;; t = (t - 1) & others) {
      const int gain_t = game.values[t | bit] - game.values[t];
      for (Coalition::Mask s = t;; s = (s - 1) & t) {
        const int gain_s = game.values[s | bit] - game.values[s];
        if (gain_s > gain_t) {
          out.holds = false;
          out.witness = ConvexityCheck::Witness{Coalition(s), Coalition(t), i};
          return out;
        }
        if (s == 0) break;
      }
      if (t == 0) break;
    }
  }
  return out;
}

}  // namespace openshop
