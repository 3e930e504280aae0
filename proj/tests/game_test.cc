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

#include <random>

#include "doctest.h"
#include "openshop/exact_lp.hpp"
#include "openshop/game.hpp"
#include "openshop/generate.hpp"
#include "openshop/worked_examples.hpp"
#include "oracles.hpp"

using namespace openshop;

namespace {

TUGame RandomGame(int n, std::mt19937_64& rng, int hi) {
  std::uniform_int_distribution<int> d(0, hi);
  std::vector<int> v(std::size_t{1} << n);
  for (std::size_t s = 1; s < v.size(); ++s) v[s] = d(rng);
  return TUGame::FromValues(n, v);
}

}  // namespace

TEST_CASE("exact simplex on small programs") {
  using R = Rational;
  // max x + y  s.t.  x + 2y + s1 = 4,  3x + y + s2 = 6
  const LpSolution lp = MaximizeStandardForm({{1, 2, 1, 0}, {3, 1, 0, 1}}, {4, 6}, {1, 1, 0, 0});
  REQUIRE(lp.status == LpSolution::Status::kOptimal);
  CHECK(lp.objective == R(14, 5));
  CHECK(lp.primal[0] == R(8, 5));
  CHECK(lp.primal[1] == R(6, 5));
  CHECK(lp.dual[0] * 4 + lp.dual[1] * 6 == lp.objective);

  // x - y = 1 with max x is unbounded.
  CHECK(MaximizeStandardForm({{1, -1}}, {1}, {1, 0}).status == LpSolution::Status::kUnbounded);
  // x + y = -1 has no nonnegative solution.
  CHECK(MaximizeStandardForm({{1, 1}}, {-1}, {0, 0}).status == LpSolution::Status::kInfeasible);
  // Redundant equality rows.
  const LpSolution red = MaximizeStandardForm({{1, 1}, {2, 2}}, {1, 2}, {1, 2});
  REQUIRE(red.status == LpSolution::Status::kOptimal);
  CHECK(red.objective == 2);
}

TEST_CASE("core nonemptiness matches the three-player conditions") {
  std::mt19937_64 rng(1);
  int empty = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const TUGame g = RandomGame(3, rng, 6);
    const std::vector<long> v(g.values.begin(), g.values.end());
    const CoreAnalysis core = CoreNonempty(g);
    REQUIRE(core.nonempty == oracle::CoreNonempty3(v));
    if (core.nonempty) {
      REQUIRE(IsCoreMember(g, *core.point).member);
    } else {
      ++empty;
    }
  }
  CHECK(empty > 0);
}

TEST_CASE("core points and certificates are valid on larger games") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 2;
    TUGame g = RandomGame(n, rng, 5);
    // Lift v(N) half the time so both outcomes appear.
    if (trial % 3 == 0) g.values.back() += 4 * n;
    const CoreAnalysis core = CoreNonempty(g);
    if (core.nonempty) {
      REQUIRE(IsCoreMember(g, *core.point).member);
      continue;
    }
    // Balancing weights: each player covered exactly once, total above v(N).
    std::vector<Rational> cover(n, Rational(0));
    Rational total = 0;
    for (const auto& [s, w] : core.balancing_weights) {
      REQUIRE(w > 0);
      for (int i : s.members()) cover[i] += w;
      total += w * g.value(s);
    }
    for (const auto& c : cover) REQUIRE(c == 1);
    REQUIRE(total == core.min_total);
    REQUIRE(total > g.value(Coalition::Grand(n)));
  }
}

TEST_CASE("single-player and two-player cores") {
  const TUGame one = TUGame::FromValues(1, {0, 3});
  CHECK(CoreNonempty(one).nonempty);
  CHECK(IsCoreMember(one, Allocation{{Rational(3)}}).member);
  const TUGame two = TUGame::FromValues(2, {0, 2, 2, 3});
  CHECK_FALSE(CoreNonempty(two).nonempty);
  const TUGame two_ok = TUGame::FromValues(2, {0, 1, 1, 3});
  CHECK(CoreNonempty(two_ok).nonempty);
}

TEST_CASE("core membership reports efficiency failures and blocking coalitions") {
  const TUGame g = TUGame::FromValues(2, {0, 1, 1, 3});
  const CoreCheck inefficient = IsCoreMember(g, Allocation{{Rational(1), Rational(1)}});
  CHECK_FALSE(inefficient.efficient);
  CHECK_FALSE(inefficient.member);
  const CoreCheck blocked = IsCoreMember(g, Allocation{{Rational(3), Rational(0)}});
  CHECK(blocked.efficient);
  REQUIRE(blocked.violated.has_value());
  CHECK(*blocked.violated == Coalition::Singleton(1));
  CHECK_THROWS_AS(IsCoreMember(g, Allocation{{Rational(3)}}), InvalidInput);
}

TEST_CASE("superadditivity and convexity agree with direct definitions") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const TUGame g = RandomGame(n, rng, trial % 2 ? 3 : 12);
    const Coalition::Mask full = Coalition::Grand(n).bits();
    bool super = true;
    bool convex = true;
    for (Coalition::Mask s = 0; s <= full; ++s) {
      for (Coalition::Mask t = 0; t <= full; ++t) {
        const int vs = g.values[s], vt = g.values[t];
        if ((s & t) == 0 && g.values[s | t] < vs + vt) super = false;
        if (g.values[s | t] + g.values[s & t] < vs + vt) convex = false;
      }
    }
    const SuperadditivityCheck sc = CheckSuperadditive(g);
    REQUIRE(sc.holds == super);
    if (!super) {
      const auto [a, b] = *sc.witness;
      REQUIRE((a.bits() & b.bits()) == 0);
      REQUIRE(g.value(Coalition(a.bits() | b.bits())) < g.value(a) + g.value(b));
    }
    const ConvexityCheck cc = CheckConvex(g);
    REQUIRE(cc.holds == convex);
    if (!convex) {
      const auto& w = *cc.witness;
      const Coalition::Mask bit = Coalition::Mask{1} << w.player;
      REQUIRE((w.smaller.bits() & ~w.larger.bits()) == 0);
      REQUIRE((w.larger.bits() & bit) == 0);
      REQUIRE(g.values[w.smaller.bits() | bit] - g.values[w.smaller.bits()] >
              g.values[w.larger.bits() | bit] - g.values[w.larger.bits()]);
    }
  }
}

TEST_CASE("allocations on the four-job example") {
  const WorkedExample ex = LoadExample("ex6");
  const Allocation mu1 = MuJ(ex.instance, 0);
  CHECK(mu1.x == std::vector<Rational>{1, 2, -1, 0});
  const Allocation mu2 = MuJ(ex.instance, 1);
  CHECK(mu2.x == std::vector<Rational>{-1, 0, 1, 2});
  const Allocation bar = MuBar(ex.instance);
  CHECK(bar.x == std::vector<Rational>{0, 1, 0, 1});
  const TUGame g = BuildGame(ex.instance, kAS4, SearchConfig{});
  CHECK(g.values.size() == 16);
  CHECK(g.complete());
  CHECK(bar.total(Coalition::Grand(4)) == g.value(Coalition::Grand(4)));
  const CoreCheck c1 = IsCoreMember(g, mu1);
  CHECK_FALSE(c1.member);
  CHECK(c1.violated == Coalition::Singleton(2));
  CHECK(IsCoreMember(g, bar).member);
}

TEST_CASE("machine-based allocations are efficient") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = GenerateInstance(4, 3, seed);
    const int vn = MinCoalitionCost(inst, Coalition::Grand(4), kAS4).value;
    for (int j = 0; j < 3; ++j) REQUIRE(MuJ(inst, j).total(Coalition::Grand(4)) == vn);
    REQUIRE(MuBar(inst).total(Coalition::Grand(4)) == vn);
  }
}

TEST_CASE("threaded and sequential game builds agree") {
  const Instance inst = GenerateInstance(5, 2, 9);
  GameBuildOptions one;
  one.threads = 1;
  GameBuildOptions four;
  four.threads = 4;
  SearchConfig cfg;
  cfg.record_witness = true;
  const TUGame a = BuildGame(inst, kAS3, cfg, one);
  const TUGame b = BuildGame(inst, kAS3, cfg, four);
  CHECK(a.values == b.values);
  CHECK(a.witnesses == b.witnesses);
}

TEST_CASE("non-balanced three-player game") {
  const WorkedExample ex = LoadExample("ex7_nonbalanced");
  const TUGame g = BuildGame(ex.instance, kBar2, SearchConfig{});
  CHECK(g.value(Coalition::Singleton(1)) == 3);
  CHECK(g.value(Coalition::Singleton(2)) == 1);
  CHECK(g.value(Coalition::Grand(3)) == 3);
  const CoreAnalysis core = CoreNonempty(g);
  CHECK_FALSE(core.nonempty);
  CHECK_FALSE(core.balancing_weights.empty());
}

TEST_CASE("oversized games are rejected") {
  const Instance inst = GenerateInstance(17, 2, 0);
  CHECK_THROWS_AS(BuildGame(inst, kAS4, SearchConfig{}), InvalidInput);
}
