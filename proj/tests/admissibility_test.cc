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

#include "doctest.h"
#include "openshop/admissibility.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace openshop;

namespace {

Schedule S(std::vector<std::vector<int>> rows) { return Schedule::FromRows(rows); }

}  // namespace

TEST_CASE("regime names round-trip") {
  CHECK(NamedRegimes().size() == 10);
  CHECK(AllRegimes().size() == 12);
  for (Regime r : AllRegimes()) CHECK(ParseRegime(r.name()) == r);
  CHECK(ParseRegime("as4") == kAS4);
  CHECK(ParseRegime("as3p") == kAS3p);
  CHECK(ParseRegime("bar2") == kBar2);
  CHECK(kAS1.is_named());
  CHECK_FALSE(ParseRegime("free").is_named());
  CHECK_THROWS_AS(ParseRegime("as5"), InvalidInput);
}

TEST_CASE("admissibility agrees with the brute-force checker") {
  const auto space = oracle::AllFeasible(2, 2, 5);
  for (std::size_t a = 0; a < space.size(); a += 5) {
    const Instance inst(Schedule::FromRows(space[a]));
    for (const auto& rows : space) {
      const Schedule s = Schedule::FromRows(rows);
      for (Coalition::Mask mask = 0; mask < 4; ++mask) {
        for (Regime r : AllRegimes()) {
          REQUIRE(IsAdmissible(s, inst, Coalition(mask), r) ==
                  oracle::Admissible(rows, space[a], mask, testutil::ToRule(r)));
        }
      }
    }
  }
}

TEST_CASE("three-job admissibility agrees with the brute-force checker") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 4000; ++trial) {
    const Schedule s0 = testutil::RandomFeasible(3, 2, 6, rng);
    const Schedule s = testutil::RandomFeasible(3, 2, 6, rng);
    const Instance inst(s0);
    for (Coalition::Mask mask = 0; mask < 8; ++mask) {
      for (Regime r : AllRegimes()) {
        REQUIRE(IsAdmissible(s, inst, Coalition(mask), r) ==
                oracle::Admissible(s.rows(), s0.rows(), mask, testutil::ToRule(r)));
      }
    }
  }
}

TEST_CASE("first worked schedule: coalition {3,5}") {
  const Instance inst(S({{0, 1}, {1, 4}, {3, 2}, {4, 3}, {5, 0}}));
  const Schedule hat = S({{0, 1}, {1, 5}, {2, 3}, {3, 4}, {4, 0}});
  const Coalition t = Coalition::Of({2, 4});
  CHECK(IsAdmissible(hat, inst, t, kAS1));
  CHECK_FALSE(SatisfiesTimeCondition(hat, inst.s0(), t, TimeCondition::kCompletionLeq));
  CHECK_FALSE(IsAdmissible(hat, inst, t, kAS4));
}

TEST_CASE("outsider delayed on machine 1 under completion-time rule") {
  const Instance inst(S({{0, 1}, {1, 4}, {2, 3}}));
  const Schedule hat = S({{0, 1}, {1, 3}, {3, 2}});
  const Coalition t = Coalition::Singleton(1);
  CHECK(IsAdmissible(hat, inst, t, kAS4));
  CHECK_FALSE(IsAdmissible(hat, inst, t, kAS3));
  const auto delayed = DelayedOutsiderOperation(hat, inst.s0(), t);
  REQUIRE(delayed.has_value());
  CHECK(*delayed == std::pair{2, 0});
}

TEST_CASE("position-free regimes accept reordered outsiders") {
  const Instance inst(S({{0, 1}, {1, 4}, {2, 3}}));
  const Schedule hat = S({{0, 1}, {1, 0}, {2, 3}});
  const Coalition t = Coalition::Singleton(1);
  CHECK_FALSE(IsAdmissible(hat, inst, t, kAS2p));
  CHECK(IsAdmissible(hat, inst, t, kBar2));
}

TEST_CASE("the grand coalition may adopt any feasible schedule") {
  const Instance inst(S({{0, 2}, {1, 3}, {2, 0}, {3, 1}}));
  const Schedule any = S({{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  for (Regime r : AllRegimes()) CHECK(IsAdmissible(any, inst, Coalition::Grand(4), r));
  CHECK_FALSE(IsAdmissible(S({{0, 1}, {0, 2}, {2, 3}, {3, 0}}), inst, Coalition::Grand(4), kAS4));
}

TEST_CASE("shape mismatch is not admissible") {
  const Instance inst(S({{0, 1}, {1, 0}}));
  CHECK_FALSE(IsAdmissible(S({{0, 1, 2}, {1, 2, 0}}), inst, Coalition::Singleton(0), kAS1));
}
