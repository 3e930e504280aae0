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
#include <string>

#include "doctest.h"
#include "openshop/coalition_search.hpp"
#include "openshop/generate.hpp"
#include "openshop/worked_examples.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace openshop;

namespace {

std::string RowsText(const Schedule& s) {
  std::string out;
  for (const auto& row : s.rows()) {
    out += "[";
    for (int v : row) out += std::to_string(v) + " ";
    out += "]";
  }
  return out;
}

// Compares every coalition and regime against exhaustive enumeration.
void CheckAgainstOracle(const Schedule& s0, const std::vector<oracle::Rows>& space,
                        int horizon, bool witnesses) {
  const Instance inst(s0);
  const auto best = oracle::SolveAll(s0.rows(), space);
  SearchConfig cfg;
  cfg.horizon = horizon;
  cfg.record_witness = witnesses;
  const Coalition::Mask full = Coalition::Grand(inst.n()).bits();
  for (Regime r : AllRegimes()) {
    const int k = testutil::RuleIndex(r);
    for (Coalition::Mask mask = 1; mask <= full; ++mask) {
      const CoalitionResult got = MinCoalitionCost(inst, Coalition(mask), r, cfg);
      INFO("s0 = " << RowsText(s0) << ", regime " << r.name() << ", mask " << mask);
      REQUIRE(got.min_cost == best[k][mask].min_cost);
      REQUIRE(got.value == oracle::Cost(s0.rows(), mask) - best[k][mask].min_cost);
      if (witnesses) {
        REQUIRE(got.witness.has_value());
        REQUIRE(got.witness_is_lexmin);
        REQUIRE(got.witness->rows() == best[k][mask].lexmin);
      }
    }
  }
}

}  // namespace

TEST_CASE("search equals enumeration on every 2 x 2 instance") {
  constexpr int kHorizon = 6;
  const auto space = oracle::AllFeasible(2, 2, kHorizon);
  for (const auto& rows : space) {
    CheckAgainstOracle(Schedule::FromRows(rows), space, kHorizon, true);
  }
}

TEST_CASE("search equals enumeration on sampled 3 x 2 instances") {
  constexpr int kHorizon = 7;
  const auto space = oracle::AllFeasible(3, 2, kHorizon);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    CheckAgainstOracle(testutil::RandomFeasible(3, 2, 5, rng), space, kHorizon, trial % 2 == 0);
  }
}

TEST_CASE("search equals enumeration on sampled four-job and three-machine instances") {
  std::mt19937_64 rng(17);
  const auto space42 = oracle::AllFeasible(4, 2, 6);
  for (int trial = 0; trial < 4; ++trial) {
    CheckAgainstOracle(testutil::RandomFeasible(4, 2, 5, rng), space42, 6, false);
  }
  const auto space33 = oracle::AllFeasible(3, 3, 5);
  for (int trial = 0; trial < 4; ++trial) {
    CheckAgainstOracle(testutil::RandomFeasible(3, 3, 4, rng), space33, 5, false);
  }
}

TEST_CASE("worked coalition values") {
  const WorkedExample ex3 = LoadExample("ex3");
  SearchConfig cfg;
  cfg.record_witness = true;
  const CoalitionResult r = MinCoalitionCost(ex3.instance, Coalition::Of({2, 4}), kAS1, cfg);
  CHECK(r.value == 1);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == ex3.schedule("witness_3_5"));

  const WorkedExample ex4 = LoadExample("ex4");
  const CoalitionResult r4 = MinCoalitionCost(ex4.instance, Coalition::Singleton(1), kAS4, cfg);
  CHECK(r4.value == 1);
  CHECK(*r4.witness == ex4.schedule("witness_2"));

  const WorkedExample ex7 = LoadExample("ex7_nonbalanced");
  CHECK(MinCoalitionCost(ex7.instance, Coalition::Singleton(1), kBar2).value == 3);
  CHECK(MinCoalitionCost(ex7.instance, Coalition::Singleton(2), kBar2).value == 1);
  CHECK(MinCoalitionCost(ex7.instance, Coalition::Grand(3), kBar2).value == 3);
}

TEST_CASE("values do not change when the horizon grows") {
  const WorkedExample ex4 = LoadExample("ex4");
  CHECK(HorizonStabilityCheck(ex4.instance, Coalition::Singleton(1), kAS4, 5));
  const WorkedExample ex7 = LoadExample("ex7_nonbalanced");
  CHECK(HorizonStabilityCheck(ex7.instance, Coalition::Singleton(2), kBar2, 5));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = GenerateInstance(4, 2, seed);
    const int h = DefaultHorizon(inst);
    for (Regime r : NamedRegimes()) {
      REQUIRE(HorizonStabilityCheck(inst, Coalition::Of({0, 2}), r, h));
    }
  }
}

TEST_CASE("grand coalition reaches the closed-form optimum") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = GenerateInstance(5, 3, seed);
    const CoalitionResult r = MinCoalitionCost(inst, Coalition::Grand(5), kAS4);
    int expected = 0;
    for (int k = 1; k <= 5; ++k) expected += 3 * ((k + 2) / 3);
    REQUIRE(r.min_cost == expected);
  }
}

TEST_CASE("empty coalition and bad horizons") {
  const WorkedExample ex4 = LoadExample("ex4");
  CHECK(MinCoalitionCost(ex4.instance, Coalition(), kAS4).value == 0);
  SearchConfig cfg;
  cfg.horizon = 3;
  CHECK_THROWS_AS(MinCoalitionCost(ex4.instance, Coalition::Singleton(1), kAS4, cfg),
                  InvalidInput);
  CHECK_THROWS_AS(MinCoalitionCost(ex4.instance, Coalition::Singleton(5), kAS4), InvalidInput);
}

TEST_CASE("node budget exhaustion reports consistent bounds") {
  const WorkedExample ex5 = LoadExample("ex5");
  SearchConfig cfg;
  cfg.node_limit = 5;
  const Coalition t = Coalition::Of({0, 1, 3, 4});
  try {
    MinCoalitionCost(ex5.instance, t, kAS4, cfg);
    FAIL("expected the budget to run out");
  } catch (const SearchLimitExceeded& e) {
    CHECK(e.value_lower_bound() <= 4);
    CHECK(e.value_upper_bound() >= 4);
    CHECK(e.value_lower_bound() >= 0);
  }
}
