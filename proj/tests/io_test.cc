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
#include "openshop/game.hpp"
#include "openshop/gantt.hpp"
#include "openshop/generate.hpp"
#include "openshop/io.hpp"
#include "openshop/optimal.hpp"
#include "openshop/worked_examples.hpp"
#include "test_util.hpp"

using namespace openshop;

TEST_CASE("instance and schedule JSON round-trip") {
  const Instance inst = GenerateInstance(5, 3, 42);
  const Json j = InstanceToJson(inst);
  CHECK(InstanceFromJson(Json::parse(j.dump())).s0() == inst.s0());
  const Schedule s = AdiriAmit(4, 2);
  CHECK(ScheduleFromJson(Json::parse(ScheduleToJson(s).dump())) == s);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(InstanceFromJson(Json::parse(R"({"n":2,"m":2,"s0":[[0,1]]})")), InvalidInput);
  CHECK_THROWS_AS(InstanceFromJson(Json::parse(R"({"n":2,"m":2,"s0":[[0,1],[0,2]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(InstanceFromJson(Json::parse(R"({"n":0,"m":2,"s0":[]})")), InvalidInput);
  CHECK_THROWS_AS(InstanceFromJson(Json::parse(R"({"n":1,"m":1,"s0":[[0.5]]})")), InvalidInput);
  CHECK_THROWS_AS(InstanceFromJson(Json::parse("[1,2]")), InvalidInput);
  CHECK_THROWS_AS(GameFromJson(Json::parse(R"({"n":2,"values":{"1":0}})")), InvalidInput);
  CHECK_THROWS_AS(AllocationFromJson(Json::parse(R"({"x":[true]})")), InvalidInput);
  CHECK_THROWS_AS(RationalFromString("1/0"), InvalidInput);
  CHECK_THROWS_AS(ReadJsonFile("/nonexistent/file.json"), InvalidInput);
}

TEST_CASE("game JSON round-trip") {
  TUGame g = TUGame::FromValues(3, {0, 0, 3, 3, 1, 1, 3, 3}, kBar2);
  g.exact[5] = false;
  const TUGame back = GameFromJson(Json::parse(GameToJson(g).dump()));
  CHECK(back.n == 3);
  CHECK(back.regime == kBar2);
  CHECK(back.values == g.values);
  CHECK(back.exact == g.exact);
}

TEST_CASE("allocation JSON round-trip") {
  const Allocation a{{Rational(0), Rational(1, 2), Rational(-3, 4), Rational(5)}};
  CHECK(AllocationFromJson(Json::parse(AllocationToJson(a).dump())) == a);
  CHECK(AllocationFromJson(Json::parse(R"({"x":[1,"2/4"]})")).x[1] == Rational(1, 2));
  CHECK(RationalToString(Rational(6, 4)) == "3/2");
}

TEST_CASE("gantt table of the 6 x 4 block schedule") {
  const std::string text = RenderGantt(AdiriAmit(6, 4));
  CHECK(text ==
        "m1 | 1 | 4 | 3 | 2 | 5 |   |   | 6 |\n"
        "m2 | 2 | 1 | 4 | 3 | 6 | 5 |   |   |\n"
        "m3 | 3 | 2 | 1 | 4 |   | 6 | 5 |   |\n"
        "m4 | 4 | 3 | 2 | 1 |   |   | 6 | 5 |\n");
  CHECK(RenderGantt(Schedule::FromRows({{0}})) == "m1 | 1 |\n");
}

TEST_CASE("gantt tables parse back to the same schedule") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    const int m = 1 + trial % 5;
    const Schedule s = testutil::RandomFeasible(n, m, n + m + 3, rng);
    REQUIRE(ParseGantt(RenderGantt(s)) == s);
  }
  CHECK_THROWS_AS(ParseGantt("m1 | 1 | 1 |\n"), InvalidInput);
  CHECK_THROWS_AS(ParseGantt("m1 | 1 | 2 |\nm2 | 1 |   |\n"), InvalidInput);
  CHECK_THROWS_AS(ParseGantt("m2 | 1 |\n"), InvalidInput);
  CHECK_THROWS_AS(ParseGantt("m1 | x |\n"), InvalidInput);
  CHECK_THROWS_AS(ParseGantt(""), InvalidInput);
}

TEST_CASE("generated instances") {
  const Instance a = GenerateInstance(2, 2, 0);
  CHECK(IsSemiActive(a.s0()));
  CHECK(GenerateInstance(6, 3, 77).s0() == GenerateInstance(6, 3, 77).s0());
  CHECK(GenerateInstance(6, 3, 77, GeneratorStyle::kPermutedBlocks).s0() ==
        GenerateInstance(6, 3, 77, GeneratorStyle::kPermutedBlocks).s0());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = GenerateInstance(3, 2, seed);
    REQUIRE(IsFeasibleSchedule(inst.s0().rows(), 3, 2));
    REQUIRE(IsSemiActive(inst.s0()));
    const Instance opt = GenerateInstance(5, 3, seed, GeneratorStyle::kPermutedBlocks);
    REQUIRE(CoalitionCost(opt.s0(), Coalition::Grand(5)) == OptimalTotalCost(5, 3));
  }
  CHECK(ParseGeneratorStyle("permuted-blocks") == GeneratorStyle::kPermutedBlocks);
  CHECK_THROWS_AS(ParseGeneratorStyle("other"), InvalidInput);
  CHECK_THROWS_AS(GenerateInstance(0, 2, 0), InvalidInput);
}

TEST_CASE("worked-example fixtures all pass") {
  const ExampleReport report = RunExamples();
  for (const auto& a : report.assertions) {
    INFO(a.example << ": " << a.name << " expected " << a.expected << " got " << a.actual);
    CHECK(a.status == ExampleAssertion::Status::kPass);
  }
  CHECK(report.assertions.size() > 40);
  CHECK(RunExamples("ex1").assertions.front().example == "ex1");
  CHECK_THROWS_AS(RunExamples("ex9"), InvalidInput);
}

TEST_CASE("a tiny budget turns the 13 x 4 values into lower-bound-only results") {
  SearchConfig cfg;
  cfg.node_limit = 3;
  const ExampleReport report = RunExamples("ex5", cfg);
  CHECK(report.any_lower_bound_only());
  CHECK_FALSE(report.any_failed());
}
