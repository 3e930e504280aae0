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

#include "openshop/worked_examples.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "openshop/admissibility.hpp"
#include "openshop/game.hpp"
#include "openshop/gantt.hpp"
#include "openshop/io.hpp"
#include "openshop/optimal.hpp"

namespace openshop {

namespace {

using Status = ExampleAssertion::Status;

// ex5 tables (13 jobs, 4 machines), transcribed slot by slot.
constexpr std::string_view kEx5Initial = R"(
m1 | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 | 9 | 10 | 11 | 12 | 13 |   |   |   |   |   |
m2 | 13 | 12 | 10 | 5 | 4 |   | 3 | 1 | 2 | 8 |   | 11 | 6 | 7 | 9 |   |   |   |
m3 | 4 | 5 | 1 | 2 | 12 | 3 | 6 | 7 | 8 | 9 |   |   | 11 | 10 | 13 |   |   |   |
m4 | 12 | 9 | 2 | 10 | 1 |   |   | 3 | 4 | 5 |   |   |   | 11 | 6 | 7 | 8 | 13 |
)";

constexpr std::string_view kEx5Witness12 = R"(
m1 | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 | 9 | 10 | 11 | 12 | 13 |   |   |   |   |
m2 | 13 | 12 | 10 | 5 | 4 | 3 | 1 | 2 | 8 | 11 | 6 | 7 | 9 |   |   |   |   |
m3 | 4 | 5 | 1 | 2 | 12 |   | 3 | 6 | 7 | 8 | 9 | 11 | 10 | 13 |   |   |   |
m4 | 12 | 9 | 2 | 10 | 1 |   |   | 3 | 4 | 5 |   |   | 11 | 6 | 7 | 8 | 13 |
)";

constexpr std::string_view kEx5Witness45 = R"(
m1 | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 | 9 | 10 | 11 | 12 | 13 |   |   |
m2 | 13 | 12 | 10 | 5 | 4 |   | 3 | 1 | 2 | 8 |   | 11 | 6 | 7 | 9 |
m3 | 4 | 5 | 1 | 2 | 12 |   |   | 3 | 6 | 7 | 8 | 9 | 11 | 10 | 13 |
m4 | 12 | 9 | 2 | 10 | 1 | 3 | 4 | 5 | 11 | 6 | 7 | 8 |   | 13 |   |
)";

Schedule Rows(std::vector<std::vector<int>> rows) { return Schedule::FromRows(rows); }

std::string Str(const Rational& q) { return RationalToString(q); }

std::string Str(const Allocation& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    if (i > 0) out += ", ";
    out += Str(a.x[i]);
  }
  return out + ")";
}

std::string Str(bool b) { return b ? "true" : "false"; }

std::string Str(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

class Recorder {
 public:
  Recorder(std::string example, ExampleReport* report, const SearchConfig& cfg)
      : example_(std::move(example)), report_(report), cfg_(cfg) {}

  void Check(const std::string& name, const std::string& expected,
             const std::string& actual) {
    report_->assertions.push_back(
        {example_, name, expected, actual, expected == actual ? Status::kPass : Status::kFail});
  }

  // Asserts v(T) == expected. When the search runs out of budget the lower
  // bound from `known` (an admissible schedule attaining `expected`) is
  // reported instead.
  void CheckValue(const std::string& name, const Instance& inst, Coalition t,
                  Regime regime, int expected) {
    try {
      const CoalitionResult r = MinCoalitionCost(inst, t, regime, cfg_);
      Check(name, std::to_string(expected), std::to_string(r.value));
    } catch (const SearchLimitExceeded& e) {
      std::ostringstream actual;
      actual << "in [" << e.value_lower_bound() << ", " << e.value_upper_bound()
             << "] after " << e.nodes() << " nodes";
      const bool consistent = e.value_lower_bound() <= expected &&
                              expected <= e.value_upper_bound();
      report_->assertions.push_back({example_, name, std::to_string(expected), actual.str(),
                                     consistent ? Status::kLowerBoundOnly : Status::kFail});
    }
  }

  const SearchConfig& cfg() const { return cfg_; }

 private:
  std::string example_;
  ExampleReport* report_;
  SearchConfig cfg_;
};

// Number of semi-active schedules compatible with `scheme` whose starts are
// all below `horizon`.
int CountSemiActive(const Scheme& scheme, int n, int m, int horizon) {
  const int ops = n * m;
  std::vector<int> digits(ops, 0);
  int count = 0;
  while (true) {
    Schedule s(n, m);
    for (int k = 0; k < ops; ++k) s.set_start(k / m, k % m, digits[k]);
    if (IsFeasible(s) && SchemeOf(s) == scheme && IsSemiActive(s)) ++count;
    int k = 0;
    while (k < ops && ++digits[k] == horizon) digits[k++] = 0;
    if (k == ops) break;
  }
  return count;
}

void RunEx1(Recorder& rec) {
  const WorkedExample ex = LoadExample("ex1");
  const Schedule& s1 = ex.schedule("s1");
  const Schedule& s2 = ex.schedule("s2");
  rec.Check("s1 feasible", "true", Str(IsFeasible(s1)));
  rec.Check("s2 feasible", "true", Str(IsFeasible(s2)));
  rec.Check("s1 scheme machine 1", "(1,2)", Str([&] {
              auto o = SchemeOf(s1).order(0);
              for (int& v : o) ++v;
              return o;
            }()));
  rec.Check("s1 scheme machine 2", "(1,2)", Str([&] {
              auto o = SchemeOf(s1).order(1);
              for (int& v : o) ++v;
              return o;
            }()));
  rec.Check("s2 same scheme as s1", "true", Str(SchemeOf(s1) == SchemeOf(s2)));
  rec.Check("s1 semi-active", "true", Str(IsSemiActive(s1)));
  rec.Check("s2 semi-active", "true", Str(IsSemiActive(s2)));
  rec.Check("semi-active schedules for the scheme within horizon 3", "2",
            std::to_string(CountSemiActive(SchemeOf(s1), 2, 2, 3)));
}

void RunEx2(Recorder& rec) {
  const WorkedExample ex = LoadExample("ex2");
  const Schedule aa = AdiriAmit(6, 4);
  rec.Check("slot table", RenderGantt(ex.schedule("optimal")), RenderGantt(aa));
  rec.Check("total cost", "32", std::to_string(CoalitionCost(aa, Coalition::Grand(6))));
  rec.Check("optimal total cost 4*(1+1+1+1+2+2)", "32", std::to_string(OptimalTotalCost(6, 4)));
  rec.Check("continuous machines", "(2)", Str([&] {
              auto c = ContinuousMachines(aa);
              for (int& v : c) ++v;
              return c;
            }()));
  const Scheme scheme = SchemeOf(aa);
  bool blocks_ok = true;
  for (int i = 0; i < 6; ++i) {
    const int rank = scheme.position[1][i] + 1;
    blocks_ok &= CompletionTime(aa, i) == (rank + 3) / 4 * 4;
  }
  rec.Check("C_i = ceil(rank on machine 2 / m) * m", "true", Str(blocks_ok));
}

void RunEx3(Recorder& rec) {
  const WorkedExample ex = LoadExample("ex3");
  const Instance& inst = ex.instance;
  const Schedule& printed = ex.schedule("witness_3_5");
  const Coalition t = Coalition::Of({2, 4});
  rec.Check("C_3(s0)", "4", std::to_string(CompletionTime(inst.s0(), 2)));
  rec.Check("C_5(s0)", "6", std::to_string(CompletionTime(inst.s0(), 4)));
  rec.Check("c_{3,5}(s0)", "10", std::to_string(CoalitionCost(inst.s0(), t)));
  rec.Check("components of {3,5} on machine 1", "{3} {5}", [&] {
    std::string out;
    for (Coalition c : ConnectedComponents(t, inst.scheme0().position[0])) {
      out += (out.empty() ? "{" : " {") + c.ToString() + "}";
    }
    return out;
  }());
  rec.Check("printed schedule in AS1({3,5})", "true", Str(IsAdmissible(printed, inst, t, kAS1)));
  rec.Check("printed schedule cost", "9", std::to_string(CoalitionCost(printed, t)));
  rec.Check("C_2 under printed schedule (CompletionLeq violated, 5 -> 6)", "6",
            std::to_string(CompletionTime(printed, 1)));
  rec.Check("printed schedule in AS4({3,5})", "false", Str(IsAdmissible(printed, inst, t, kAS4)));
  rec.CheckValue("v^AS1({3,5})", inst, t, kAS1, 1);
  SearchConfig cfg = rec.cfg();
  cfg.record_witness = true;
  try {
    const CoalitionResult r = MinCoalitionCost(inst, t, kAS1, cfg);
    rec.Check("search witness equals printed schedule", RenderGantt(printed),
              r.witness ? RenderGantt(*r.witness) : "none");
  } catch (const SearchLimitExceeded&) {
    rec.Check("search witness equals printed schedule", RenderGantt(printed), "budget exhausted");
  }
}

void RunEx4(Recorder& rec) {
  const WorkedExample ex = LoadExample("ex4");
  const Instance& inst = ex.instance;
  const Schedule& w = ex.schedule("witness_2");
  const Coalition t = Coalition::Singleton(1);
  rec.Check("witness in AS4({2})", "true", Str(IsAdmissible(w, inst, t, kAS4)));
  rec.Check("witness in AS3({2})", "false", Str(IsAdmissible(w, inst, t, kAS3)));
  rec.Check("delayed outsider operation", "(3,1)", [&] {
    const auto d = DelayedOutsiderOperation(w, inst.s0(), t);
    return d ? "(" + std::to_string(d->first + 1) + "," + std::to_string(d->second + 1) + ")"
             : std::string("none");
  }());
  rec.CheckValue("v^AS4({2})", inst, t, kAS4, 1);
  rec.CheckValue("v^AS3({2})", inst, t, kAS3, 0);
}

void RunEx5(Recorder& rec) {
  const WorkedExample ex = LoadExample("ex5");
  const Instance& inst = ex.instance;
  const Coalition s = Coalition::Of({0, 1});
  const Coalition t = Coalition::Of({3, 4});
  const Coalition st = Coalition::Of({0, 1, 3, 4});
  struct Printed {
    const char* schedule;
    Coalition coalition;
    int saving;
  };
  const Printed printed[] = {{"witness_1_2", s, 2}, {"witness_4_5", t, 4}, {"witness_4_5", st, 4}};
  for (const auto& p : printed) {
    const Schedule& w = ex.schedule(p.schedule);
    const std::string label = std::string(p.schedule) + " for {" + p.coalition.ToString() + "}";
    rec.Check(label + " in AS4", "true", Str(IsAdmissible(w, inst, p.coalition, kAS4)));
    rec.Check(label + " saving", std::to_string(p.saving),
              std::to_string(CoalitionCost(inst.s0(), p.coalition) -
                             CoalitionCost(w, p.coalition)));
  }
  rec.CheckValue("v^AS4({1,2})", inst, s, kAS4, 2);
  rec.CheckValue("v^AS4({4,5})", inst, t, kAS4, 4);
  rec.CheckValue("v^AS4({1,2,4,5})", inst, st, kAS4, 4);
}

void RunEx6(Recorder& rec) {
  const WorkedExample ex = LoadExample("ex6");
  const Instance& inst = ex.instance;
  rec.Check("j-based schedule for machine 1", RenderGantt(ex.schedule("j_based_1")),
            RenderGantt(JBasedOptimal(inst, 0)));
  rec.Check("C_3 under the machine-1 schedule", "4",
            std::to_string(CompletionTime(JBasedOptimal(inst, 0), 2)));
  const Allocation mu1 = MuJ(inst, 0);
  const Allocation mu2 = MuJ(inst, 1);
  const Allocation bar = MuBar(inst);
  rec.Check("mu^1", "(1, 2, -1, 0)", Str(mu1));
  rec.Check("mu^1_3", "-1", Str(mu1.x[2]));
  rec.Check("mu^2", "(-1, 0, 1, 2)", Str(mu2));
  rec.Check("mu-bar", "(0, 1, 0, 1)", Str(bar));
  SearchConfig cfg = rec.cfg();
  TUGame game;
  try {
    game = BuildGame(inst, kAS4, cfg, GameBuildOptions{});
  } catch (const InvalidInput& e) {
    rec.Check("AS4 game", "built", e.what());
    return;
  }
  if (!game.complete()) {
    rec.Check("AS4 game", "exact", "budget exhausted");
    return;
  }
  rec.Check("v^AS4({3})", "0", std::to_string(game.value(Coalition::Singleton(2))));
  rec.Check("v^AS4(N)", "2", std::to_string(game.value(Coalition::Grand(4))));
  const CoreCheck c1 = IsCoreMember(game, mu1);
  rec.Check("mu^1 in core", "false", Str(c1.member));
  rec.Check("mu^1 blocking coalition", "{3}",
            c1.violated ? "{" + c1.violated->ToString() + "}" : std::string("none"));
  rec.Check("mu-bar in core", "true", Str(IsCoreMember(game, bar).member));
}

void RunEx7(Recorder& rec) {
  const WorkedExample ex = LoadExample("ex7_nonbalanced");
  const Instance& inst = ex.instance;
  const Schedule& w2 = ex.schedule("witness_2");
  const Schedule& w3 = ex.schedule("witness_3");
  rec.Check("witness_2 in bar2({2})", "true",
            Str(IsAdmissible(w2, inst, Coalition::Singleton(1), kBar2)));
  rec.Check("witness_2 in AS2'({2})", "false",
            Str(IsAdmissible(w2, inst, Coalition::Singleton(1), kAS2p)));
  rec.Check("witness_3 in bar2({3})", "true",
            Str(IsAdmissible(w3, inst, Coalition::Singleton(2), kBar2)));
  TUGame game;
  game = BuildGame(inst, kBar2, rec.cfg(), GameBuildOptions{});
  if (!game.complete()) {
    rec.Check("bar2 game", "exact", "budget exhausted");
    return;
  }
  rec.Check("v^bar2({2})", "3", std::to_string(game.value(Coalition::Singleton(1))));
  rec.Check("v^bar2({3})", "1", std::to_string(game.value(Coalition::Singleton(2))));
  rec.Check("v^bar2(N)", "3", std::to_string(game.value(Coalition::Grand(3))));
  const CoreAnalysis core = CoreNonempty(game);
  rec.Check("core nonempty", "false", Str(core.nonempty));
}

const std::vector<std::pair<std::string, std::function<void(Recorder&)>>>& Runners() {
  static const auto* runners =
      new std::vector<std::pair<std::string, std::function<void(Recorder&)>>>{
          {"ex1", RunEx1}, {"ex2", RunEx2}, {"ex3", RunEx3},          {"ex4", RunEx4},
          {"ex5", RunEx5}, {"ex6", RunEx6}, {"ex7_nonbalanced", RunEx7}};
  return *runners;
}

}  // namespace

const Schedule& WorkedExample::schedule(const std::string& name) const {
  const auto it = schedules.find(name);
  if (it == schedules.end()) throw InvalidInput(id + " has no schedule '" + name + "'");
  return it->second;
}

std::vector<std::string> ExampleIds() {
  std::vector<std::string> ids;
  for (const auto& [id, run] : Runners()) ids.push_back(id);
  return ids;
}

WorkedExample LoadExample(std::string_view id) {
  auto make = [&](Schedule s0, std::map<std::string, Schedule> extra) {
    extra.emplace("s0", s0);
    return WorkedExample{std::string(id), Instance(std::move(s0)), std::move(extra)};
  };
  if (id == "ex1") {
    const Schedule s1 = Rows({{0, 1}, {1, 2}});
    return make(s1, {{"s1", s1}, {"s2", Rows({{1, 0}, {2, 1}})}});
  }
  if (id == "ex2") {
    const Schedule opt = Rows({{0, 1, 2, 3},
                               {3, 0, 1, 2},
                               {2, 3, 0, 1},
                               {1, 2, 3, 0},
                               {4, 5, 6, 7},
                               {7, 4, 5, 6}});
    return make(opt, {{"optimal", opt}});
  }
  if (id == "ex3") {
    return make(Rows({{0, 1}, {1, 4}, {3, 2}, {4, 3}, {5, 0}}),
                {{"witness_3_5", Rows({{0, 1}, {1, 5}, {2, 3}, {3, 4}, {4, 0}})}});
  }
  if (id == "ex4") {
    return make(Rows({{0, 1}, {1, 4}, {2, 3}}), {{"witness_2", Rows({{0, 1}, {1, 3}, {3, 2}})}});
  }
  if (id == "ex5") {
    return make(ParseGantt(kEx5Initial), {{"witness_1_2", ParseGantt(kEx5Witness12)},
                                          {"witness_4_5", ParseGantt(kEx5Witness45)}});
  }
  if (id == "ex6") {
    return make(Rows({{0, 2}, {1, 3}, {2, 0}, {3, 1}}),
                {{"j_based_1", Rows({{0, 1}, {1, 0}, {2, 3}, {3, 2}})}});
  }
  if (id == "ex7_nonbalanced") {
    const Schedule w2 = Rows({{0, 1}, {1, 0}, {2, 3}});
    return make(Rows({{0, 1}, {1, 4}, {2, 3}}),
                {{"witness_2", w2}, {"witness_3", Rows({{0, 1}, {1, 4}, {2, 0}})},
                 {"witness_N", w2}});
  }
  throw InvalidInput("unknown example '" + std::string(id) + "'");
}

bool ExampleReport::all_passed() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const ExampleAssertion& a) { return a.status == Status::kPass; });
}

bool ExampleReport::any_failed() const {
  return std::any_of(assertions.begin(), assertions.end(),
                     [](const ExampleAssertion& a) { return a.status == Status::kFail; });
}

bool ExampleReport::any_lower_bound_only() const {
  return std::any_of(assertions.begin(), assertions.end(), [](const ExampleAssertion& a) {
    return a.status == Status::kLowerBoundOnly;
  });
}

const char* StatusName(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "FAIL";
    case Status::kLowerBoundOnly:
      return "lower-bound-only";
  }
  return "?";
}

ExampleReport RunExamples(std::optional<std::string_view> filter, const SearchConfig& cfg) {
  ExampleReport report;
  bool matched = false;
  for (const auto& [id, run] : Runners()) {
    if (filter && *filter != id) continue;
    matched = true;
    Recorder rec(id, &report, cfg);
    run(rec);
  }
  if (!matched) throw InvalidInput("unknown example '" + std::string(*filter) + "'");
  return report;
}

}  // namespace openshop
