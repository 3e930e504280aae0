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

// openshop: command-line front end.
//
//   openshop solve    --instance inst.json --coalition 2,3 --regime as4
//   openshop value    --instance inst.json --coalition 2,3 --regime as4
//   openshop game     --instance inst.json --regime as4
//   openshop alloc    --instance inst.json [--machine 1]
//   openshop core     (--game game.json | --instance inst.json --regime as4)
//                     [--allocation x.json]
//   openshop examples [--id ex3]
//   openshop gen      --n 4 --m 3 --seed 7 [--style permuted-blocks]
//   openshop gantt    (--instance f | --schedule f | --parse table.txt)
//
// Exit codes: 0 ok, 2 invalid input, 3 assertion failure, 4 resource limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "openshop/admissibility.hpp"
#include "openshop/coalition_search.hpp"
#include "openshop/game.hpp"
#include "openshop/gantt.hpp"
#include "openshop/generate.hpp"
#include "openshop/io.hpp"
#include "openshop/optimal.hpp"
#include "openshop/shop.hpp"
#include "openshop/worked_examples.hpp"

namespace {

using namespace openshop;

constexpr int kExitInvalid = 2;
constexpr int kExitAssertion = 3;
constexpr int kExitLimit = 4;

struct Options {
  std::string format = "table";
  std::string instance;
  std::string schedule;
  std::string game;
  std::string allocation;
  std::string parse;
  std::string coalition;
  std::string regime = "as4";
  std::string id;
  std::string style = "semiactive-random";
  std::optional<int> horizon;
  std::optional<int> machine;
  unsigned threads = 0;
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
};

SearchConfig ConfigFrom(const Options& o) {
  SearchConfig cfg;
  cfg.horizon = o.horizon;
  if (const char* env = std::getenv("OPENSHOP_NODE_LIMIT")) {
    long long limit = 0;
    std::istringstream in(env);
    if (!(in >> limit) || limit < 0) {
      throw InvalidInput("OPENSHOP_NODE_LIMIT must be a non-negative integer");
    }
    // 0 lifts the limit.
    cfg.node_limit = limit == 0 ? std::nullopt : std::optional<std::int64_t>(limit);
  }
  return cfg;
}

Instance LoadInstance(const Options& o) {
  if (o.instance.empty()) throw InvalidInput("--instance is required");
  return InstanceFromJson(ReadJsonFile(o.instance));
}

Coalition CoalitionFrom(const Options& o, int n) {
  return o.coalition.empty() ? Coalition::Grand(n) : Coalition::Parse(o.coalition, n);
}

bool Json(const Options& o) { return o.format == "json"; }

std::string Braced(Coalition c) { return "{" + c.ToString() + "}"; }

int Solve(const Options& o, bool with_witness) {
  const Instance inst = LoadInstance(o);
  const Coalition t = CoalitionFrom(o, inst.n());
  const Regime regime = ParseRegime(o.regime);
  SearchConfig cfg = ConfigFrom(o);
  cfg.record_witness = with_witness;
  const int initial = CoalitionCost(inst.s0(), t);
  try {
    const CoalitionResult r = MinCoalitionCost(inst, t, regime, cfg);
    if (Json(o)) {
      openshop::Json out{{"coalition", t.ToString()}, {"regime", regime.name()},
                         {"value", r.value},          {"initial_cost", initial},
                         {"min_cost", r.min_cost},    {"nodes", r.nodes}};
      if (r.witness) {
        out["witness"] = r.witness->rows();
        out["witness_is_lexmin"] = r.witness_is_lexmin;
      }
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "coalition " << Braced(t) << "  regime " << regime.name() << '\n'
                << "value     " << r.value << "  (cost " << initial << " -> " << r.min_cost
                << ", " << r.nodes << " nodes)\n";
      if (r.witness) {
        std::cout << "witness" << (r.witness_is_lexmin ? "" : " (not lexicographically minimal)")
                  << ":\n"
                  << RenderGantt(*r.witness);
      }
    }
    return 0;
  } catch (const SearchLimitExceeded& e) {
    if (Json(o)) {
      std::cout << openshop::Json{{"coalition", t.ToString()},
                                  {"regime", regime.name()},
                                  {"status", "limit"},
                                  {"value_lower_bound", e.value_lower_bound()},
                                  {"value_upper_bound", e.value_upper_bound()},
                                  {"nodes", e.nodes()}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "node limit reached after " << e.nodes() << " nodes; value in ["
                << e.value_lower_bound() << ", " << e.value_upper_bound() << "]\n";
    }
    return kExitLimit;
  }
}

void PrintGameTable(const TUGame& game) {
  const std::size_t count = game.values.size();
  for (std::size_t mask = 1; mask < count; ++mask) {
    const Coalition c(static_cast<Coalition::Mask>(mask));
    std::cout << Braced(c) << '\t' << game.values[mask]
              << (game.exact[mask] ? "" : "\t(lower bound only)") << '\n';
  }
}

int Game(const Options& o) {
  const Instance inst = LoadInstance(o);
  const Regime regime = ParseRegime(o.regime);
  GameBuildOptions opts;
  opts.threads = o.threads;
  const TUGame game = BuildGame(inst, regime, ConfigFrom(o), opts);
  if (Json(o)) {
    std::cout << GameToJson(game).dump(2) << '\n';
  } else {
    std::cout << "regime " << regime.name() << ", " << inst.n() << " players\n";
    PrintGameTable(game);
  }
  return game.complete() ? 0 : kExitLimit;
}

int Alloc(const Options& o) {
  const Instance inst = LoadInstance(o);
  Allocation a;
  std::string rule = "mu-bar";
  if (o.machine) {
    if (*o.machine < 1 || *o.machine > inst.m()) throw InvalidInput("--machine out of range");
    a = MuJ(inst, *o.machine - 1);
    rule = "mu-" + std::to_string(*o.machine);
  } else {
    a = MuBar(inst);
  }
  if (Json(o)) {
    openshop::Json out = AllocationToJson(a);
    out["rule"] = rule;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << rule << ":";
    for (const auto& v : a.x) std::cout << ' ' << RationalToString(v);
    std::cout << '\n';
  }
  return 0;
}

int Core(const Options& o) {
  TUGame game;
  if (!o.game.empty()) {
    game = GameFromJson(ReadJsonFile(o.game));
  } else {
    const Instance inst = LoadInstance(o);
    GameBuildOptions opts;
    opts.threads = o.threads;
    game = BuildGame(inst, ParseRegime(o.regime), ConfigFrom(o), opts);
  }
  if (!game.complete()) {
    std::cerr << "game has lower-bound-only coalitions; core verdict would be unsound\n";
    return kExitLimit;
  }
  if (!o.allocation.empty()) {
    const Allocation x = AllocationFromJson(ReadJsonFile(o.allocation));
    const CoreCheck c = IsCoreMember(game, x);
    if (Json(o)) {
      openshop::Json out{{"member", c.member}, {"efficient", c.efficient}};
      if (c.violated) out["violated"] = c.violated->ToString();
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "member    " << (c.member ? "yes" : "no") << '\n'
                << "efficient " << (c.efficient ? "yes" : "no") << '\n';
      if (c.violated) {
        std::cout << "violated  " << Braced(*c.violated) << " gets "
                  << RationalToString(x.total(*c.violated)) << " < "
                  << game.value(*c.violated) << '\n';
      }
    }
    return 0;
  }
  const CoreAnalysis core = CoreNonempty(game);
  if (Json(o)) {
    openshop::Json out{{"nonempty", core.nonempty},
                       {"min_total", RationalToString(core.min_total)},
                       {"grand_value", game.value(Coalition::Grand(game.n))}};
    if (core.point) out["point"] = AllocationToJson(*core.point)["x"];
    if (!core.balancing_weights.empty()) {
      openshop::Json w = openshop::Json::object();
      for (const auto& [c, weight] : core.balancing_weights) {
        w[c.ToString()] = RationalToString(weight);
      }
      out["balancing_weights"] = w;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "core " << (core.nonempty ? "nonempty" : "empty") << "  (min x(N) = "
              << RationalToString(core.min_total) << ", v(N) = "
              << game.value(Coalition::Grand(game.n)) << ")\n";
    if (core.point) {
      std::cout << "point:";
      for (const auto& v : core.point->x) std::cout << ' ' << RationalToString(v);
      std::cout << '\n';
    }
    for (const auto& [c, weight] : core.balancing_weights) {
      std::cout << "weight " << Braced(c) << " = " << RationalToString(weight) << '\n';
    }
  }
  return 0;
}

int Examples(const Options& o) {
  const ExampleReport report = RunExamples(
      o.id.empty() ? std::nullopt : std::optional<std::string_view>(o.id), ConfigFrom(o));
  if (Json(o)) {
    openshop::Json out = openshop::Json::array();
    for (const auto& a : report.assertions) {
      out.push_back({{"example", a.example},
                     {"assertion", a.name},
                     {"expected", a.expected},
                     {"actual", a.actual},
                     {"status", StatusName(a.status)}});
    }
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& a : report.assertions) {
      std::cout << '[' << StatusName(a.status) << "] " << a.example << ": " << a.name;
      if (a.status != ExampleAssertion::Status::kPass) {
        std::cout << "\n    expected: " << a.expected << "\n    actual:   " << a.actual;
      }
      std::cout << '\n';
    }
  }
  if (report.any_failed()) return kExitAssertion;
  if (report.any_lower_bound_only()) return kExitLimit;
  return 0;
}

int Gen(const Options& o) {
  const Instance inst = GenerateInstance(o.n, o.m, o.seed, ParseGeneratorStyle(o.style));
  if (Json(o)) {
    std::cout << InstanceToJson(inst).dump() << '\n';
  } else {
    std::cout << RenderGantt(inst.s0());
  }
  return 0;
}

int Gantt(const Options& o) {
  if (!o.parse.empty()) {
    std::ifstream in(o.parse);
    if (!in) throw InvalidInput("cannot open " + o.parse);
    std::stringstream text;
    text << in.rdbuf();
    const Schedule s = ParseGantt(text.str());
    if (!IsFeasible(s)) throw InvalidInput("table does not describe a feasible schedule");
    std::cout << (Json(o) ? ScheduleToJson(s).dump() + "\n" : RenderGantt(s));
    return 0;
  }
  Schedule s;
  if (!o.schedule.empty()) {
    s = ScheduleFromJson(ReadJsonFile(o.schedule));
    if (!IsFeasible(s)) throw InvalidInput("schedule is not feasible");
  } else {
    s = LoadInstance(o).s0();
  }
  if (Json(o)) {
    std::cout << openshop::Json{{"gantt", RenderGantt(s)}}.dump() << '\n';
  } else {
    std::cout << RenderGantt(s);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for unit-time open shop scheduling games"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--instance", o.instance, "Instance JSON file")->required();
    sub->add_option("--regime", o.regime, "Admissibility regime (as1, as2, ..., bar4)");
    sub->add_option("--horizon", o.horizon, "Exclusive bound on start slots");
    add_format(sub);
  };

  auto* solve = app.add_subcommand("solve", "Optimal admissible schedule for a coalition");
  add_search(solve);
  solve->add_option("--coalition", o.coalition, "1-based members, e.g. 2,3 (default: all)");
  auto* value = app.add_subcommand("value", "Coalition value v(T)");
  add_search(value);
  value->add_option("--coalition", o.coalition, "1-based members, e.g. 2,3 (default: all)");
  auto* game = app.add_subcommand("game", "Characteristic function over all coalitions");
  add_search(game);
  game->add_option("--threads", o.threads, "Worker threads (0: hardware concurrency)");

  auto* alloc = app.add_subcommand("alloc", "Machine-based allocations");
  alloc->add_option("--instance", o.instance, "Instance JSON file")->required();
  alloc->add_option("--machine", o.machine, "1-based machine for the j-based rule");
  add_format(alloc);

  auto* core = app.add_subcommand("core", "Core emptiness or membership");
  core->add_option("--game", o.game, "Game JSON file");
  core->add_option("--instance", o.instance, "Instance JSON file");
  core->add_option("--regime", o.regime, "Regime used with --instance");
  core->add_option("--horizon", o.horizon, "Exclusive bound on start slots");
  core->add_option("--threads", o.threads, "Worker threads (0: hardware concurrency)");
  core->add_option("--allocation", o.allocation, "Allocation JSON to test for membership");
  add_format(core);

  auto* examples = app.add_subcommand("examples", "Run the worked-example regression suite");
  examples->add_option("--id", o.id, "Run a single example (ex1 .. ex6, ex7_nonbalanced)");
  add_format(examples);

  auto* gen = app.add_subcommand("gen", "Random instance");
  gen->add_option("--n", o.n, "Jobs")->required()->check(CLI::Range(1, 32));
  gen->add_option("--m", o.m, "Machines")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "Seed");
  gen->add_option("--style", o.style, "semiactive-random or permuted-blocks");
  add_format(gen);

  auto* gantt = app.add_subcommand("gantt", "Render or parse slot tables");
  gantt->add_option("--instance", o.instance, "Render the initial schedule of an instance");
  gantt->add_option("--schedule", o.schedule, "Render a schedule JSON file");
  gantt->add_option("--parse", o.parse, "Parse a rendered table back to a schedule");
  add_format(gantt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  // gen output is usually piped into other commands.
  if (gen->parsed() && gen->count("--format") == 0) o.format = "json";

  try {
    if (solve->parsed()) return Solve(o, true);
    if (value->parsed()) return Solve(o, false);
    if (game->parsed()) return Game(o);
    if (alloc->parsed()) return Alloc(o);
    if (core->parsed()) return Core(o);
    if (examples->parsed()) return Examples(o);
    if (gen->parsed()) return Gen(o);
    if (gantt->parsed()) return Gantt(o);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const openshop::Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const SearchLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  }
  return kExitInvalid;
}
