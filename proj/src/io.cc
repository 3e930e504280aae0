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

#include "openshop/io.hpp"

#include <fstream>

#include "openshop/admissibility.hpp"

namespace openshop {

namespace {

std::vector<std::vector<int>> MatrixFromJson(const Json& j, const char* key,
                                             int n, int m) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw InvalidInput(std::string("missing array '") + key + "'");
  }
  std::vector<std::vector<int>> rows;
  for (const auto& row : j[key]) {
    if (!row.is_array()) throw InvalidInput(std::string("'") + key + "' rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw InvalidInput("start times must be integers");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  if (static_cast<int>(rows.size()) != n) {
    throw InvalidInput(std::string("'") + key + "' needs " + std::to_string(n) + " rows");
  }
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m) {
      throw InvalidInput(std::string("'") + key + "' rows need " + std::to_string(m) +
                         " entries");
    }
  }
  return rows;
}

int PositiveField(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<int>() < 1) {
    throw InvalidInput(std::string("'") + key + "' must be a positive integer");
  }
  return j[key].get<int>();
}

}  // namespace

Json InstanceToJson(const Instance& inst) {
  return Json{{"n", inst.n()}, {"m", inst.m()}, {"s0", inst.s0().rows()}};
}

Instance InstanceFromJson(const Json& j) {
  if (!j.is_object()) throw InvalidInput("instance must be a JSON object");
  const int n = PositiveField(j, "n");
  const int m = PositiveField(j, "m");
  return Instance(Schedule::FromRows(MatrixFromJson(j, "s0", n, m)));
}

Json ScheduleToJson(const Schedule& s) {
  return Json{{"n", s.num_jobs()}, {"m", s.num_machines()}, {"schedule", s.rows()}};
}

Schedule ScheduleFromJson(const Json& j) {
  if (!j.is_object()) throw InvalidInput("schedule must be a JSON object");
  const int n = PositiveField(j, "n");
  const int m = PositiveField(j, "m");
  return Schedule::FromRows(MatrixFromJson(j, "schedule", n, m));
}

Json GameToJson(const TUGame& game) {
  Json values = Json::object();
  Json inexact = Json::array();
  for (std::size_t mask = 0; mask < game.values.size(); ++mask) {
    const Coalition c(static_cast<Coalition::Mask>(mask));
    values[c.ToString()] = game.values[mask];
    if (!game.exact[mask]) inexact.push_back(c.ToString());
  }
  Json out{{"n", game.n}, {"regime", game.regime.name()}, {"values", values}};
  if (!inexact.empty()) out["lower_bound_only"] = inexact;
  return out;
}

TUGame GameFromJson(const Json& j) {
  if (!j.is_object()) throw InvalidInput("game must be a JSON object");
  const int n = PositiveField(j, "n");
  if (n > 24) throw InvalidInput("games over 24 players are not supported");
  if (!j.contains("values") || !j["values"].is_object()) {
    throw InvalidInput("game needs a 'values' object");
  }
  const Regime regime =
      j.contains("regime") ? ParseRegime(j["regime"].get<std::string>()) : Regime{};
  std::vector<int> values(std::size_t{1} << n, 0);
  std::vector<bool> seen(values.size(), false);
  for (const auto& [key, v] : j["values"].items()) {
    if (!v.is_number_integer()) throw InvalidInput("game values must be integers");
    const Coalition c = Coalition::Parse(key, n);
    values[c.bits()] = v.get<int>();
    seen[c.bits()] = true;
  }
  for (std::size_t mask = 1; mask < values.size(); ++mask) {
    if (!seen[mask]) {
      throw InvalidInput("game is missing coalition {" +
                         Coalition(static_cast<Coalition::Mask>(mask)).ToString() + "}");
    }
  }
  TUGame game = TUGame::FromValues(n, std::move(values), regime);
  if (j.contains("lower_bound_only")) {
    for (const auto& key : j["lower_bound_only"]) {
      game.exact[Coalition::Parse(key.get<std::string>(), n).bits()] = false;
    }
  }
  return game;
}

std::string RationalToString(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational RationalFromString(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw InvalidInput("bad rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Json AllocationToJson(const Allocation& a) {
  Json x = Json::array();
  for (const auto& v : a.x) x.push_back(RationalToString(v));
  return Json{{"x", x}};
}

Allocation AllocationFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j["x"].is_array()) {
    throw InvalidInput("allocation needs an 'x' array");
  }
  Allocation a;
  for (const auto& v : j["x"]) {
    if (v.is_number_integer()) {
      a.x.emplace_back(v.get<long>());
    } else if (v.is_string()) {
      a.x.push_back(RationalFromString(v.get<std::string>()));
    } else {
      throw InvalidInput("allocation entries must be integers or \"p/q\" strings");
    }
  }
  return a;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace openshop
