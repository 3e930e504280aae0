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

#include "openshop/gantt.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace openshop {

std::string RenderGantt(const Schedule& s) {
  const int n = s.num_jobs();
  const int m = s.num_machines();
  const int slots = s.makespan();
  const int width = static_cast<int>(std::to_string(n).size());
  const int label = static_cast<int>(std::to_string(m).size()) + 1;
  std::ostringstream out;
  for (int j = 0; j < m; ++j) {
    std::vector<int> cell(slots, -1);
    for (int i = 0; i < n; ++i) cell[s.start(i, j)] = i;
    std::string name = "m" + std::to_string(j + 1);
    name.resize(label, ' ');
    out << name << " |";
    for (int t = 0; t < slots; ++t) {
      std::string text = cell[t] < 0 ? "" : std::to_string(cell[t] + 1);
      out << ' ' << std::string(width - text.size(), ' ') << text << " |";
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::string_view Trim(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) {
    v.remove_suffix(1);
  }
  return v;
}

}  // namespace

Schedule ParseGantt(std::string_view text) {
  // cells[j][t] = 0-based job or -1
  std::vector<std::vector<int>> cells;
  int max_job = -1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;
    const auto bar = line.find('|');
    if (bar == std::string_view::npos || line.front() != 'm') {
      throw InvalidInput("gantt row must look like 'm<j> | ... |'");
    }
    int machine = 0;
    const std::string_view name = Trim(line.substr(1, bar - 1));
    const auto [p, ec] = std::from_chars(name.data(), name.data() + name.size(), machine);
    if (ec != std::errc() || p != name.data() + name.size() ||
        machine != static_cast<int>(cells.size()) + 1) {
      throw InvalidInput("gantt rows must be m1, m2, ... in order");
    }
    std::vector<int> row;
    std::string_view rest = line.substr(bar + 1);
    while (!rest.empty()) {
      const auto next = rest.find('|');
      if (next == std::string_view::npos) {
        if (!Trim(rest).empty()) throw InvalidInput("gantt row must end with '|'");
        break;
      }
      const std::string_view cell = Trim(rest.substr(0, next));
      rest = rest.substr(next + 1);
      if (cell.empty()) {
        row.push_back(-1);
        continue;
      }
      int job = 0;
      const auto [q, ec2] = std::from_chars(cell.data(), cell.data() + cell.size(), job);
      if (ec2 != std::errc() || q != cell.data() + cell.size() || job < 1) {
        throw InvalidInput("bad gantt cell '" + std::string(cell) + "'");
      }
      row.push_back(job - 1);
      max_job = std::max(max_job, job - 1);
    }
    cells.push_back(std::move(row));
  }
  if (cells.empty() || max_job < 0) throw InvalidInput("empty gantt table");
  const int n = max_job + 1;
  const int m = static_cast<int>(cells.size());
  Schedule s(n, m);
  for (int j = 0; j < m; ++j) {
    std::vector<int> seen(n, 0);
    for (int t = 0; t < static_cast<int>(cells[j].size()); ++t) {
      const int job = cells[j][t];
      if (job < 0) continue;
      if (seen[job]++ > 0) {
        throw InvalidInput("job " + std::to_string(job + 1) + " appears twice on m" +
                           std::to_string(j + 1));
      }
      s.set_start(job, j, t);
    }
    for (int i = 0; i < n; ++i) {
      if (seen[i] == 0) {
        throw InvalidInput("job " + std::to_string(i + 1) + " missing on m" +
                           std::to_string(j + 1));
      }
    }
  }
  return s;
}

}  // namespace openshop
