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

#include "openshop/optimal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace openshop {

BlockStructure Blocks(int n, int m) {
  if (n < 1 || m < 1) throw InvalidInput("blocks need n >= 1 and m >= 1");
  BlockStructure b;
  b.full_blocks = n / m;
  b.remainder = n % m;
  for (int r = 0; r < b.full_blocks; ++r) {
    b.block_sizes.push_back(m);
    b.block_starts.push_back(r * m);
  }
  if (b.remainder > 0) {
    b.block_sizes.push_back(b.remainder);
    b.block_starts.push_back(b.full_blocks * m);
  }
  return b;
}

Schedule AdiriAmit(int n, int m) {
  if (n < 1 || m < 1) throw InvalidInput("AdiriAmit needs n >= 1 and m >= 1");
  // Every operation lands before n*m + m, so this occupancy grid suffices.
  const int horizon = n * m + m;
  std::vector<std::vector<bool>> busy(m, std::vector<bool>(horizon, false));
  Schedule s(n, m);
  for (int job = 0; job < n; ++job) {
    // 1-based: machine ((job+1) mod m), with remainder 0 meaning machine m.
    const int first = job % m;
    int ready = 0;
    for (int step = 0; step < m; ++step) {
      const int machine = (first + step) % m;
      int slot = ready;
      while (busy[machine][slot]) ++slot;
      busy[machine][slot] = true;
      s.set_start(job, machine, slot);
      ready = slot + 1;
    }
  }
  return s;
}

int OptimalTotalCost(int n, int m) {
  if (n < 1 || m < 1) throw InvalidInput("OptimalTotalCost needs n, m >= 1");
  int total = 0;
  for (int k = 1; k <= n; ++k) total += (k + m - 1) / m;
  return total * m;
}

std::vector<int> ContinuousMachines(const Schedule& s) {
  std::vector<int> out;
  const int n = s.num_jobs();
  for (int j = 0; j < s.num_machines(); ++j) {
    std::vector<bool> seen(n, false);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int t = s.start(i, j);
      if (t >= n || seen[t]) ok = false;
      else seen[t] = true;
    }
    if (ok) out.push_back(j);
  }
  return out;
}

Schedule JBasedOptimal(const Instance& inst, int machine) {
  const int n = inst.n();
  const int m = inst.m();
  if (machine < 0 || machine >= m) {
    throw InvalidInput("machine " + std::to_string(machine + 1) +
                       " out of range");
  }
  const Schedule base = AdiriAmit(n, m);
  const std::vector<int> continuous = ContinuousMachines(base);
  if (continuous.empty()) {
    throw std::logic_error("AdiriAmit produced no continuous machine");
  }
  // With n divisible by m every machine is continuous; keep the target.
  const int source =
      std::find(continuous.begin(), continuous.end(), machine) != continuous.end()
          ? machine
          : continuous.front();

  // Job at rank k on the source machine becomes the job at rank k of the
  // initial order on the target machine.
  std::vector<int> base_by_rank(n);
  for (int i = 0; i < n; ++i) base_by_rank[base.start(i, source)] = i;
  const std::vector<int> target_order = inst.scheme0().order(machine);
  std::vector<int> relabel(n);
  for (int k = 0; k < n; ++k) relabel[base_by_rank[k]] = target_order[k];

  const int shift = (machine - source + m) % m;
  Schedule out(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      out.set_start(relabel[i], (j + shift) % m, base.start(i, j));
    }
  }
  for (int i = 0; i < n; ++i) {
    if (out.start(i, machine) != inst.scheme0().position[machine][i]) {
      throw std::logic_error("j-based schedule lost the initial order");
    }
  }
  if (CoalitionCost(out, Coalition::Grand(n)) != OptimalTotalCost(n, m)) {
    throw std::logic_error("j-based schedule is not optimal");
  }
  return out;
}

}  // namespace openshop
