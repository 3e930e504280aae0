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

#ifndef OPENSHOP_OPTIMAL_HPP_
#define OPENSHOP_OPTIMAL_HPP_

#include <vector>

#include "openshop/shop.hpp"

namespace openshop {

// Compact blocks of an optimal grand-coalition schedule: n = k*m + l.
// Block r < k holds m jobs in slots [r*m, (r+1)*m); when l > 0 a last block
// of l jobs starts at k*m.
struct BlockStructure {
  int full_blocks = 0;  // k
  int remainder = 0;    // l
  std::vector<int> block_sizes;
  std::vector<int> block_starts;
};

BlockStructure Blocks(int n, int m);

// Greedy unit open shop schedule: job i (1-based) starts on machine
// i mod m (machine m when the remainder is zero), runs through machine m,
// wraps to machine 1, and each operation takes the earliest slot that is
// free on its machine and not before the job's previous operation ends.
// Jobs are placed in index order.
Schedule AdiriAmit(int n, int m);

// m * sum_{k=1..n} ceil(k/m), the minimum total completion time.
int OptimalTotalCost(int n, int m);

// Machines whose occupied slots are exactly 0..n-1.
std::vector<int> ContinuousMachines(const Schedule& s);

// An optimal schedule for all jobs whose order on `machine` equals the
// initial order there and whose `machine` runs without idle time. Built by
// relabelling the jobs of AdiriAmit(n, m) and rotating machine indices.
Schedule JBasedOptimal(const Instance& inst, int machine);

}  // namespace openshop

#endif  // OPENSHOP_OPTIMAL_HPP_
