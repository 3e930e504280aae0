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

#include "openshop/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "openshop/optimal.hpp"

namespace openshop {

GeneratorStyle ParseGeneratorStyle(std::string_view name) {
  if (name == "semiactive-random") return GeneratorStyle::kSemiActiveRandom;
  if (name == "permuted-blocks") return GeneratorStyle::kPermutedBlocks;
  throw InvalidInput("unknown generator style '" + std::string(name) + "'");
}

Instance GenerateInstance(int n, int m, std::uint64_t seed, GeneratorStyle style) {
  if (n < 1 || m < 1 || n > Coalition::kMaxPlayers) {
    throw InvalidInput("generator needs 1 <= n <= 32 and m >= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (style == GeneratorStyle::kPermutedBlocks) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const Schedule base = AdiriAmit(n, m);
    Schedule s(n, m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) s.set_start(perm[i], j, base.start(i, j));
    }
    return Instance(std::move(s));
  }
  // Machine j uses slots [n*j, n*j + n), so any orders are feasible.
  Schedule s(n, m);
  for (int j = 0; j < m; ++j) {
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int r = 0; r < n; ++r) s.set_start(perm[r], j, n * j + r);
  }
  return Instance(LeftCompact(s));
}

}  // namespace openshop
