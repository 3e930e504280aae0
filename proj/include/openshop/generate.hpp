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

#ifndef OPENSHOP_GENERATE_HPP_
#define OPENSHOP_GENERATE_HPP_

#include <cstdint>
#include <string_view>

#include "openshop/shop.hpp"

namespace openshop {

enum class GeneratorStyle {
  // Random per-machine job orders laid out on disjoint slot ranges, then
  // left-compacted. Always semi-active, usually not optimal.
  kSemiActiveRandom,
  // Optimal block schedule with shuffled job labels.
  kPermutedBlocks,
};

GeneratorStyle ParseGeneratorStyle(std::string_view name);

// Deterministic for a given (n, m, seed, style).
Instance GenerateInstance(int n, int m, std::uint64_t seed,
                          GeneratorStyle style = GeneratorStyle::kSemiActiveRandom);

}  // namespace openshop

#endif  // OPENSHOP_GENERATE_HPP_
