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

#ifndef OPENSHOP_EXACT_LP_HPP_
#define OPENSHOP_EXACT_LP_HPP_

#include <gmpxx.h>

#include <vector>

namespace openshop {

using Rational = mpq_class;

struct LpSolution {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Rational objective;
  std::vector<Rational> primal;  // one entry per column
  // Row multipliers y with y^T A >= c and y^T b = objective at optimality.
  std::vector<Rational> dual;
};

// maximize c^T x  subject to  A x = b,  x >= 0.
//
// Dense two-phase tableau simplex over exact rationals with Bland's rule,
// so it terminates on degenerate problems. Meant for small problems (a few
// dozen rows, a few thousand columns).
LpSolution MaximizeStandardForm(const std::vector<std::vector<Rational>>& a,
                                const std::vector<Rational>& b,
                                const std::vector<Rational>& c);

}  // namespace openshop

#endif  // OPENSHOP_EXACT_LP_HPP_
