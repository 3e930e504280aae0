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

#include "openshop/exact_lp.hpp"

#include <stdexcept>

namespace openshop {

namespace {

// Tableau over columns [0, num_cols) for the structural variables followed
// by one artificial column per row. The artificial block starts as the
// identity, so it always holds B^{-1}.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& a,
          const std::vector<Rational>& b)
      : rows_(static_cast<int>(a.size())),
        cols_(a.empty() ? 0 : static_cast<int>(a[0].size())),
        sign_(rows_, 1) {
    t_.assign(rows_, std::vector<Rational>(cols_ + rows_));
    rhs_.resize(rows_);
    basis_.resize(rows_);
    for (int r = 0; r < rows_; ++r) {
      if (static_cast<int>(a[r].size()) != cols_) {
        throw std::invalid_argument("ragged constraint matrix");
      }
      sign_[r] = b[r] < 0 ? -1 : 1;
      for (int c = 0; c < cols_; ++c) t_[r][c] = sign_[r] * a[r][c];
      t_[r][cols_ + r] = 1;
      rhs_[r] = sign_[r] * b[r];
      basis_[r] = cols_ + r;
    }
  }

  // Runs simplex iterations for the given column costs (maximization).
  // Columns at or beyond `enter_limit` never enter. Returns false when
  // unbounded.
  bool Optimize(const std::vector<Rational>& cost, int enter_limit) {
    while (true) {
      const std::vector<Rational> z = ReducedCosts(cost);
      int enter = -1;
      for (int c = 0; c < enter_limit; ++c) {
        if (z[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio;
      for (int r = 0; r < rows_; ++r) {
        if (t_[r][enter] <= 0) continue;
        Rational ratio = rhs_[r] / t_[r][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  // Drives zero-level artificials out of the basis where possible.
  void ExpelArtificials() {
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < cols_) continue;
      for (int c = 0; c < cols_; ++c) {
        if (t_[r][c] != 0) {
          Pivot(r, c);
          break;
        }
      }
    }
  }

  Rational Value(const std::vector<Rational>& cost) const {
    Rational total = 0;
    for (int r = 0; r < rows_; ++r) total += cost[basis_[r]] * rhs_[r];
    return total;
  }

  std::vector<Rational> Primal() const {
    std::vector<Rational> x(cols_);
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < cols_) x[basis_[r]] = rhs_[r];
    }
    return x;
  }

  // y^T = c_B^T B^{-1}, mapped back through the row sign flips.
  std::vector<Rational> Dual(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(rows_);
    for (int i = 0; i < rows_; ++i) {
      Rational sum = 0;
      for (int r = 0; r < rows_; ++r) sum += cost[basis_[r]] * t_[r][cols_ + i];
      y[i] = sign_[i] * sum;
    }
    return y;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  std::vector<Rational> ReducedCosts(const std::vector<Rational>& cost) const {
    std::vector<Rational> z(cols_ + rows_);
    for (int c = 0; c < cols_ + rows_; ++c) {
      Rational sum = 0;
      for (int r = 0; r < rows_; ++r) {
        if (t_[r][c] != 0) sum += cost[basis_[r]] * t_[r][c];
      }
      z[c] = sum - cost[c];
    }
    return z;
  }

  void Pivot(int row, int col) {
    const Rational pivot = t_[row][col];
    for (auto& v : t_[row]) v /= pivot;
    rhs_[row] /= pivot;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || t_[r][col] == 0) continue;
      const Rational factor = t_[r][col];
      for (int c = 0; c < cols_ + rows_; ++c) {
        if (t_[row][c] != 0) t_[r][c] -= factor * t_[row][c];
      }
      rhs_[r] -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  int rows_;
  int cols_;
  std::vector<int> sign_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution MaximizeStandardForm(const std::vector<std::vector<Rational>>& a,
                                const std::vector<Rational>& b,
                                const std::vector<Rational>& c) {
  if (a.size() != b.size()) throw std::invalid_argument("rows of A and b differ");
  Tableau tab(a, b);
  if (static_cast<int>(c.size()) != tab.cols()) {
    throw std::invalid_argument("cost vector has the wrong length");
  }
  const int total = tab.cols() + tab.rows();

  // Phase 1: maximize minus the sum of artificials.
  std::vector<Rational> phase1(total);
  for (int r = 0; r < tab.rows(); ++r) phase1[tab.cols() + r] = -1;
  tab.Optimize(phase1, total);
  LpSolution out;
  if (tab.Value(phase1) != 0) {
    out.status = LpSolution::Status::kInfeasible;
    return out;
  }
  tab.ExpelArtificials();

  // Phase 2.
  std::vector<Rational> phase2(total);
  for (int k = 0; k < tab.cols(); ++k) phase2[k] = c[k];
  if (!tab.Optimize(phase2, tab.cols())) {
    out.status = LpSolution::Status::kUnbounded;
    return out;
  }
  out.status = LpSolution::Status::kOptimal;
  out.objective = tab.Value(phase2);
  out.primal = tab.Primal();
  out.dual = tab.Dual(phase2);
  return out;
}

}  // namespace openshop
