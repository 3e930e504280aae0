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

#ifndef OPENSHOP_SHOP_HPP_
#define OPENSHOP_SHOP_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Data model for unit-time open shops: every operation takes one slot and
// every job weighs one unit of waiting cost per slot.
//
// Jobs and machines are 0-indexed in the API. Everything that crosses the
// I/O boundary (JSON, CLI, Gantt tables, coalition strings) is 1-indexed.

namespace openshop {

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Start slot for every operation (job, machine). Row-major storage, so the
// defaulted comparison is the lexicographic order on the start matrix.
class Schedule {
 public:
  Schedule() = default;
  Schedule(int num_jobs, int num_machines);

  // rows[i][j] is the start of job i on machine j. Throws InvalidInput on a
  // ragged or empty matrix or on negative entries.
  static Schedule FromRows(const std::vector<std::vector<int>>& rows);

  int num_jobs() const { return n_; }
  int num_machines() const { return m_; }

  int start(int job, int machine) const { return start_[job * m_ + machine]; }
  void set_start(int job, int machine, int slot) {
    start_[job * m_ + machine] = slot;
  }
  std::span<const int> row(int job) const {
    return {start_.data() + job * m_, static_cast<std::size_t>(m_)};
  }

  // One past the last occupied slot.
  int makespan() const;
  std::vector<std::vector<int>> rows() const;

  friend auto operator<=>(const Schedule&, const Schedule&) = default;
  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<int> start_;
};

// A set of jobs, stored as a bitmask (bit i = job i).
class Coalition {
 public:
  using Mask = std::uint32_t;
  static constexpr int kMaxPlayers = 32;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask bits) : bits_(bits) {}

  static Coalition Grand(int n);
  static Coalition Singleton(int job) { return Coalition(Mask{1} << job); }
  // From 0-based job indices.
  static Coalition Of(std::initializer_list<int> jobs);
  static Coalition Of(std::span<const int> jobs);
  // Parses "1,3,5" (1-based). An empty string is the empty coalition.
  static Coalition Parse(std::string_view text, int n);

  constexpr Mask bits() const { return bits_; }
  constexpr bool contains(int job) const { return (bits_ >> job) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  Coalition complement(int n) const;
  bool is_grand(int n) const { return bits_ == Grand(n).bits_; }
  std::vector<int> members() const;
  // "1,3,5" (1-based).
  std::string ToString() const;

  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  Mask bits_ = 0;
};

// position[j][i] is the 0-based rank of job i on machine j.
struct Scheme {
  std::vector<std::vector<int>> position;

  int num_machines() const { return static_cast<int>(position.size()); }
  int num_jobs() const {
    return position.empty() ? 0 : static_cast<int>(position[0].size());
  }
  // Jobs on machine j in processing order.
  std::vector<int> order(int machine) const;
  // Jobs ranked strictly before `job` on `machine`.
  Coalition predecessors(int job, int machine) const;

  friend bool operator==(const Scheme&, const Scheme&) = default;
};

// A unit-time open shop with an initial schedule. The initial schedule is
// validated on construction.
class Instance {
 public:
  explicit Instance(Schedule s0);

  int n() const { return s0_.num_jobs(); }
  int m() const { return s0_.num_machines(); }
  const Schedule& s0() const { return s0_; }
  const Scheme& scheme0() const { return scheme0_; }

 private:
  Schedule s0_;
  Scheme scheme0_;
};

// No machine runs two jobs in one slot and no job runs on two machines in
// one slot.
bool IsFeasible(const Schedule& s);
// Shape-checked variant for raw start matrices; throws InvalidInput when the
// matrix is not n x m.
bool IsFeasibleSchedule(const std::vector<std::vector<int>>& rows, int n,
                        int m);

int OperationCompletion(const Schedule& s, int job, int machine);
int CompletionTime(const Schedule& s, int job);
int CoalitionCost(const Schedule& s, Coalition coalition);

// Throws InvalidInput when the schedule is infeasible.
Scheme SchemeOf(const Schedule& s);

// True iff no single operation can start earlier while every other start
// stays put, the schedule stays feasible and the scheme is unchanged.
bool IsSemiActive(const Schedule& s);

// Repeatedly moves single operations to earlier slots (scheme preserved)
// until the schedule is semi-active. Starts never increase.
Schedule LeftCompact(const Schedule& s);

// Maximal runs of `coalition` that are consecutive in `positions`
// (positions[i] = rank of job i on one machine). Components are listed in
// rank order.
std::vector<Coalition> ConnectedComponents(Coalition coalition,
                                           std::span<const int> positions);

}  // namespace openshop

#endif  // OPENSHOP_SHOP_HPP_
