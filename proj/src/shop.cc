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

#include "openshop/shop.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace openshop {

Schedule::Schedule(int num_jobs, int num_machines)
    : n_(num_jobs), m_(num_machines) {
  if (num_jobs < 1 || num_machines < 1) {
    throw InvalidInput("schedule needs at least one job and one machine");
  }
  start_.assign(static_cast<std::size_t>(n_) * m_, 0);
}

Schedule Schedule::FromRows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows[0].empty()) {
    throw InvalidInput("schedule needs at least one job and one machine");
  }
  const int n = static_cast<int>(rows.size());
  const int m = static_cast<int>(rows[0].size());
  Schedule s(n, m);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != m) {
      throw InvalidInput("schedule rows must all have " + std::to_string(m) +
                         " entries");
    }
    for (int j = 0; j < m; ++j) {
      if (rows[i][j] < 0) throw InvalidInput("start times must be >= 0");
      s.set_start(i, j, rows[i][j]);
    }
  }
  return s;
}

int Schedule::makespan() const {
  return start_.empty() ? 0 : *std::max_element(start_.begin(), start_.end()) + 1;
}

std::vector<std::vector<int>> Schedule::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (int i = 0; i < n_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

Coalition Coalition::Grand(int n) {
  if (n < 0 || n > kMaxPlayers) throw InvalidInput("coalition size out of range");
  return Coalition(n == kMaxPlayers ? ~Mask{0} : (Mask{1} << n) - 1);
}

Coalition Coalition::Of(std::initializer_list<int> jobs) {
  return Of(std::span<const int>(jobs.begin(), jobs.size()));
}

Coalition Coalition::Of(std::span<const int> jobs) {
  Mask bits = 0;
  for (int job : jobs) {
    if (job < 0 || job >= kMaxPlayers) throw InvalidInput("job index out of range");
    bits |= Mask{1} << job;
  }
  return Coalition(bits);
}

Coalition Coalition::Parse(std::string_view text, int n) {
  Mask bits = 0;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int job = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), job);
    if (ec != std::errc() || ptr != token.data() + token.size() || job < 1 ||
        job > n) {
      throw InvalidInput("bad coalition member '" + std::string(token) + "'");
    }
    bits |= Mask{1} << (job - 1);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Coalition(bits);
}

int Coalition::size() const { return std::popcount(bits_); }

Coalition Coalition::complement(int n) const {
  return Coalition(Grand(n).bits_ & ~bits_);
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string Coalition::ToString() const {
  std::string out;
  for (int job : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(job + 1);
  }
  return out;
}

std::vector<int> Scheme::order(int machine) const {
  std::vector<int> out(position[machine].size());
  for (std::size_t i = 0; i < out.size(); ++i) out[position[machine][i]] = static_cast<int>(i);
  return out;
}

Coalition Scheme::predecessors(int job, int machine) const {
  Coalition::Mask bits = 0;
  const auto& pos = position[machine];
  for (std::size_t k = 0; k < pos.size(); ++k) {
    if (pos[k] < pos[job]) bits |= Coalition::Mask{1} << k;
  }
  return Coalition(bits);
}

Instance::Instance(Schedule s0) : s0_(std::move(s0)) {
  if (s0_.num_jobs() < 1 || s0_.num_machines() < 1) {
    throw InvalidInput("instance needs n >= 1 and m >= 1");
  }
  if (s0_.num_jobs() > Coalition::kMaxPlayers) {
    throw InvalidInput("at most 32 jobs are supported");
  }
  if (!IsFeasible(s0_)) throw InvalidInput("initial schedule is infeasible");
  scheme0_ = SchemeOf(s0_);
}

bool IsFeasible(const Schedule& s) {
  const int n = s.num_jobs();
  const int m = s.num_machines();
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      if (s.start(i, j) < 0) return false;
      for (int k = i + 1; k < n; ++k) {
        if (s.start(i, j) == s.start(k, j)) return false;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int l = j + 1; l < m; ++l) {
        if (s.start(i, j) == s.start(i, l)) return false;
      }
    }
  }
  return true;
}

bool IsFeasibleSchedule(const std::vector<std::vector<int>>& rows, int n,
                        int m) {
  if (n < 1 || m < 1 || static_cast<int>(rows.size()) != n) {
    throw InvalidInput("start matrix is not " + std::to_string(n) + "x" +
                       std::to_string(m));
  }
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m) {
      throw InvalidInput("start matrix is not " + std::to_string(n) + "x" +
                         std::to_string(m));
    }
    for (int v : r) {
      if (v < 0) return false;
    }
  }
  return IsFeasible(Schedule::FromRows(rows));
}

int OperationCompletion(const Schedule& s, int job, int machine) {
  return s.start(job, machine) + 1;
}

int CompletionTime(const Schedule& s, int job) {
  const auto r = s.row(job);
  return *std::max_element(r.begin(), r.end()) + 1;
}

int CoalitionCost(const Schedule& s, Coalition coalition) {
  int total = 0;
  for (int job : coalition.members()) total += CompletionTime(s, job);
  return total;
}

Scheme SchemeOf(const Schedule& s) {
  if (!IsFeasible(s)) throw InvalidInput("scheme of an infeasible schedule");
  const int n = s.num_jobs();
  const int m = s.num_machines();
  Scheme scheme;
  scheme.position.assign(m, std::vector<int>(n));
  std::vector<int> jobs(n);
  for (int j = 0; j < m; ++j) {
    std::iota(jobs.begin(), jobs.end(), 0);
    std::sort(jobs.begin(), jobs.end(),
              [&](int a, int b) { return s.start(a, j) < s.start(b, j); });
    for (int k = 0; k < n; ++k) scheme.position[j][jobs[k]] = k;
  }
  return scheme;
}

namespace {

// Earliest slot the operation (job, machine) could move to while keeping
// its rank on the machine and the job free; equals the current start when
// no move is possible.
int EarliestShift(const Schedule& s, int job, int machine) {
  const int t = s.start(job, machine);
  int floor = -1;  // start of the machine predecessor
  for (int k = 0; k < s.num_jobs(); ++k) {
    const int other = s.start(k, machine);
    if (k != job && other < t) floor = std::max(floor, other);
  }
  for (int cand = floor + 1; cand < t; ++cand) {
    bool job_free = true;
    for (int l = 0; l < s.num_machines(); ++l) {
      if (l != machine && s.start(job, l) == cand) {
        job_free = false;
        break;
      }
    }
    if (job_free) return cand;
  }
  return t;
}

}  // namespace

bool IsSemiActive(const Schedule& s) {
  if (!IsFeasible(s)) throw InvalidInput("semi-activity of an infeasible schedule");
  const Scheme scheme = SchemeOf(s);
  for (int i = 0; i < s.num_jobs(); ++i) {
    for (int j = 0; j < s.num_machines(); ++j) {
      // Try every smaller start, keeping everything else fixed.
      for (int cand = 0; cand < s.start(i, j); ++cand) {
        Schedule moved = s;
        moved.set_start(i, j, cand);
        if (IsFeasible(moved) && SchemeOf(moved) == scheme) return false;
      }
    }
  }
  return true;
}

Schedule LeftCompact(const Schedule& s) {
  if (!IsFeasible(s)) throw InvalidInput("cannot compact an infeasible schedule");
  Schedule out = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < out.num_jobs(); ++i) {
      for (int j = 0; j < out.num_machines(); ++j) {
        const int earliest = EarliestShift(out, i, j);
        if (earliest < out.start(i, j)) {
          out.set_start(i, j, earliest);
          changed = true;
        }
      }
    }
  }
  return out;
}

std::vector<Coalition> ConnectedComponents(Coalition coalition,
                                           std::span<const int> positions) {
  const int n = static_cast<int>(positions.size());
  std::vector<int> by_rank(n);
  for (int i = 0; i < n; ++i) by_rank[positions[i]] = i;
  std::vector<Coalition> components;
  Coalition::Mask run = 0;
  for (int r = 0; r < n; ++r) {
    const int job = by_rank[r];
    if (coalition.contains(job)) {
      run |= Coalition::Mask{1} << job;
    } else if (run != 0) {
      components.emplace_back(run);
      run = 0;
    }
  }
  if (run != 0) components.emplace_back(run);
  return components;
}

}  // namespace openshop
