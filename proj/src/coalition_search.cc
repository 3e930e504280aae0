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

#include "openshop/coalition_search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <string>
#include <vector>

#include "openshop/optimal.hpp"

namespace openshop {

SearchLimitExceeded::SearchLimitExceeded(int best_cost, int lower_bound,
                                         int initial_cost, std::int64_t nodes)
    : std::runtime_error("node limit reached after " + std::to_string(nodes) +
                         " nodes; coalition cost in [" +
                         std::to_string(lower_bound) + ", " +
                         std::to_string(best_cost) + "]"),
      best_cost_(best_cost),
      lower_bound_(lower_bound),
      initial_cost_(initial_cost),
      nodes_(nodes) {}

int DefaultHorizon(const Instance& inst) {
  return inst.s0().makespan() + inst.n() * inst.m();
}

namespace {

using Mask = Coalition::Mask;

struct LimitReached {};

// Per-operation start domain [lo, hi]. lo == hi marks a pinned operation.
struct Domain {
  int lo = 0;
  int hi = 0;
};

// Domains implied by the time condition; members are free below the
// horizon.
std::vector<Domain> InitialDomains(const Instance& inst, Coalition coalition,
                                   TimeCondition time, int horizon) {
  const int n = inst.n();
  const int m = inst.m();
  std::vector<Domain> dom(static_cast<std::size_t>(n) * m, Domain{0, horizon - 1});
  if (coalition.is_grand(n)) return dom;
  for (int i = 0; i < n; ++i) {
    if (coalition.contains(i)) continue;
    for (int j = 0; j < m; ++j) {
      Domain& d = dom[i * m + j];
      const int t0 = inst.s0().start(i, j);
      switch (time) {
        case TimeCondition::kNone:
          break;
        case TimeCondition::kStartEqual:
          d = {t0, t0};
          break;
        case TimeCondition::kStartLeq:
          d.hi = std::min(d.hi, t0);
          break;
        case TimeCondition::kCompletionLeq:
          d.hi = std::min(d.hi, CompletionTime(inst.s0(), i) - 1);
          break;
      }
    }
  }
  return dom;
}

// Depth-first search over a time-indexed timetable.
//
// In kMinimize mode it looks for schedules strictly cheaper than the
// incumbent; in kFeasible mode it stops at the first schedule whose
// coalition cost is at most `cap`. Once every member operation is placed
// the cost is fixed and the remaining outsider operations only need one
// feasible completion.
class TimetableSearch {
 public:
  enum class Mode { kMinimize, kFeasible };

  TimetableSearch(const Instance& inst, Coalition coalition, Regime regime,
                  int horizon, std::vector<Domain> domains)
      : n_(inst.n()),
        m_(inst.m()),
        horizon_(horizon),
        members_(coalition.bits()),
        scheme_(coalition.is_grand(inst.n()) ? SchemeCondition::kNone
                                             : regime.scheme),
        dom_(std::move(domains)) {
    const Scheme& s0 = inst.scheme0();
    pos0_ = s0.position;
    pred0_.assign(m_, std::vector<Mask>(n_));
    reserved_.assign(m_, std::vector<int>(n_, -1));
    for (int j = 0; j < m_; ++j) {
      for (int i = 0; i < n_; ++i) {
        pred0_[j][i] = s0.predecessors(i, j).bits();
        if (!IsMember(i)) reserved_[j][pos0_[j][i]] = i;
      }
    }
    const int size = coalition.size();
    root_bound_ = size == 0 ? 0 : OptimalTotalCost(size, m_);
  }

  int root_bound() const { return root_bound_; }

  // Returns true when a schedule was found; `best()` holds it.
  bool Run(Mode mode, int threshold, std::int64_t* nodes, std::int64_t limit) {
    mode_ = mode;
    threshold_ = threshold;
    nodes_ = nodes;
    limit_ = limit;
    Reset();
    found_ = false;
    SlotStart(0);
    return found_;
  }

  bool found() const { return found_; }
  const Schedule& best() const { return best_; }
  int best_cost() const { return best_cost_; }

 private:
  enum class Outcome { kContinue, kFound, kStop };

  bool IsMember(int job) const { return (members_ >> job) & 1U; }
  const Domain& dom(int job, int machine) const { return dom_[job * m_ + machine]; }
  bool Pending(int job, int machine) const {
    return ((done_[job] >> machine) & 1U) == 0;
  }

  void Reset() {
    start_ = Schedule(n_, m_);
    done_.assign(n_, 0);
    remaining_.assign(n_, m_);
    machine_jobs_.assign(m_, 0);
    machine_count_.assign(m_, 0);
    last_busy_.assign(m_, -1);
    last_free_.assign(n_, -1);
    busy_now_ = 0;
    pending_ops_ = n_ * m_;
    pending_member_ops_ = std::popcount(members_) * m_;
    member_cost_ = 0;
    completing_ = false;
  }

  bool Acceptable(int cost) const { return cost < threshold_; }

  Outcome SlotStart(int t) {
    if (++*nodes_ > limit_) throw LimitReached{};
    if (pending_member_ops_ == 0 && !completing_) {
      if (!Acceptable(member_cost_)) return Outcome::kContinue;
      completing_ = true;
      if (pending_ops_ == 0) snapshot_ = start_;
      const Outcome r = pending_ops_ == 0 ? Outcome::kFound : SlotBody(t);
      completing_ = false;
      if (r == Outcome::kStop) return r;
      if (r == Outcome::kFound) {
        found_ = true;
        best_ = snapshot_;
        best_cost_ = member_cost_;
        if (mode_ == Mode::kFeasible || best_cost_ <= root_bound_) {
          return Outcome::kStop;
        }
        threshold_ = best_cost_;
      }
      return Outcome::kContinue;
    }
    if (completing_ && pending_ops_ == 0) {
      snapshot_ = start_;
      return Outcome::kFound;
    }
    return SlotBody(t);
  }

  Outcome SlotBody(int t) {
    if (t >= horizon_) return Outcome::kContinue;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < m_; ++j) {
        if (Pending(i, j) && dom(i, j).hi < t) return Outcome::kContinue;
      }
    }
    if (!completing_ && !Acceptable(LowerBound(t))) return Outcome::kContinue;
    return MachineStep(t, 0);
  }

  // Completed members plus, for each unfinished member, the bound from its
  // own remaining operations and from machine capacity.
  int LowerBound(int t) const {
    int bound = member_cost_;
    std::array<int, Coalition::kMaxPlayers> rem{};
    int count = 0;
    for (int i = 0; i < n_; ++i) {
      if (IsMember(i) && remaining_[i] > 0) rem[count++] = remaining_[i];
    }
    std::sort(rem.begin(), rem.begin() + count);
    int prefix = 0;
    for (int k = 0; k < count; ++k) {
      prefix += rem[k];
      bound += t + std::max(rem[k], (prefix + m_ - 1) / m_);
    }
    return bound;
  }

  bool CanPlace(int job, int machine, int t) const {
    const Domain& d = dom(job, machine);
    if (d.lo > t || d.hi < t) return false;
    // A free slot of this job after the machine's last operation means the
    // operation could start earlier with the scheme unchanged.
    if (d.lo < d.hi && last_free_[job] > last_busy_[machine]) return false;
    switch (scheme_) {
      case SchemeCondition::kNone:
        return true;
      case SchemeCondition::kPredecessorSet:
        if (!IsMember(job)) return machine_jobs_[machine] == pred0_[machine][job];
        for (int k = 0; k < n_; ++k) {
          if (!IsMember(k) && Pending(k, machine) &&
              pos0_[machine][k] < pos0_[machine][job]) {
            return false;
          }
        }
        return true;
      case SchemeCondition::kPosition: {
        const int rank = machine_count_[machine];
        const int owner = reserved_[machine][rank];
        if (owner >= 0 && owner != job) return false;
        if (!IsMember(job) && pos0_[machine][job] != rank) return false;
        return true;
      }
    }
    return true;
  }

  Outcome PlaceAndContinue(int job, int machine, int t) {
    const int saved_last_busy = last_busy_[machine];
    const int saved_cost = member_cost_;
    start_.set_start(job, machine, t);
    done_[job] |= Mask{1} << machine;
    machine_jobs_[machine] |= Mask{1} << job;
    ++machine_count_[machine];
    last_busy_[machine] = t;
    busy_now_ |= Mask{1} << job;
    --remaining_[job];
    --pending_ops_;
    if (IsMember(job)) {
      --pending_member_ops_;
      if (remaining_[job] == 0) member_cost_ += t + 1;
    }

    const Outcome r = MachineStep(t, machine + 1);

    member_cost_ = saved_cost;
    if (IsMember(job)) ++pending_member_ops_;
    ++pending_ops_;
    ++remaining_[job];
    busy_now_ &= ~(Mask{1} << job);
    last_busy_[machine] = saved_last_busy;
    --machine_count_[machine];
    machine_jobs_[machine] &= ~(Mask{1} << job);
    done_[job] &= ~(Mask{1} << machine);
    return r;
  }

  Outcome MachineStep(int t, int machine) {
    if (machine == m_) return CloseSlot(t);

    int forced = -1;
    for (int i = 0; i < n_; ++i) {
      if (Pending(i, machine) && dom(i, machine).hi == t) {
        if (forced >= 0) return Outcome::kContinue;
        forced = i;
      }
    }
    if (forced >= 0) {
      if ((busy_now_ >> forced) & 1U) return Outcome::kContinue;
      if (!CanPlace(forced, machine, t)) return Outcome::kContinue;
      return PlaceAndContinue(forced, machine, t);
    }

    // Members first so that good incumbents show up early.
    for (int pass = 0; pass < 2; ++pass) {
      const bool want_member = pass == 0;
      for (int i = 0; i < n_; ++i) {
        if (IsMember(i) != want_member) continue;
        if (!Pending(i, machine) || ((busy_now_ >> i) & 1U)) continue;
        if (!CanPlace(i, machine, t)) continue;
        const Outcome r = PlaceAndContinue(i, machine, t);
        if (r != Outcome::kContinue) return r;
      }
    }
    return MachineStep(t, machine + 1);
  }

  Outcome CloseSlot(int t) {
    std::array<int, Coalition::kMaxPlayers> saved_free{};
    std::copy(last_free_.begin(), last_free_.end(), saved_free.begin());
    const Mask saved_busy = busy_now_;
    for (int i = 0; i < n_; ++i) {
      if (((busy_now_ >> i) & 1U) == 0) last_free_[i] = t;
    }
    busy_now_ = 0;

    // A machine whose every pending operation is unpinned and blocked by an
    // idle slot of its job can never run again.
    bool dead = false;
    for (int j = 0; j < m_ && !dead; ++j) {
      bool any = false;
      bool all_blocked = true;
      for (int i = 0; i < n_; ++i) {
        if (!Pending(i, j)) continue;
        any = true;
        const Domain& d = dom(i, j);
        if (d.lo == d.hi || last_free_[i] <= last_busy_[j]) {
          all_blocked = false;
          break;
        }
      }
      dead = any && all_blocked;
    }

    const Outcome r = dead ? Outcome::kContinue : SlotStart(t + 1);
    busy_now_ = saved_busy;
    std::copy(saved_free.begin(), saved_free.begin() + n_, last_free_.begin());
    return r;
  }

  const int n_;
  const int m_;
  const int horizon_;
  const Mask members_;
  const SchemeCondition scheme_;
  std::vector<Domain> dom_;
  std::vector<std::vector<int>> pos0_;
  std::vector<std::vector<Mask>> pred0_;
  std::vector<std::vector<int>> reserved_;
  int root_bound_ = 0;

  Mode mode_ = Mode::kMinimize;
  int threshold_ = 0;
  std::int64_t* nodes_ = nullptr;
  std::int64_t limit_ = 0;
  bool found_ = false;
  Schedule best_;
  int best_cost_ = 0;

  Schedule start_;
  Schedule snapshot_;
  std::vector<Mask> done_;
  std::vector<int> remaining_;
  std::vector<Mask> machine_jobs_;
  std::vector<int> machine_count_;
  std::vector<int> last_busy_;
  std::vector<int> last_free_;
  Mask busy_now_ = 0;
  int pending_ops_ = 0;
  int pending_member_ops_ = 0;
  int member_cost_ = 0;
  bool completing_ = false;
};

}  // namespace

CoalitionResult MinCoalitionCost(const Instance& inst, Coalition coalition,
                                 Regime regime, const SearchConfig& cfg) {
  const int n = inst.n();
  const int m = inst.m();
  if ((coalition.bits() & ~Coalition::Grand(n).bits()) != 0) {
    throw InvalidInput("coalition has members outside 1.." + std::to_string(n));
  }
  const int horizon = cfg.horizon.value_or(DefaultHorizon(inst));
  if (horizon < inst.s0().makespan()) {
    throw InvalidInput("horizon " + std::to_string(horizon) +
                       " is below the initial makespan " +
                       std::to_string(inst.s0().makespan()));
  }
  const int initial_cost = CoalitionCost(inst.s0(), coalition);

  CoalitionResult result;
  if (coalition.empty()) {
    if (cfg.record_witness) result.witness = inst.s0();
    return result;
  }

  std::vector<Domain> domains =
      InitialDomains(inst, coalition, regime.time, horizon);
  const std::int64_t limit =
      cfg.node_limit.value_or(std::numeric_limits<std::int64_t>::max());
  std::int64_t nodes = 0;

  TimetableSearch minimize(inst, coalition, regime, horizon, domains);
  int min_cost = initial_cost;
  Schedule best = inst.s0();
  try {
    if (initial_cost > minimize.root_bound() &&
        minimize.Run(TimetableSearch::Mode::kMinimize, initial_cost, &nodes,
                     limit)) {
      min_cost = minimize.best_cost();
      best = minimize.best();
    }
  } catch (const LimitReached&) {
    const int found = minimize.found() ? minimize.best_cost() : initial_cost;
    throw SearchLimitExceeded(found, minimize.root_bound(), initial_cost, nodes);
  }

  result.min_cost = min_cost;
  result.value = initial_cost - min_cost;

  if (cfg.record_witness) {
    // Fix operations in row-major order to the smallest start that still
    // admits a schedule of optimal cost. `best` always satisfies the fixes
    // made so far, so its entry bounds the scan.
    try {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
          Domain& d = domains[i * m + j];
          const int known = best.start(i, j);
          const Domain original = d;
          bool improved = false;
          for (int v = original.lo; v < known && !improved; ++v) {
            d = {v, v};
            TimetableSearch probe(inst, coalition, regime, horizon, domains);
            if (probe.Run(TimetableSearch::Mode::kFeasible, min_cost + 1,
                          &nodes, limit)) {
              best = probe.best();
              improved = true;
            }
          }
          d = {best.start(i, j), best.start(i, j)};
        }
      }
      result.witness_is_lexmin = true;
    } catch (const LimitReached&) {
      // `best` is still optimal; only the tie-break is incomplete.
      result.witness_is_lexmin = false;
    }
    result.witness = best;
  }
  result.nodes = nodes;
  return result;
}

bool HorizonStabilityCheck(const Instance& inst, Coalition coalition,
                           Regime regime, int horizon) {
  SearchConfig cfg;
  cfg.horizon = horizon;
  const int at_h = MinCoalitionCost(inst, coalition, regime, cfg).min_cost;
  cfg.horizon = horizon + inst.m();
  const int at_h_plus = MinCoalitionCost(inst, coalition, regime, cfg).min_cost;
  return at_h == at_h_plus;
}

}  // namespace openshop
