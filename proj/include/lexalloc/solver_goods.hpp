// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Picking-sequence solver for goods with pluggable fairness criteria.
//
// Each iteration the prioritized agent with the fewest goods (ties by sigma)
// takes its best available good, reached through an alternating path that
// ends at an unallocated good. Afterwards the criteria decide which agents
// stay prioritized. The output is always complete and Pareto optimal; the
// criteria add EF1 (null), EFX, MMS, or EFX and MMS.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lexalloc/core.hpp"
#include "lexalloc/prefgraph.hpp"

namespace lexalloc {

enum class Criteria { kNull, kEfx, kMms, kEfxAndMms };

const char* to_string(Criteria c);
// Accepts "null", "efx", "mms" and "efx-mms".
std::optional<Criteria> parse_criteria(std::string_view text);

struct SolverState {
  Allocation allocation;
  std::vector<AgentId> prioritized;  // ascending
  std::size_t iteration = 0;
};

// One iteration: `agent` received `item`, after the holders along `path`
// moved one step.
struct Pick {
  AgentId agent;
  ItemId item;
  AlternatingPath path;
};

// Best available item for agent: most important class for goods, least
// important for chores; then the shortest path to an unallocated item; then
// the smallest id. nullopt iff nothing is unallocated.
std::optional<Pick> choose_pick(const Instance& inst, const Allocation& alloc, AgentId agent);

// What the criteria check sees: the state right after an assignment. All
// agents of one iteration are judged against the same snapshot.
struct CriteriaSnapshot {
  const Instance& instance;
  const Allocation& allocation;
  std::span<const AgentId> prioritized;
  const AgentOrdering& sigma;
  std::span<const ScoreVector> thresholds;  // per agent, used by the MMS branch
};

// Evaluates the criteria for every agent of a snapshot; the potential envy
// graph and its source component are built at most once.
class CriteriaCheck {
 public:
  CriteriaCheck(const CriteriaSnapshot& snapshot, Criteria criteria);

  // Precondition: agent is in snapshot.prioritized.
  bool keep(AgentId agent) const;

  // Source component used by the EFX branch (empty for null and MMS).
  std::span<const AgentId> envy_source() const { return source_; }

 private:
  const CriteriaSnapshot& snapshot_;
  Criteria criteria_;
  std::vector<AgentId> source_;
};

bool check_criteria(const CriteriaSnapshot& snapshot, AgentId agent, Criteria criteria);

class GoodsSolver {
 public:
  // inst must outlive the solver. Throws Error(kWrongPolarity) for chores
  // and Error(kInput) if sigma does not order exactly the instance's agents.
  GoodsSolver(const Instance& inst, AgentOrdering sigma, Criteria criteria);

  bool done() const;
  Pick step();
  Allocation run();

  const SolverState& state() const { return state_; }
  std::span<const ScoreVector> thresholds() const { return thresholds_; }

 private:
  AgentId next_agent() const;

  const Instance& inst_;
  AgentOrdering sigma_;
  Criteria criteria_;
  std::vector<ScoreVector> thresholds_;
  SolverState state_;
};

Allocation solve_goods(const Instance& inst, const AgentOrdering& sigma, Criteria criteria);

}  // namespace lexalloc
