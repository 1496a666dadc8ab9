// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lexalloc/solver_goods.hpp"

#include <algorithm>
#include <tuple>

#include "lexalloc/envy.hpp"
#include "lexalloc/mms.hpp"

namespace lexalloc {

const char* to_string(Criteria c) {
  switch (c) {
    case Criteria::kNull: return "null";
    case Criteria::kEfx: return "efx";
    case Criteria::kMms: return "mms";
    case Criteria::kEfxAndMms: return "efx-mms";
  }
  return "?";
}

std::optional<Criteria> parse_criteria(std::string_view text) {
  if (text == "null") return Criteria::kNull;
  if (text == "efx") return Criteria::kEfx;
  if (text == "mms") return Criteria::kMms;
  if (text == "efx-mms") return Criteria::kEfxAndMms;
  return std::nullopt;
}

std::optional<Pick> choose_pick(const Instance& inst, const Allocation& alloc, AgentId agent) {
  const auto dist = distances_to_unallocated(inst, alloc);
  std::optional<ItemId> best;
  std::tuple<std::size_t, std::size_t> best_key;
  for (std::size_t g = 0; g < dist.size(); ++g) {
    if (dist[g] == kUnavailable) continue;
    const std::size_t cls = inst.class_of(agent, item_at(g));
    // Goods: smaller class first. Chores: larger class first.
    const std::size_t rank = inst.goods() ? cls : inst.num_classes(agent) - 1 - cls;
    const auto key = std::make_tuple(rank, dist[g]);
    if (!best || key < best_key) {
      best = item_at(g);
      best_key = key;
    }
  }
  if (!best) return std::nullopt;
  auto path = find_alternating_path(inst, alloc, *best);
  if (!path) fail(ErrorKind::kInternal, "available item has no alternating path");
  return Pick{agent, *best, std::move(*path)};
}

CriteriaCheck::CriteriaCheck(const CriteriaSnapshot& snapshot, Criteria criteria)
    : snapshot_(snapshot), criteria_(criteria) {
  const bool efx = criteria == Criteria::kEfx || criteria == Criteria::kEfxAndMms;
  if (efx && !snapshot.prioritized.empty()) {
    const EnvyGraph graph =
        potential_envy_graph(snapshot.instance, snapshot.allocation, snapshot.prioritized);
    source_ = source_scc(graph, snapshot.sigma);
  }
}

bool CriteriaCheck::keep(AgentId agent) const {
  if (criteria_ == Criteria::kNull) return true;
  if (criteria_ == Criteria::kEfx || criteria_ == Criteria::kEfxAndMms) {
    if (std::find(source_.begin(), source_.end(), agent) != source_.end()) return true;
  }
  if (criteria_ == Criteria::kMms || criteria_ == Criteria::kEfxAndMms) {
    const ScoreVector own = score(snapshot_.instance, snapshot_.allocation, agent);
    if (lex_compare(own, snapshot_.thresholds[index(agent)]) <= 0) return true;
  }
  return false;
}

bool check_criteria(const CriteriaSnapshot& snapshot, AgentId agent, Criteria criteria) {
  return CriteriaCheck(snapshot, criteria).keep(agent);
}

GoodsSolver::GoodsSolver(const Instance& inst, AgentOrdering sigma, Criteria criteria)
    : inst_(inst), sigma_(std::move(sigma)), criteria_(criteria) {
  if (!inst.goods()) fail(ErrorKind::kWrongPolarity, "goods solver called on a chores instance");
  if (sigma_.size() != inst.num_agents()) {
    fail(ErrorKind::kInput, "agent ordering length does not match the agent count");
  }
  thresholds_ = mms_thresholds(inst);
  state_.allocation = Allocation(inst.num_agents(), inst.num_items());
  for (std::size_t a = 0; a < inst.num_agents(); ++a) state_.prioritized.push_back(agent_at(a));
}

bool GoodsSolver::done() const { return state_.allocation.complete(); }

AgentId GoodsSolver::next_agent() const {
  std::vector<AgentId> everyone;
  std::span<const AgentId> pool = state_.prioritized;
  if (pool.empty()) {
    for (std::size_t a = 0; a < inst_.num_agents(); ++a) everyone.push_back(agent_at(a));
    pool = everyone;
  }
  const auto& alloc = state_.allocation;
  return *std::min_element(pool.begin(), pool.end(), [&](AgentId a, AgentId b) {
    return std::make_tuple(alloc.bundle_size(a), sigma_.position(a)) <
           std::make_tuple(alloc.bundle_size(b), sigma_.position(b));
  });
}

Pick GoodsSolver::step() {
  if (done()) fail(ErrorKind::kContract, "solver already finished");
  const AgentId agent = next_agent();
  auto pick = choose_pick(inst_, state_.allocation, agent);
  if (!pick) fail(ErrorKind::kInternal, "no available good while goods remain unallocated");

  state_.allocation = update_along_path(inst_, state_.allocation, pick->path);
  state_.allocation.assign(pick->item, agent);
  ++state_.iteration;

  const CriteriaSnapshot snapshot{inst_, state_.allocation, state_.prioritized, sigma_, thresholds_};
  const CriteriaCheck check(snapshot, criteria_);
  std::vector<AgentId> kept;
  for (AgentId a : state_.prioritized) {
    if (check.keep(a)) kept.push_back(a);
  }
  state_.prioritized = std::move(kept);
  return std::move(*pick);
}

Allocation GoodsSolver::run() {
  while (!done()) step();
  return state_.allocation;
}

Allocation solve_goods(const Instance& inst, const AgentOrdering& sigma, Criteria criteria) {
  return GoodsSolver(inst, sigma, criteria).run();
}

}  // namespace lexalloc
