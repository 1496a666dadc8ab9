// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lexalloc/solver_chores.hpp"

#include <algorithm>
#include <tuple>

#include "lexalloc/verify.hpp"

namespace lexalloc {

ChoresSolver::ChoresSolver(const Instance& inst, AgentOrdering sigma)
    : inst_(inst), sigma_(std::move(sigma)), alloc_(inst.num_agents(), inst.num_items()) {
  if (inst.goods()) fail(ErrorKind::kWrongPolarity, "chores solver called on a goods instance");
  if (sigma_.size() != inst.num_agents()) {
    fail(ErrorKind::kInput, "agent ordering length does not match the agent count");
  }
}

bool ChoresSolver::done() const { return alloc_.complete(); }

Pick ChoresSolver::step() {
  if (done()) fail(ErrorKind::kContract, "solver already finished");
  const auto order = sigma_.order();
  const AgentId agent = *std::min_element(order.begin(), order.end(), [&](AgentId a, AgentId b) {
    return std::make_tuple(alloc_.bundle_size(a), sigma_.position(a)) <
           std::make_tuple(alloc_.bundle_size(b), sigma_.position(b));
  });
  auto pick = choose_pick(inst_, alloc_, agent);
  if (!pick) fail(ErrorKind::kInternal, "no available chore while chores remain unallocated");
  alloc_ = update_along_path(inst_, alloc_, pick->path);
  alloc_.assign(pick->item, agent);
  return std::move(*pick);
}

Allocation ChoresSolver::run() {
  while (!done()) step();
  return alloc_;
}

Allocation solve_chores_ef1(const Instance& inst, const AgentOrdering& sigma) {
  return ChoresSolver(inst, sigma).run();
}

GoodsReduction chores_to_goods(const Instance& chores) {
  if (chores.goods()) fail(ErrorKind::kWrongPolarity, "reduction expects a chores instance");
  if (chores.num_agents() != 2) {
    fail(ErrorKind::kUnsupported, "chores-to-goods reduction needs exactly two agents");
  }
  std::vector<std::string> items;
  std::vector<ItemId> chore_of;
  for (std::size_t c = 0; c < chores.num_items(); ++c) {
    items.push_back("not-" + chores.item_label(item_at(c)));
    chore_of.push_back(item_at(c));
  }
  std::vector<std::string> agents;
  std::vector<Instance::ClassList> classes;
  for (std::size_t a = 0; a < 2; ++a) {
    agents.push_back(chores.agent_label(agent_at(a)));
    // Same item indices, so the class lists carry over unchanged.
    classes.push_back(chores.classes(agent_at(a)));
  }
  return {Instance(Polarity::kGoods, std::move(items), std::move(agents), std::move(classes)),
          std::move(chore_of)};
}

Allocation chores_from_goods(const GoodsReduction& reduction, const Allocation& goods) {
  check_allocation(reduction.goods, goods);
  if (!goods.complete()) fail(ErrorKind::kContract, "goods allocation must be complete");
  Allocation out(2, reduction.chore_of.size());
  for (std::size_t g = 0; g < reduction.chore_of.size(); ++g) {
    const AgentId holder = *goods.owner(item_at(g));
    out.assign(reduction.chore_of[g], agent_at(1 - index(holder)));
  }
  return out;
}

Allocation solve_chores_efx_po_two_agents(const Instance& inst, const AgentOrdering& sigma) {
  const GoodsReduction reduction = chores_to_goods(inst);
  const Allocation goods = solve_goods(reduction.goods, sigma, Criteria::kEfx);
  Allocation out = chores_from_goods(reduction, goods);
  if (!check_efx(inst, out).holds || !check_pareto(inst, out).holds) {
    fail(ErrorKind::kInternal,
         "two-agent chores reduction produced an allocation that is not EFX and PO");
  }
  return out;
}

}  // namespace lexalloc
