// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lexalloc/oracle.hpp"

#include "lexalloc/verify.hpp"

namespace lexalloc {

namespace {

// Odometer over the given items: each digit is the holder of one item.
bool odometer(Allocation& alloc, std::span<const ItemId> items, std::size_t num_agents,
              std::uint64_t budget, const std::function<bool(const Allocation&)>& visit) {
  count_allocations(num_agents, items.size(), budget);
  for (ItemId g : items) alloc.assign(g, agent_at(0));
  while (true) {
    if (!visit(alloc)) return false;
    std::size_t d = 0;
    for (; d < items.size(); ++d) {
      const std::size_t holder = index(*alloc.owner(items[d]));
      if (holder + 1 < num_agents) {
        alloc.assign(items[d], agent_at(holder + 1));
        break;
      }
      alloc.assign(items[d], agent_at(0));
    }
    if (d == items.size()) return true;
  }
}

}  // namespace

std::uint64_t count_allocations(std::size_t num_agents, std::size_t num_items,
                                std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t g = 0; g < num_items; ++g) {
    if (num_agents != 0 && total > budget / num_agents) total = budget + 1;
    else total *= num_agents;
    if (total > budget) {
      fail(ErrorKind::kBudget, std::to_string(num_agents) + "^" + std::to_string(num_items) +
                                   " allocations exceed the budget of " +
                                   std::to_string(budget));
    }
  }
  return total;
}

void for_each_allocation(const Instance& inst, std::uint64_t budget,
                         const std::function<bool(const Allocation&)>& visit) {
  Allocation alloc(inst.num_agents(), inst.num_items());
  ItemSet items;
  for (std::size_t g = 0; g < inst.num_items(); ++g) items.push_back(item_at(g));
  odometer(alloc, items, inst.num_agents(), budget, visit);
}

std::vector<Allocation> enumerate_allocations(const Instance& inst, std::uint64_t budget) {
  std::vector<Allocation> out;
  for_each_allocation(inst, budget, [&](const Allocation& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

std::optional<Allocation> ef_exists(const Instance& inst, std::uint64_t budget) {
  std::optional<Allocation> found;
  for_each_allocation(inst, budget, [&](const Allocation& a) {
    if (is_ef(inst, a)) found = a;
    return !found;
  });
  return found;
}

std::optional<Allocation> po_dominance_search(const Instance& inst, const Allocation& alloc,
                                              std::uint64_t budget) {
  check_allocation(inst, alloc);
  ItemSet assigned;
  for (std::size_t g = 0; g < inst.num_items(); ++g) {
    if (alloc.allocated(item_at(g))) assigned.push_back(item_at(g));
  }
  std::vector<ScoreVector> before;
  for (std::size_t a = 0; a < inst.num_agents(); ++a) before.push_back(score(inst, alloc, agent_at(a)));

  std::optional<Allocation> found;
  Allocation candidate(inst.num_agents(), inst.num_items());
  odometer(candidate, assigned, inst.num_agents(), budget, [&](const Allocation& b) {
    bool strict = false;
    for (std::size_t a = 0; a < inst.num_agents(); ++a) {
      const auto c = lex_compare(score(inst, b, agent_at(a)), before[a]);
      if (c < 0) return true;
      strict = strict || c > 0;
    }
    if (strict) found = b;
    return !strict;
  });
  return found;
}

ScoreVector mms_enumerate(const Instance& inst, AgentId a, std::uint64_t budget) {
  inst.check_agent(a);
  std::optional<ScoreVector> best;
  for_each_allocation(inst, budget, [&](const Allocation& alloc) {
    std::optional<ScoreVector> worst;
    for (std::size_t b = 0; b < inst.num_agents(); ++b) {
      ScoreVector s = score(inst, a, alloc.bundle(agent_at(b)));
      if (!worst || lex_compare(s, *worst) < 0) worst = std::move(s);
    }
    if (!best || lex_compare(*worst, *best) > 0) best = std::move(worst);
    return true;
  });
  return *best;
}

std::vector<Allocation> efx_po_catalogue(const Instance& inst, std::uint64_t budget) {
  std::vector<Allocation> out;
  for_each_allocation(inst, budget, [&](const Allocation& a) {
    if (is_efx(inst, a) && check_pareto(inst, a).holds) out.push_back(a);
    return true;
  });
  return out;
}

}  // namespace lexalloc
