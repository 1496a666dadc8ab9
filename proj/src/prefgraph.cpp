// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lexalloc/prefgraph.hpp"

#include <algorithm>
#include <deque>

namespace lexalloc {

namespace {

// Edge x -> y of the item digraph: the holder of x accepts y in exchange.
bool has_edge(const Instance& inst, const Allocation& alloc, ItemId x, ItemId y) {
  const auto holder = alloc.owner(x);
  if (!holder || x == y || alloc.owns(*holder, y)) return false;
  return accepts_exchange(inst, *holder, x, y);
}

struct SearchTree {
  std::vector<std::size_t> depth;
  std::vector<ItemId> parent;
  std::vector<ItemId> order;  // discovery order
};

// BFS over the item digraph from start. Expansion stops at unallocated items
// (they have no holder and hence no out-edges).
SearchTree search_from(const Instance& inst, const Allocation& alloc, ItemId start) {
  const std::size_t m = inst.num_items();
  SearchTree tree{std::vector<std::size_t>(m, kUnavailable), std::vector<ItemId>(m, start), {}};
  tree.depth[index(start)] = 0;
  tree.order.push_back(start);
  for (std::size_t head = 0; head < tree.order.size(); ++head) {
    const ItemId x = tree.order[head];
    for (std::size_t y = 0; y < m; ++y) {
      if (tree.depth[y] != kUnavailable || !has_edge(inst, alloc, x, item_at(y))) continue;
      tree.depth[y] = tree.depth[index(x)] + 1;
      tree.parent[y] = x;
      tree.order.push_back(item_at(y));
    }
  }
  return tree;
}

AlternatingPath trace(const Allocation& alloc, const SearchTree& tree, ItemId start, ItemId end) {
  AlternatingPath path;
  for (ItemId g = end; g != start; g = tree.parent[index(g)]) path.items.push_back(g);
  path.items.push_back(start);
  std::reverse(path.items.begin(), path.items.end());
  for (std::size_t r = 1; r < path.items.size(); ++r) {
    path.agents.push_back(*alloc.owner(path.items[r - 1]));
  }
  return path;
}

}  // namespace

bool accepts_exchange(const Instance& inst, AgentId a, ItemId give, ItemId take) {
  const std::size_t given = inst.class_of(a, give);
  const std::size_t taken = inst.class_of(a, take);
  return inst.goods() ? taken <= given : taken >= given;
}

bool is_alternating_path(const Instance& inst, const Allocation& alloc,
                         const AlternatingPath& path) {
  if (path.items.size() != path.agents.size() + 1) return false;
  for (ItemId g : path.items) {
    if (index(g) >= inst.num_items()) return false;
  }
  ItemSet sorted = path.items;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  for (std::size_t r = 1; r <= path.length(); ++r) {
    const AgentId agent = path.agents[r - 1];
    if (index(agent) >= inst.num_agents()) return false;
    if (!alloc.owns(agent, path.items[r - 1]) || alloc.owns(agent, path.items[r])) return false;
    if (!accepts_exchange(inst, agent, path.items[r - 1], path.items[r])) return false;
  }
  return true;
}

std::optional<AlternatingPath> find_alternating_path(const Instance& inst,
                                                     const Allocation& alloc,
                                                     ItemId start) {
  check_allocation(inst, alloc);
  inst.check_item(start);
  const SearchTree tree = search_from(inst, alloc, start);
  for (ItemId g : tree.order) {
    if (!alloc.allocated(g)) return trace(alloc, tree, start, g);
  }
  return std::nullopt;
}

std::vector<std::size_t> distances_to_unallocated(const Instance& inst,
                                                  const Allocation& alloc) {
  check_allocation(inst, alloc);
  const std::size_t m = inst.num_items();
  std::vector<std::size_t> dist(m, kUnavailable);
  std::deque<ItemId> queue;
  for (std::size_t g = 0; g < m; ++g) {
    if (!alloc.allocated(item_at(g))) {
      dist[g] = 0;
      queue.push_back(item_at(g));
    }
  }
  // Reverse BFS: x precedes y when the holder of x accepts y.
  while (!queue.empty()) {
    const ItemId y = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < m; ++x) {
      if (dist[x] != kUnavailable || !has_edge(inst, alloc, item_at(x), y)) continue;
      dist[x] = dist[index(y)] + 1;
      queue.push_back(item_at(x));
    }
  }
  return dist;
}

ItemSet available_items(const Instance& inst, const Allocation& alloc) {
  const auto dist = distances_to_unallocated(inst, alloc);
  ItemSet out;
  for (std::size_t g = 0; g < dist.size(); ++g) {
    if (dist[g] != kUnavailable) out.push_back(item_at(g));
  }
  return out;
}

Allocation update_along_path(const Instance& inst, const Allocation& alloc,
                             const AlternatingPath& path) {
  check_allocation(inst, alloc);
  if (!is_alternating_path(inst, alloc, path)) {
    fail(ErrorKind::kContract, "not an alternating path for this allocation");
  }
  if (alloc.allocated(path.end())) {
    fail(ErrorKind::kContract, "alternating path does not end in an unallocated item");
  }
  Allocation out = alloc;
  for (std::size_t r = 0; r < path.length(); ++r) out.release(path.items[r]);
  for (std::size_t r = 1; r <= path.length(); ++r) out.assign(path.items[r], path.agents[r - 1]);
  return out;
}

std::optional<ParetoImprovement> find_pareto_improvement(const Instance& inst,
                                                         const Allocation& alloc) {
  check_allocation(inst, alloc);
  const std::size_t m = inst.num_items();
  for (std::size_t x0 = 0; x0 < m; ++x0) {
    const ItemId start = item_at(x0);
    if (!alloc.allocated(start)) continue;
    const SearchTree tree = search_from(inst, alloc, start);
    for (ItemId end : tree.order) {
      const auto holder = alloc.owner(end);
      if (!holder) continue;
      const std::size_t wanted = inst.class_of(*holder, start);
      const std::size_t held = inst.class_of(*holder, end);
      const bool better = inst.goods() ? wanted < held : wanted > held;
      if (better) return ParetoImprovement{trace(alloc, tree, start, end), *holder};
    }
  }
  return std::nullopt;
}

bool is_pareto_optimal(const Instance& inst, const Allocation& alloc) {
  return !find_pareto_improvement(inst, alloc).has_value();
}

Allocation apply_improvement(const Instance& inst, const Allocation& alloc,
                             const ParetoImprovement& improvement) {
  check_allocation(inst, alloc);
  const auto& path = improvement.path;
  if (!is_alternating_path(inst, alloc, path) || !alloc.owns(improvement.beneficiary, path.end())) {
    fail(ErrorKind::kContract, "not a Pareto improvement for this allocation");
  }
  Allocation out = alloc;
  for (ItemId g : path.items) out.release(g);
  for (std::size_t r = 1; r <= path.length(); ++r) out.assign(path.items[r], path.agents[r - 1]);
  out.assign(path.start(), improvement.beneficiary);
  return out;
}

}  // namespace lexalloc
