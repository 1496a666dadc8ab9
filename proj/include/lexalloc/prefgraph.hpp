// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Alternating paths in the agent-item preference graph.
//
// The graph is the complete bipartite agent-item graph weighted by the class
// index Instance::class_of(agent, item). An alternating path
//
//   (x_0, i_1, x_1, ..., i_s, x_s)
//
// has pairwise distinct items, x_{r-1} is held by i_r, x_r is not, and i_r
// weakly prefers x_r to x_{r-1}: for goods class_of(i_r, x_r) <=
// class_of(i_r, x_{r-1}), for chores the reverse.
//
// All searches are breadth-first with neighbors visited in ascending item
// order, so every result is deterministic.

#include <cstddef>
#include <optional>
#include <vector>

#include "lexalloc/core.hpp"

namespace lexalloc {

struct AlternatingPath {
  ItemSet items;                // x_0 .. x_s
  std::vector<AgentId> agents;  // i_1 .. i_s

  std::size_t length() const { return agents.size(); }
  ItemId start() const { return items.front(); }
  ItemId end() const { return items.back(); }

  friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

// Whether agent a is willing to hand over `give` in exchange for `take`.
bool accepts_exchange(const Instance& inst, AgentId a, ItemId give, ItemId take);

// True iff path satisfies every alternating-path condition for alloc. Does not
// require the path to end in an unallocated item.
bool is_alternating_path(const Instance& inst, const Allocation& alloc,
                         const AlternatingPath& path);

// Shortest path from start to an unallocated item, smallest id sequence among
// the shortest. Zero-length if start is unallocated; nullopt iff start is
// unavailable.
std::optional<AlternatingPath> find_alternating_path(const Instance& inst,
                                                     const Allocation& alloc,
                                                     ItemId start);

inline constexpr std::size_t kUnavailable = static_cast<std::size_t>(-1);

// For every item, the length of the shortest alternating path from it to an
// unallocated item, or kUnavailable.
std::vector<std::size_t> distances_to_unallocated(const Instance& inst,
                                                  const Allocation& alloc);

ItemSet available_items(const Instance& inst, const Allocation& alloc);

// Moves every agent on path one step along it. x_0 ends up unallocated.
// Throws Error(kContract) if path is not a valid alternating path ending in
// an unallocated item.
Allocation update_along_path(const Instance& inst, const Allocation& alloc,
                             const AlternatingPath& path);

// An alternating path whose last item is held by `beneficiary`, who strictly
// prefers the first item of the path to it. Rotating items along the path and
// handing x_0 to the beneficiary is a Pareto improvement.
struct ParetoImprovement {
  AlternatingPath path;
  AgentId beneficiary;
};

std::optional<ParetoImprovement> find_pareto_improvement(const Instance& inst,
                                                         const Allocation& alloc);

// Works on partial allocations: only the assigned items are considered.
bool is_pareto_optimal(const Instance& inst, const Allocation& alloc);

// Applies an improvement found by find_pareto_improvement.
Allocation apply_improvement(const Instance& inst, const Allocation& alloc,
                             const ParetoImprovement& improvement);

}  // namespace lexalloc
