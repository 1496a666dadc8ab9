// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Brute-force ground truth for small instances. Every search is exhaustive
// or refuses up front with Error(kBudget); nothing is sampled.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lexalloc/core.hpp"

namespace lexalloc {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// n^m, or Error(kBudget) if it exceeds budget.
std::uint64_t count_allocations(std::size_t num_agents, std::size_t num_items,
                                std::uint64_t budget = kDefaultBudget);

// Visits all n^m complete allocations in mixed-radix order (item 0 is the
// fastest-moving digit). Stops early when visit returns false.
void for_each_allocation(const Instance& inst, std::uint64_t budget,
                         const std::function<bool(const Allocation&)>& visit);

std::vector<Allocation> enumerate_allocations(const Instance& inst,
                                              std::uint64_t budget = kDefaultBudget);

// First envy-free allocation in enumeration order.
std::optional<Allocation> ef_exists(const Instance& inst, std::uint64_t budget = kDefaultBudget);

// Some allocation of the same assigned items that Pareto dominates alloc.
// Works on partial allocations.
std::optional<Allocation> po_dominance_search(const Instance& inst, const Allocation& alloc,
                                              std::uint64_t budget = kDefaultBudget);

// Maximin share by partition search: max over all allocations of the
// lexicographically worst bundle, seen by agent a.
ScoreVector mms_enumerate(const Instance& inst, AgentId a,
                          std::uint64_t budget = kDefaultBudget);

// Every complete allocation that is both EFX and PO.
std::vector<Allocation> efx_po_catalogue(const Instance& inst,
                                         std::uint64_t budget = kDefaultBudget);

}  // namespace lexalloc
