// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include "lexalloc/core.hpp"
#include "lexalloc/solver_goods.hpp"

namespace lexalloc {

// EF1 and PO for chores. The agent with the fewest chores (ties by sigma)
// takes its least important available chore; holders along the alternating
// path each move to a chore they like at least as much.
class ChoresSolver {
 public:
  // inst must outlive the solver.
  ChoresSolver(const Instance& inst, AgentOrdering sigma);

  bool done() const;
  Pick step();
  Allocation run();

  const Allocation& allocation() const { return alloc_; }

 private:
  const Instance& inst_;
  AgentOrdering sigma_;
  Allocation alloc_;
};

Allocation solve_chores_ef1(const Instance& inst, const AgentOrdering& sigma);

// Two-agent reduction to goods: good i stands for "not doing chore i" and
// sits in the same class as the chore. With two agents the goods bundle of
// one agent is exactly the chore bundle of the other.
struct GoodsReduction {
  Instance goods;
  std::vector<ItemId> chore_of;  // good index -> chore it stands for
};

// Throws Error(kWrongPolarity) for goods, Error(kUnsupported) unless n == 2.
GoodsReduction chores_to_goods(const Instance& chores);

// Maps a goods allocation of the reduced instance back: each chore goes to
// the agent that did not get its good.
Allocation chores_from_goods(const GoodsReduction& reduction, const Allocation& goods);

// EFX and PO for two agents through the reduction. The result is verified
// before it is returned; a failed check throws Error(kInternal).
Allocation solve_chores_efx_po_two_agents(const Instance& inst, const AgentOrdering& sigma);

}  // namespace lexalloc
