// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Closed-form maximin-share thresholds under weakly lexicographic
// preferences.

#include <vector>

#include "lexalloc/core.hpp"

namespace lexalloc {

// Goods threshold. With c_l the size of class l and r_1 = n bundles still
// open, x_l = floor(c_l / r_l) and r_{l+1} = r_l - (c_l - r_l * x_l): the
// bundles that received an extra item from class l already beat the minimum
// and drop out.
struct GoodsMmsTrace {
  ScoreVector threshold;
  std::vector<int> open_bundles;  // r_1 .. r_k
};

GoodsMmsTrace mms_goods_trace(const Instance& inst, AgentId a);
ScoreVector mms_goods(const Instance& inst, AgentId a);

// Chores threshold: every class divides evenly until the first class whose
// size n does not divide; that class contributes its rounded-up share and the
// remaining classes contribute nothing.
ScoreVector mms_chores(const Instance& inst, AgentId a);

// Dispatches on polarity.
ScoreVector mms_threshold(const Instance& inst, AgentId a);
std::vector<ScoreVector> mms_thresholds(const Instance& inst);

// Requires a complete allocation (Error(kContract) otherwise).
bool satisfies_mms(const Instance& inst, const Allocation& alloc, AgentId a);

}  // namespace lexalloc
