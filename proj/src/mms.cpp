// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lexalloc/mms.hpp"

namespace lexalloc {

namespace {

int floor_div(int a, int b) {
  const int q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

GoodsMmsTrace mms_goods_trace(const Instance& inst, AgentId a) {
  if (!inst.goods()) fail(ErrorKind::kWrongPolarity, "goods threshold requested for chores");
  inst.check_agent(a);
  const ScoreVector sizes = full_score(inst, a);
  GoodsMmsTrace trace;
  std::vector<int> x(sizes.size());
  int open = static_cast<int>(inst.num_agents());
  for (std::size_t l = 0; l < sizes.size(); ++l) {
    trace.open_bundles.push_back(open);
    x[l] = sizes[l] / open;
    open -= sizes[l] - open * x[l];
  }
  trace.threshold = ScoreVector(std::move(x));
  return trace;
}

ScoreVector mms_goods(const Instance& inst, AgentId a) {
  return mms_goods_trace(inst, a).threshold;
}

ScoreVector mms_chores(const Instance& inst, AgentId a) {
  if (inst.goods()) fail(ErrorKind::kWrongPolarity, "chores threshold requested for goods");
  inst.check_agent(a);
  const int n = static_cast<int>(inst.num_agents());
  ScoreVector out = full_score(inst, a);
  bool remainder_seen = false;
  for (std::size_t l = 0; l < out.size(); ++l) {
    if (remainder_seen) {
      out[l] = 0;
    } else {
      remainder_seen = out[l] % n != 0;
      out[l] = floor_div(out[l], n);
    }
  }
  return out;
}

ScoreVector mms_threshold(const Instance& inst, AgentId a) {
  return inst.goods() ? mms_goods(inst, a) : mms_chores(inst, a);
}

std::vector<ScoreVector> mms_thresholds(const Instance& inst) {
  std::vector<ScoreVector> out;
  for (std::size_t a = 0; a < inst.num_agents(); ++a) out.push_back(mms_threshold(inst, agent_at(a)));
  return out;
}

bool satisfies_mms(const Instance& inst, const Allocation& alloc, AgentId a) {
  check_allocation(inst, alloc);
  if (!alloc.complete()) fail(ErrorKind::kContract, "MMS is checked on complete allocations");
  return lex_compare(score(inst, alloc, a), mms_threshold(inst, a)) >= 0;
}

}  // namespace lexalloc
