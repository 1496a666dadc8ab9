// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Fairness and efficiency checks on complete allocations. Each check reports
// a witness when the property fails. The envy checks compare score vectors
// directly and share nothing with the solvers.

#include <optional>
#include <vector>

#include "lexalloc/core.hpp"
#include "lexalloc/prefgraph.hpp"
#include "lexalloc/serialize.hpp"

namespace lexalloc {

struct EnvyWitness {
  AgentId envious;
  AgentId envied;
  ScoreVector own_score;     // envious agent's view of its own bundle
  ScoreVector other_score;   // envious agent's view of the envied bundle
  std::optional<ItemId> item;  // EFX: an item whose removal leaves envy
};

struct EnvyVerdict {
  bool holds = true;
  std::optional<EnvyWitness> witness;
};

struct ParetoVerdict {
  bool holds = true;
  std::optional<ParetoImprovement> witness;
};

// All three throw Error(kContract) on partial allocations.
EnvyVerdict check_ef(const Instance& inst, const Allocation& alloc);
EnvyVerdict check_ef1(const Instance& inst, const Allocation& alloc);
EnvyVerdict check_efx(const Instance& inst, const Allocation& alloc);

// Accepts partial allocations.
ParetoVerdict check_pareto(const Instance& inst, const Allocation& alloc);

inline bool is_ef(const Instance& i, const Allocation& a) { return check_ef(i, a).holds; }
inline bool is_ef1(const Instance& i, const Allocation& a) { return check_ef1(i, a).holds; }
inline bool is_efx(const Instance& i, const Allocation& a) { return check_efx(i, a).holds; }

struct AgentMms {
  bool holds;
  ScoreVector score;
  ScoreVector threshold;
};

struct Report {
  EnvyVerdict ef;
  EnvyVerdict ef1;
  EnvyVerdict efx;
  std::vector<AgentMms> mms;
  ParetoVerdict po;
  std::size_t envy_edges = 0;

  bool mms_holds() const;
};

Report verify(const Instance& inst, const Allocation& alloc);

Json report_to_json(const Instance& inst, const Report& report);

}  // namespace lexalloc
