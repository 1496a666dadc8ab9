// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

// Named instances shared by the unit and acceptance tests, plus small helpers
// for writing allocations by label.

#pragma once

#include <map>
#include <ostream>
#include <optional>
#include <string>
#include <vector>

#include "lexalloc/core.hpp"
#include "lexalloc/error.hpp"

namespace lexalloc {

// Lets doctest print score vectors in failure messages.
inline std::ostream& operator<<(std::ostream& os, const ScoreVector& s) {
  return os << to_string(s);
}

}  // namespace lexalloc

namespace lexalloc::testing {

using Labels = std::vector<std::string>;
using Prefs = std::vector<Labels>;  // one agent: classes in order of importance

// Agents are named "1".."n" in the order given.
inline Instance make_instance(Polarity polarity, const Labels& items,
                              const std::vector<Prefs>& agents) {
  std::map<std::string, ItemId> ids;
  for (std::size_t g = 0; g < items.size(); ++g) ids.emplace(items[g], item_at(g));
  Labels agent_labels;
  std::vector<Instance::ClassList> classes;
  for (std::size_t a = 0; a < agents.size(); ++a) {
    agent_labels.push_back(std::to_string(a + 1));
    Instance::ClassList list;
    for (const auto& cls : agents[a]) {
      ItemSet members;
      for (const auto& label : cls) members.push_back(ids.at(label));
      list.push_back(std::move(members));
    }
    classes.push_back(std::move(list));
  }
  return Instance(polarity, items, std::move(agent_labels), std::move(classes));
}

// Kind of the lexalloc::Error thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// 1-based agent, matching the agent names.
inline AgentId agent(std::size_t one_based) { return agent_at(one_based - 1); }

inline ItemId item(const Instance& inst, const std::string& label) {
  return *inst.find_item(label);
}

inline ItemSet items(const Instance& inst, const Labels& labels) {
  ItemSet out;
  for (const auto& l : labels) out.push_back(item(inst, l));
  return out;
}

inline Allocation allocation(const Instance& inst, const std::vector<Labels>& bundles) {
  Allocation alloc(inst.num_agents(), inst.num_items());
  for (std::size_t a = 0; a < bundles.size(); ++a) {
    for (const auto& l : bundles[a]) alloc.assign(item(inst, l), agent_at(a));
  }
  return alloc;
}

inline std::vector<Labels> bundles(const Instance& inst, const Allocation& alloc) {
  std::vector<Labels> out(inst.num_agents());
  for (std::size_t a = 0; a < inst.num_agents(); ++a) {
    for (ItemId g : alloc.bundle(agent_at(a))) out[a].push_back(inst.item_label(g));
  }
  return out;
}

inline AgentOrdering ordering(const std::vector<std::size_t>& one_based) {
  std::vector<AgentId> order;
  for (std::size_t a : one_based) order.push_back(agent(a));
  return AgentOrdering(std::move(order));
}

// Three agents, four goods; the solver's worked example for EFX + MMS.
inline Instance goods_three_by_four() {
  return make_instance(Polarity::kGoods, {"g1", "g2", "g3", "g4"},
                       {{{"g1", "g2"}, {"g3", "g4"}},
                        {{"g1"}, {"g2", "g3", "g4"}},
                        {{"g1"}, {"g2", "g3", "g4"}}});
}

// Three agents, seven goods, two classes each; one run per criteria.
inline Instance goods_three_by_seven() {
  return make_instance(Polarity::kGoods, {"g1", "g2", "g3", "g4", "g5", "g6", "g7"},
                       {{{"g1", "g2", "g3"}, {"g4", "g5", "g6", "g7"}},
                        {{"g1", "g2", "g3"}, {"g4", "g5", "g6", "g7"}},
                        {{"g1", "g2", "g3", "g4", "g5"}, {"g6", "g7"}}});
}

// Two agents who both dread c1: letting agents choose freely breaks EFX.
inline Instance chores_two_by_three() {
  return make_instance(Polarity::kChores, {"c1", "c2", "c3"},
                       {{{"c1"}, {"c2", "c3"}}, {{"c1"}, {"c2", "c3"}}});
}

// Four agents, five chores; the middle chore c3 blocks every EFX extension.
inline Instance chores_four_by_five() {
  return make_instance(Polarity::kChores, {"c1", "c2", "c3", "c4", "c5"},
                       {{{"c1", "c2"}, {"c3"}, {"c4", "c5"}},
                        {{"c1", "c2"}, {"c3"}, {"c4", "c5"}},
                        {{"c4", "c5"}, {"c3"}, {"c1", "c2"}},
                        {{"c4", "c5"}, {"c3"}, {"c1", "c2"}}});
}

// Three agents, four chores; worked example for the chores solver.
inline Instance chores_three_by_four() {
  return make_instance(Polarity::kChores, {"c1", "c2", "c3", "c4"},
                       {{{"c1"}, {"c2", "c3", "c4"}},
                        {{"c1", "c2", "c3"}, {"c4"}},
                        {{"c1", "c2"}, {"c3", "c4"}}});
}

// Three agents, three chores; has an MMS + PO allocation that is not EFX.
inline Instance chores_three_by_three() {
  return make_instance(Polarity::kChores, {"c1", "c2", "c3"},
                       {{{"c1"}, {"c2", "c3"}},
                        {{"c1"}, {"c2", "c3"}},
                        {{"c1", "c2", "c3"}}});
}

// Two agents, two goods, one shared class.
inline Instance goods_symmetric_two() {
  return make_instance(Polarity::kGoods, {"g1", "g2"}, {{{"g1", "g2"}}, {{"g1", "g2"}}});
}

}  // namespace lexalloc::testing
