// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lexalloc/core.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace lexalloc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInput: return "input error";
    case ErrorKind::kWrongPolarity: return "wrong polarity";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kContract: return "contract violation";
    case ErrorKind::kBudget: return "budget exceeded";
    case ErrorKind::kInternal: return "internal error";
  }
  return "unknown error";
}

namespace {

constexpr std::uint32_t kNoClass = std::numeric_limits<std::uint32_t>::max();

void check_unique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      fail(ErrorKind::kInput, std::string("duplicate ") + what + " '" + l + "'");
    }
  }
}

}  // namespace

Instance::Instance(Polarity polarity, std::vector<std::string> item_labels,
                   std::vector<std::string> agent_labels,
                   std::vector<ClassList> classes)
    : polarity_(polarity),
      item_labels_(std::move(item_labels)),
      agent_labels_(std::move(agent_labels)),
      classes_(std::move(classes)) {
  if (agent_labels_.empty()) fail(ErrorKind::kInput, "instance has no agents");
  if (classes_.size() != agent_labels_.size()) {
    fail(ErrorKind::kInput, "class lists do not match the agent count");
  }
  check_unique(agent_labels_, "agent");
  check_unique(item_labels_, "item");

  const std::size_t n = agent_labels_.size();
  const std::size_t m = item_labels_.size();
  class_of_.assign(n * m, kNoClass);
  for (std::size_t a = 0; a < n; ++a) {
    const std::string who = "agent '" + agent_labels_[a] + "'";
    for (std::size_t k = 0; k < classes_[a].size(); ++k) {
      if (classes_[a][k].empty()) fail(ErrorKind::kInput, who + " has an empty indifference class");
      for (ItemId g : classes_[a][k]) {
        if (index(g) >= m) fail(ErrorKind::kInput, who + " lists an unknown item");
        auto& slot = class_of_[a * m + index(g)];
        if (slot != kNoClass) {
          fail(ErrorKind::kInput, who + " lists item '" + item_labels_[index(g)] + "' twice");
        }
        slot = static_cast<std::uint32_t>(k);
      }
    }
    for (std::size_t g = 0; g < m; ++g) {
      if (class_of_[a * m + g] == kNoClass) {
        fail(ErrorKind::kInput, who + " does not rank item '" + item_labels_[g] + "'");
      }
    }
  }
}

std::size_t Instance::num_classes(AgentId a) const { return classes_[index(a)].size(); }

std::span<const ItemId> Instance::class_items(AgentId a, std::size_t k) const {
  return classes_[index(a)][k];
}

const Instance::ClassList& Instance::classes(AgentId a) const { return classes_[index(a)]; }

std::size_t Instance::class_of(AgentId a, ItemId g) const {
  return class_of_[index(a) * num_items() + index(g)];
}

const std::string& Instance::agent_label(AgentId a) const { return agent_labels_[index(a)]; }
const std::string& Instance::item_label(ItemId g) const { return item_labels_[index(g)]; }

std::optional<AgentId> Instance::find_agent(std::string_view label) const {
  auto it = std::find(agent_labels_.begin(), agent_labels_.end(), label);
  if (it == agent_labels_.end()) return std::nullopt;
  return agent_at(static_cast<std::size_t>(it - agent_labels_.begin()));
}

std::optional<ItemId> Instance::find_item(std::string_view label) const {
  auto it = std::find(item_labels_.begin(), item_labels_.end(), label);
  if (it == item_labels_.end()) return std::nullopt;
  return item_at(static_cast<std::size_t>(it - item_labels_.begin()));
}

void Instance::check_agent(AgentId a) const {
  if (index(a) >= num_agents()) {
    fail(ErrorKind::kInput, "unknown agent index " + std::to_string(index(a)));
  }
}

void Instance::check_item(ItemId g) const {
  if (index(g) >= num_items()) {
    fail(ErrorKind::kInput, "unknown item index " + std::to_string(index(g)));
  }
}

std::strong_ordering lex_compare(const ScoreVector& a, const ScoreVector& b) {
  if (a.size() != b.size()) {
    fail(ErrorKind::kInput, "score vectors of different length: " + to_string(a) +
                                " vs " + to_string(b));
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] <=> b[k];
  }
  return std::strong_ordering::equal;
}

std::string to_string(const ScoreVector& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s[k]);
  }
  return out + ")";
}

Allocation::Allocation(std::size_t num_agents, std::size_t num_items)
    : owners_(num_items), sizes_(num_agents, 0) {}

bool Allocation::complete() const {
  return std::all_of(owners_.begin(), owners_.end(),
                     [](const auto& o) { return o.has_value(); });
}

ItemSet Allocation::bundle(AgentId a) const {
  ItemSet out;
  out.reserve(sizes_[index(a)]);
  for (std::size_t g = 0; g < owners_.size(); ++g) {
    if (owners_[g] == a) out.push_back(item_at(g));
  }
  return out;
}

ItemSet Allocation::unallocated() const {
  ItemSet out;
  for (std::size_t g = 0; g < owners_.size(); ++g) {
    if (!owners_[g]) out.push_back(item_at(g));
  }
  return out;
}

void Allocation::assign(ItemId g, AgentId a) {
  release(g);
  owners_[index(g)] = a;
  ++sizes_[index(a)];
}

void Allocation::release(ItemId g) {
  if (auto& o = owners_[index(g)]) {
    --sizes_[index(*o)];
    o.reset();
  }
}

AgentOrdering::AgentOrdering(std::vector<AgentId> order)
    : order_(std::move(order)), position_(order_.size(), order_.size()) {
  for (std::size_t p = 0; p < order_.size(); ++p) {
    const std::size_t a = index(order_[p]);
    if (a >= order_.size() || position_[a] != order_.size()) {
      fail(ErrorKind::kInput, "agent ordering is not a permutation");
    }
    position_[a] = p;
  }
}

AgentOrdering AgentOrdering::identity(std::size_t n) {
  std::vector<AgentId> order(n);
  for (std::size_t a = 0; a < n; ++a) order[a] = agent_at(a);
  return AgentOrdering(std::move(order));
}

ScoreVector score(const Instance& inst, AgentId a, std::span<const ItemId> bundle) {
  inst.check_agent(a);
  std::vector<int> entries(inst.num_classes(a), 0);
  std::vector<bool> seen(inst.num_items(), false);
  const int unit = inst.goods() ? 1 : -1;
  for (ItemId g : bundle) {
    inst.check_item(g);
    if (seen[index(g)]) fail(ErrorKind::kInput, "bundle lists an item twice");
    seen[index(g)] = true;
    entries[inst.class_of(a, g)] += unit;
  }
  return ScoreVector(std::move(entries));
}

ScoreVector score(const Instance& inst, const Allocation& alloc, AgentId a) {
  inst.check_agent(a);
  std::vector<int> entries(inst.num_classes(a), 0);
  const int unit = inst.goods() ? 1 : -1;
  for (std::size_t g = 0; g < alloc.num_items(); ++g) {
    if (alloc.owner(item_at(g)) == a) entries[inst.class_of(a, item_at(g))] += unit;
  }
  return ScoreVector(std::move(entries));
}

ScoreVector full_score(const Instance& inst, AgentId a) {
  std::vector<int> entries;
  const int unit = inst.goods() ? 1 : -1;
  for (const auto& cls : inst.classes(a)) entries.push_back(unit * static_cast<int>(cls.size()));
  return ScoreVector(std::move(entries));
}

Preference prefers(const Instance& inst, AgentId a, std::span<const ItemId> x,
                   std::span<const ItemId> y) {
  const auto c = lex_compare(score(inst, a, x), score(inst, a, y));
  if (c > 0) return Preference::kStrict;
  if (c < 0) return Preference::kWorse;
  return Preference::kIndifferent;
}

void check_allocation(const Instance& inst, const Allocation& alloc) {
  if (alloc.num_agents() != inst.num_agents() || alloc.num_items() != inst.num_items()) {
    fail(ErrorKind::kInput, "allocation does not match the instance dimensions");
  }
}

}  // namespace lexalloc
