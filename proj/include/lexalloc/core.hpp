// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Instance model for weakly lexicographic fair division: agents, items,
// per-agent indifference classes, score vectors and allocations.
//
// Agents and items are dense 0-based indices wrapped in enum classes. Labels
// from the input are kept for display and serialization only. Indifference
// classes are 0-based as well, with class 0 the most important one.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexalloc/error.hpp"

namespace lexalloc {

enum class Polarity { kGoods, kChores };

enum class AgentId : std::uint32_t {};
enum class ItemId : std::uint32_t {};

constexpr std::size_t index(AgentId a) { return static_cast<std::size_t>(a); }
constexpr std::size_t index(ItemId g) { return static_cast<std::size_t>(g); }
constexpr AgentId agent_at(std::size_t i) { return static_cast<AgentId>(i); }
constexpr ItemId item_at(std::size_t i) { return static_cast<ItemId>(i); }

using ItemSet = std::vector<ItemId>;

class Instance {
 public:
  using ClassList = std::vector<ItemSet>;

  // Validates that every agent's classes partition the item set. Throws
  // Error(kInput) naming the offending agent or item otherwise.
  Instance(Polarity polarity, std::vector<std::string> item_labels,
           std::vector<std::string> agent_labels,
           std::vector<ClassList> classes);

  Polarity polarity() const { return polarity_; }
  bool goods() const { return polarity_ == Polarity::kGoods; }
  std::size_t num_agents() const { return agent_labels_.size(); }
  std::size_t num_items() const { return item_labels_.size(); }

  std::size_t num_classes(AgentId a) const;
  std::span<const ItemId> class_items(AgentId a, std::size_t k) const;
  const ClassList& classes(AgentId a) const;

  // Class index of item g for agent a (the preference graph weight).
  std::size_t class_of(AgentId a, ItemId g) const;

  const std::string& agent_label(AgentId a) const;
  const std::string& item_label(ItemId g) const;
  std::optional<AgentId> find_agent(std::string_view label) const;
  std::optional<ItemId> find_item(std::string_view label) const;

  void check_agent(AgentId a) const;
  void check_item(ItemId g) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Polarity polarity_;
  std::vector<std::string> item_labels_;
  std::vector<std::string> agent_labels_;
  std::vector<ClassList> classes_;
  std::vector<std::uint32_t> class_of_;  // num_agents x num_items
};

// Per-class item counts of a bundle as seen by one agent. Entries are
// non-negative for goods and non-positive for chores.
class ScoreVector {
 public:
  ScoreVector() = default;
  explicit ScoreVector(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t k) const { return entries_[k]; }
  int& operator[](std::size_t k) { return entries_[k]; }
  std::span<const int> entries() const { return entries_; }

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;

 private:
  std::vector<int> entries_;
};

// Lexicographic comparison. Throws Error(kInput) on a length mismatch.
std::strong_ordering lex_compare(const ScoreVector& a, const ScoreVector& b);

std::string to_string(const ScoreVector& s);

enum class Preference { kStrict, kIndifferent, kWorse };

class Allocation {
 public:
  Allocation() = default;
  Allocation(std::size_t num_agents, std::size_t num_items);

  std::size_t num_agents() const { return sizes_.size(); }
  std::size_t num_items() const { return owners_.size(); }

  std::optional<AgentId> owner(ItemId g) const { return owners_[index(g)]; }
  bool allocated(ItemId g) const { return owners_[index(g)].has_value(); }
  bool owns(AgentId a, ItemId g) const { return owners_[index(g)] == a; }
  std::size_t bundle_size(AgentId a) const { return sizes_[index(a)]; }
  bool complete() const;

  // Items held by a, ascending.
  ItemSet bundle(AgentId a) const;
  ItemSet unallocated() const;

  // Assigning an item that already has an owner moves it.
  void assign(ItemId g, AgentId a);
  void release(ItemId g);

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<std::optional<AgentId>> owners_;
  std::vector<std::size_t> sizes_;
};

// Tie-breaking order over agents (a permutation).
class AgentOrdering {
 public:
  AgentOrdering() = default;
  // Throws Error(kInput) unless order is a permutation of 0..n-1.
  explicit AgentOrdering(std::vector<AgentId> order);
  static AgentOrdering identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  std::span<const AgentId> order() const { return order_; }
  std::size_t position(AgentId a) const { return position_[index(a)]; }
  bool before(AgentId a, AgentId b) const { return position(a) < position(b); }

 private:
  std::vector<AgentId> order_;
  std::vector<std::size_t> position_;
};

ScoreVector score(const Instance& inst, AgentId a, std::span<const ItemId> bundle);
ScoreVector score(const Instance& inst, const Allocation& alloc, AgentId a);

// Score of the whole item set, s_a(M).
ScoreVector full_score(const Instance& inst, AgentId a);

Preference prefers(const Instance& inst, AgentId a, std::span<const ItemId> x,
                   std::span<const ItemId> y);

// Throws Error(kInput) if alloc does not fit inst.
void check_allocation(const Instance& inst, const Allocation& alloc);

}  // namespace lexalloc
