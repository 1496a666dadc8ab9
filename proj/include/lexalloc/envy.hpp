// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lexalloc/core.hpp"

namespace lexalloc {

// Directed graph over a subset of agents. An edge (i, j) means i envies j,
// actually or potentially depending on how the graph was built.
class EnvyGraph {
 public:
  EnvyGraph() = default;
  // Nodes are kept in ascending agent order.
  explicit EnvyGraph(std::vector<AgentId> nodes);

  std::span<const AgentId> nodes() const { return nodes_; }
  bool contains(AgentId a) const;
  bool empty() const { return nodes_.empty(); }

  void add_edge(AgentId from, AgentId to);
  bool has_edge(AgentId from, AgentId to) const;
  std::vector<std::pair<AgentId, AgentId>> edges() const;
  std::size_t num_edges() const;

  // Successors of a node, given and returned as positions in nodes().
  const std::vector<std::size_t>& successors(std::size_t pos) const { return out_[pos]; }
  std::size_t position(AgentId a) const;

 private:
  std::vector<AgentId> nodes_;
  std::vector<std::vector<std::size_t>> out_;
};

// Goods only: whether `envious` would envy `envied` if `envied` also received
// every currently available good. Throws Error(kWrongPolarity) for chores.
bool potentially_envies(const Instance& inst, const Allocation& alloc, AgentId envious,
                        AgentId envied);

// Potential envy graph restricted to the agents in `prioritized`.
EnvyGraph potential_envy_graph(const Instance& inst, const Allocation& alloc,
                               std::span<const AgentId> prioritized);

// Actual envy among all agents: edge (i, j) iff i strictly prefers A_j to A_i.
EnvyGraph envy_graph(const Instance& inst, const Allocation& alloc);

// Tarjan's algorithm. Components come out in reverse topological order of the
// condensation (sinks first); members of each component ascend.
std::vector<std::vector<AgentId>> strongly_connected_components(const EnvyGraph& graph);

// A strongly connected component without incoming edges. When several exist,
// the one holding the agent that comes first in sigma. Throws
// Error(kContract) on an empty graph.
std::vector<AgentId> source_scc(const EnvyGraph& graph, const AgentOrdering& sigma);

}  // namespace lexalloc
