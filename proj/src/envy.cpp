// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lexalloc/envy.hpp"

#include <algorithm>
#include <limits>

#include "lexalloc/prefgraph.hpp"

namespace lexalloc {

EnvyGraph::EnvyGraph(std::vector<AgentId> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  out_.resize(nodes_.size());
}

bool EnvyGraph::contains(AgentId a) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), a);
}

std::size_t EnvyGraph::position(AgentId a) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), a);
  if (it == nodes_.end() || *it != a) {
    fail(ErrorKind::kContract, "agent is not a node of the envy graph");
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

void EnvyGraph::add_edge(AgentId from, AgentId to) {
  if (from == to) fail(ErrorKind::kContract, "envy graph has no self-loops");
  auto& succ = out_[position(from)];
  const std::size_t target = position(to);
  auto it = std::lower_bound(succ.begin(), succ.end(), target);
  if (it == succ.end() || *it != target) succ.insert(it, target);
}

bool EnvyGraph::has_edge(AgentId from, AgentId to) const {
  if (!contains(from) || !contains(to)) return false;
  const auto& succ = out_[position(from)];
  return std::binary_search(succ.begin(), succ.end(), position(to));
}

std::vector<std::pair<AgentId, AgentId>> EnvyGraph::edges() const {
  std::vector<std::pair<AgentId, AgentId>> out;
  for (std::size_t u = 0; u < nodes_.size(); ++u) {
    for (std::size_t v : out_[u]) out.emplace_back(nodes_[u], nodes_[v]);
  }
  return out;
}

std::size_t EnvyGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& succ : out_) total += succ.size();
  return total;
}

namespace {

void require_goods(const Instance& inst) {
  if (!inst.goods()) fail(ErrorKind::kWrongPolarity, "potential envy is defined for goods only");
}

// Score of A_envied ∪ B from the envious agent's point of view.
ScoreVector boosted_score(const Instance& inst, const Allocation& alloc,
                          const std::vector<bool>& available, AgentId viewer, AgentId envied) {
  std::vector<int> entries(inst.num_classes(viewer), 0);
  for (std::size_t g = 0; g < inst.num_items(); ++g) {
    if (available[g] || alloc.owns(envied, item_at(g))) ++entries[inst.class_of(viewer, item_at(g))];
  }
  return ScoreVector(std::move(entries));
}

std::vector<bool> availability_mask(const Instance& inst, const Allocation& alloc) {
  const auto dist = distances_to_unallocated(inst, alloc);
  std::vector<bool> mask(dist.size());
  for (std::size_t g = 0; g < dist.size(); ++g) mask[g] = dist[g] != kUnavailable;
  return mask;
}

}  // namespace

bool potentially_envies(const Instance& inst, const Allocation& alloc, AgentId envious,
                        AgentId envied) {
  require_goods(inst);
  check_allocation(inst, alloc);
  inst.check_agent(envious);
  inst.check_agent(envied);
  const auto available = availability_mask(inst, alloc);
  return lex_compare(boosted_score(inst, alloc, available, envious, envied),
                     score(inst, alloc, envious)) > 0;
}

EnvyGraph potential_envy_graph(const Instance& inst, const Allocation& alloc,
                               std::span<const AgentId> prioritized) {
  require_goods(inst);
  check_allocation(inst, alloc);
  for (AgentId a : prioritized) inst.check_agent(a);

  EnvyGraph graph({prioritized.begin(), prioritized.end()});
  const auto available = availability_mask(inst, alloc);
  for (AgentId i : graph.nodes()) {
    const ScoreVector own = score(inst, alloc, i);
    for (AgentId j : graph.nodes()) {
      if (i == j) continue;
      if (lex_compare(boosted_score(inst, alloc, available, i, j), own) > 0) graph.add_edge(i, j);
    }
  }
  return graph;
}

EnvyGraph envy_graph(const Instance& inst, const Allocation& alloc) {
  check_allocation(inst, alloc);
  std::vector<AgentId> all;
  for (std::size_t a = 0; a < inst.num_agents(); ++a) all.push_back(agent_at(a));
  EnvyGraph graph(all);
  for (AgentId i : all) {
    const ScoreVector own = score(inst, alloc, i);
    for (AgentId j : all) {
      if (i != j && lex_compare(score(inst, i, alloc.bundle(j)), own) > 0) graph.add_edge(i, j);
    }
  }
  return graph;
}

namespace {

class Tarjan {
 public:
  explicit Tarjan(const EnvyGraph& graph)
      : graph_(graph),
        number_(graph.nodes().size(), kUnvisited),
        low_(graph.nodes().size(), 0),
        on_stack_(graph.nodes().size(), false) {}

  std::vector<std::vector<std::size_t>> run() {
    for (std::size_t v = 0; v < number_.size(); ++v) {
      if (number_[v] == kUnvisited) visit(v);
    }
    return std::move(components_);
  }

 private:
  static constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

  void visit(std::size_t v) {
    number_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_[v] = true;
    for (std::size_t w : graph_.successors(v)) {
      if (number_[w] == kUnvisited) {
        visit(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if (on_stack_[w]) {
        low_[v] = std::min(low_[v], number_[w]);
      }
    }
    if (low_[v] != number_[v]) return;
    std::vector<std::size_t> component;
    std::size_t w;
    do {
      w = stack_.back();
      stack_.pop_back();
      on_stack_[w] = false;
      component.push_back(w);
    } while (w != v);
    std::sort(component.begin(), component.end());
    components_.push_back(std::move(component));
  }

  const EnvyGraph& graph_;
  std::vector<std::size_t> number_;
  std::vector<std::size_t> low_;
  std::vector<bool> on_stack_;
  std::vector<std::size_t> stack_;
  std::vector<std::vector<std::size_t>> components_;
  std::size_t counter_ = 0;
};

}  // namespace

std::vector<std::vector<AgentId>> strongly_connected_components(const EnvyGraph& graph) {
  std::vector<std::vector<AgentId>> out;
  for (const auto& component : Tarjan(graph).run()) {
    std::vector<AgentId> members;
    for (std::size_t pos : component) members.push_back(graph.nodes()[pos]);
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<AgentId> source_scc(const EnvyGraph& graph, const AgentOrdering& sigma) {
  if (graph.empty()) fail(ErrorKind::kContract, "source component of an empty graph");
  for (AgentId a : graph.nodes()) {
    if (index(a) >= sigma.size()) fail(ErrorKind::kContract, "ordering does not cover the graph");
  }
  const auto components = Tarjan(graph).run();

  std::vector<std::size_t> component_of(graph.nodes().size());
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (std::size_t v : components[c]) component_of[v] = c;
  }
  std::vector<bool> has_incoming(components.size(), false);
  for (std::size_t u = 0; u < graph.nodes().size(); ++u) {
    for (std::size_t v : graph.successors(u)) {
      if (component_of[u] != component_of[v]) has_incoming[component_of[v]] = true;
    }
  }

  std::size_t best = components.size();
  std::size_t best_position = std::numeric_limits<std::size_t>::max();
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (has_incoming[c]) continue;
    for (std::size_t v : components[c]) {
      const std::size_t p = sigma.position(graph.nodes()[v]);
      if (p < best_position) {
        best_position = p;
        best = c;
      }
    }
  }
  if (best == components.size()) {
    fail(ErrorKind::kInternal, "condensation has no source component");
  }

  std::vector<AgentId> out;
  for (std::size_t v : components[best]) out.push_back(graph.nodes()[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lexalloc
