// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lexalloc/generate.hpp"

#include <algorithm>
#include <limits>

namespace lexalloc {

std::uint64_t uniform_between(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + draw % range;
}

namespace {

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_between(rng, 0, i - 1)]);
  }
}

}  // namespace

AgentOrdering random_ordering(std::mt19937_64& rng, std::size_t num_agents) {
  std::vector<AgentId> order;
  for (std::size_t a = 0; a < num_agents; ++a) order.push_back(agent_at(a));
  shuffle(order, rng);
  return AgentOrdering(std::move(order));
}

Instance generate(const GenConfig& config) {
  if (config.num_agents == 0) fail(ErrorKind::kInput, "need at least one agent");
  if (config.max_classes == 0) fail(ErrorKind::kInput, "max classes must be at least 1");

  std::mt19937_64 rng(config.seed);
  const std::size_t m = config.num_items;
  const std::string prefix =
      config.item_prefix.empty() ? (config.polarity == Polarity::kGoods ? "g" : "c")
                                 : config.item_prefix;

  std::vector<std::string> items;
  for (std::size_t g = 0; g < m; ++g) items.push_back(prefix + std::to_string(g + 1));
  std::vector<std::string> agents;
  std::vector<Instance::ClassList> classes;

  for (std::size_t a = 0; a < config.num_agents; ++a) {
    agents.push_back(std::to_string(a + 1));
    Instance::ClassList list;
    if (m > 0) {
      ItemSet order;
      for (std::size_t g = 0; g < m; ++g) order.push_back(item_at(g));
      shuffle(order, rng);

      const std::size_t k = uniform_between(rng, 1, std::min(config.max_classes, m));
      // k - 1 distinct cut points in 1..m-1: a partial shuffle of them.
      std::vector<std::size_t> cuts;
      for (std::size_t c = 1; c < m; ++c) cuts.push_back(c);
      for (std::size_t i = 0; i + 1 < k; ++i) {
        std::swap(cuts[i], cuts[uniform_between(rng, i, cuts.size() - 1)]);
      }
      cuts.resize(k - 1);
      std::sort(cuts.begin(), cuts.end());
      cuts.push_back(m);

      std::size_t begin = 0;
      for (std::size_t end : cuts) {
        ItemSet cls(order.begin() + static_cast<std::ptrdiff_t>(begin),
                    order.begin() + static_cast<std::ptrdiff_t>(end));
        std::sort(cls.begin(), cls.end());
        list.push_back(std::move(cls));
        begin = end;
      }
    }
    classes.push_back(std::move(list));
  }
  return Instance(config.polarity, std::move(items), std::move(agents), std::move(classes));
}

}  // namespace lexalloc
