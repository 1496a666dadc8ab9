// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "lexalloc/core.hpp"

namespace lexalloc {

// Random instance parameters. For each agent the class count is uniform in
// [1, min(max_classes, m)]; the items are shuffled and cut at random sorted
// boundaries. The distribution is arbitrary; it only needs to be
// reproducible. Identical configs give identical instances on every
// platform (mt19937_64 with our own bounded sampling).
struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t num_agents = 2;
  std::size_t num_items = 4;
  Polarity polarity = Polarity::kGoods;
  std::size_t max_classes = 3;
  // Item labels are prefix + 1-based index; empty means "g" or "c" by polarity.
  std::string item_prefix;
};

Instance generate(const GenConfig& config);

// Uniform integer in [lo, hi] by rejection sampling.
std::uint64_t uniform_between(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

// Uniformly random agent ordering.
AgentOrdering random_ordering(std::mt19937_64& rng, std::size_t num_agents);

}  // namespace lexalloc
