// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// JSON forms of instances and allocations.
//
//   instance:   {"kind": "goods"|"chores", "items": ["g1", ...],
//                "agents": [{"name": "1", "classes": [["g1","g2"],["g3"]]}, ...]}
//   allocation: {"bundles": {"1": ["g2"], "2": ["g1"], ...}}
//
// Classes are listed from most important outward. An allocation may omit
// agents (empty bundle) and items (left unallocated).

#include <string>
#include <string_view>

#include "json.hpp"
#include "lexalloc/core.hpp"

namespace lexalloc {

using Json = nlohmann::ordered_json;

Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

Allocation allocation_from_json(const Instance& inst, const Json& j);
Json allocation_to_json(const Instance& inst, const Allocation& alloc);

Allocation parse_allocation(const Instance& inst, std::string_view text);
std::string serialize_allocation(const Instance& inst, const Allocation& alloc);

Json score_to_json(const ScoreVector& s);
Json items_to_json(const Instance& inst, std::span<const ItemId> items);

}  // namespace lexalloc
