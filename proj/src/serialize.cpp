// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lexalloc/serialize.hpp"

#include <unordered_map>

namespace lexalloc {

namespace {

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorKind::kInput, std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(ErrorKind::kInput, std::string(what) + " must be a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::kInput, std::string(what) + " must be an array");
  return j;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::kInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::kInput, "instance must be a JSON object");

  const std::string kind = as_string(field(j, "kind"), "kind");
  Polarity polarity;
  if (kind == "goods") {
    polarity = Polarity::kGoods;
  } else if (kind == "chores") {
    polarity = Polarity::kChores;
  } else {
    fail(ErrorKind::kInput, "kind must be \"goods\" or \"chores\", got \"" + kind + "\"");
  }

  std::vector<std::string> items;
  std::unordered_map<std::string, ItemId> item_ids;
  for (const auto& it : as_array(field(j, "items"), "items")) {
    std::string label = as_string(it, "item name");
    if (!item_ids.emplace(label, item_at(items.size())).second) {
      fail(ErrorKind::kInput, "duplicate item '" + label + "'");
    }
    items.push_back(std::move(label));
  }

  std::vector<std::string> agents;
  std::vector<Instance::ClassList> classes;
  for (const auto& a : as_array(field(j, "agents"), "agents")) {
    if (!a.is_object()) fail(ErrorKind::kInput, "agent entries must be objects");
    std::string name = as_string(field(a, "name"), "agent name");
    Instance::ClassList list;
    for (const auto& cls : as_array(field(a, "classes"), "classes")) {
      ItemSet members;
      for (const auto& g : as_array(cls, "indifference class")) {
        const std::string label = as_string(g, "item name");
        auto found = item_ids.find(label);
        if (found == item_ids.end()) {
          fail(ErrorKind::kInput, "agent '" + name + "' ranks unknown item '" + label + "'");
        }
        members.push_back(found->second);
      }
      list.push_back(std::move(members));
    }
    agents.push_back(std::move(name));
    classes.push_back(std::move(list));
  }

  return Instance(polarity, std::move(items), std::move(agents), std::move(classes));
}

Json instance_to_json(const Instance& inst) {
  Json items = Json::array();
  for (std::size_t g = 0; g < inst.num_items(); ++g) items.push_back(inst.item_label(item_at(g)));

  Json agents = Json::array();
  for (std::size_t a = 0; a < inst.num_agents(); ++a) {
    Json classes = Json::array();
    for (const auto& cls : inst.classes(agent_at(a))) classes.push_back(items_to_json(inst, cls));
    agents.push_back({{"name", inst.agent_label(agent_at(a))}, {"classes", std::move(classes)}});
  }

  return {{"kind", inst.goods() ? "goods" : "chores"},
          {"items", std::move(items)},
          {"agents", std::move(agents)}};
}

Instance parse_instance(std::string_view text) { return instance_from_json(parse_text(text)); }

std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(2); }

Allocation allocation_from_json(const Instance& inst, const Json& j) {
  if (!j.is_object()) fail(ErrorKind::kInput, "allocation must be a JSON object");
  const Json& bundles = field(j, "bundles");
  if (!bundles.is_object()) fail(ErrorKind::kInput, "bundles must be an object");

  Allocation alloc(inst.num_agents(), inst.num_items());
  for (const auto& [name, items] : bundles.items()) {
    auto agent = inst.find_agent(name);
    if (!agent) fail(ErrorKind::kInput, "allocation names unknown agent '" + name + "'");
    for (const auto& g : as_array(items, "bundle")) {
      const std::string label = as_string(g, "item name");
      auto item = inst.find_item(label);
      if (!item) fail(ErrorKind::kInput, "allocation names unknown item '" + label + "'");
      if (alloc.allocated(*item)) {
        fail(ErrorKind::kInput, "item '" + label + "' is assigned more than once");
      }
      alloc.assign(*item, *agent);
    }
  }
  return alloc;
}

Json allocation_to_json(const Instance& inst, const Allocation& alloc) {
  check_allocation(inst, alloc);
  Json bundles = Json::object();
  for (std::size_t a = 0; a < inst.num_agents(); ++a) {
    bundles[inst.agent_label(agent_at(a))] = items_to_json(inst, alloc.bundle(agent_at(a)));
  }
  return {{"bundles", std::move(bundles)}};
}

Allocation parse_allocation(const Instance& inst, std::string_view text) {
  return allocation_from_json(inst, parse_text(text));
}

std::string serialize_allocation(const Instance& inst, const Allocation& alloc) {
  return allocation_to_json(inst, alloc).dump();
}

Json score_to_json(const ScoreVector& s) {
  Json out = Json::array();
  for (int v : s.entries()) out.push_back(v);
  return out;
}

Json items_to_json(const Instance& inst, std::span<const ItemId> items) {
  Json out = Json::array();
  for (ItemId g : items) out.push_back(inst.item_label(g));
  return out;
}

}  // namespace lexalloc
