// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lexalloc/lexalloc.h"

#include <cstring>
#include <new>
#include <string>

#include "lexalloc/envy.hpp"
#include "lexalloc/generate.hpp"
#include "lexalloc/mms.hpp"
#include "lexalloc/oracle.hpp"
#include "lexalloc/serialize.hpp"
#include "lexalloc/solver_chores.hpp"
#include "lexalloc/solver_goods.hpp"
#include "lexalloc/verify.hpp"

struct lexalloc_instance {
  lexalloc::Instance value;
};

struct lexalloc_allocation {
  lexalloc::Allocation value;
};

namespace {

using namespace lexalloc;

thread_local std::string last_error;

lexalloc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput: return LEXALLOC_ERR_INPUT;
    case ErrorKind::kBudget: return LEXALLOC_ERR_BUDGET;
    case ErrorKind::kWrongPolarity: return LEXALLOC_ERR_POLARITY;
    case ErrorKind::kUnsupported: return LEXALLOC_ERR_UNSUPPORTED;
    case ErrorKind::kContract: return LEXALLOC_ERR_CONTRACT;
    case ErrorKind::kInternal: return LEXALLOC_ERR_INTERNAL;
  }
  return LEXALLOC_ERR_INTERNAL;
}

template <class F>
lexalloc_status guarded(F&& body) noexcept {
  try {
    body();
    return LEXALLOC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown exception";
  }
  return LEXALLOC_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorKind::kContract, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

AgentOrdering ordering_from(const Instance& inst, const size_t* sigma, size_t len) {
  if (!sigma) return AgentOrdering::identity(inst.num_agents());
  if (len != inst.num_agents()) {
    fail(ErrorKind::kInput, "ordering must list each of the " +
                                std::to_string(inst.num_agents()) + " agents once");
  }
  std::vector<AgentId> order;
  for (size_t p = 0; p < len; ++p) {
    if (sigma[p] < 1 || sigma[p] > inst.num_agents()) {
      fail(ErrorKind::kInput, "ordering entry " + std::to_string(sigma[p]) + " out of range");
    }
    order.push_back(agent_at(sigma[p] - 1));
  }
  return AgentOrdering(std::move(order));
}

Json agents_to_json(const Instance& inst, std::span<const AgentId> agents) {
  Json out = Json::array();
  for (AgentId a : agents) out.push_back(inst.agent_label(a));
  return out;
}

Json pick_to_json(const Instance& inst, std::size_t iteration, const Pick& pick) {
  return {{"iteration", iteration},
          {"agent", inst.agent_label(pick.agent)},
          {"item", inst.item_label(pick.item)},
          {"path",
           {{"items", items_to_json(inst, pick.path.items)},
            {"agents", agents_to_json(inst, pick.path.agents)}}}};
}

Allocation solve(const Instance& inst, const AgentOrdering& sigma, lexalloc_criteria criteria,
                 Json* trace) {
  const auto crit = static_cast<Criteria>(criteria);
  if (criteria < LEXALLOC_CRITERIA_NULL || criteria > LEXALLOC_CRITERIA_EFX_MMS) {
    fail(ErrorKind::kInput, "unknown criteria value");
  }
  if (inst.goods()) {
    GoodsSolver solver(inst, sigma, crit);
    while (!solver.done()) {
      const Pick pick = solver.step();
      if (trace) {
        Json rec = pick_to_json(inst, solver.state().iteration, pick);
        rec["prioritized"] = agents_to_json(inst, solver.state().prioritized);
        trace->push_back(std::move(rec));
      }
    }
    return solver.state().allocation;
  }
  if (crit == Criteria::kNull) {
    ChoresSolver solver(inst, sigma);
    std::size_t iteration = 0;
    while (!solver.done()) {
      const Pick pick = solver.step();
      if (trace) trace->push_back(pick_to_json(inst, ++iteration, pick));
    }
    return solver.allocation();
  }
  if (crit == Criteria::kEfx) {
    if (inst.num_agents() != 2) {
      fail(ErrorKind::kUnsupported, "EFX for chores is only available for two agents");
    }
    return solve_chores_efx_po_two_agents(inst, sigma);
  }
  fail(ErrorKind::kUnsupported,
       std::string("criteria '") + to_string(crit) + "' is not available for chores");
}

}  // namespace

extern "C" {

const char* lexalloc_version(void) { return "0.1.0"; }

const char* lexalloc_last_error(void) { return last_error.c_str(); }

const char* lexalloc_status_name(lexalloc_status status) {
  switch (status) {
    case LEXALLOC_OK: return "ok";
    case LEXALLOC_ERR_INPUT: return "input error";
    case LEXALLOC_ERR_BUDGET: return "budget exceeded";
    case LEXALLOC_ERR_POLARITY: return "wrong polarity";
    case LEXALLOC_ERR_UNSUPPORTED: return "unsupported";
    case LEXALLOC_ERR_CONTRACT: return "contract violation";
    case LEXALLOC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void lexalloc_string_free(char* str) { delete[] str; }

lexalloc_status lexalloc_instance_parse(const char* json, lexalloc_instance** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new lexalloc_instance{parse_instance(json)};
  });
}

lexalloc_status lexalloc_instance_generate(uint64_t seed, size_t num_agents, size_t num_items,
                                           int chores, size_t max_classes,
                                           lexalloc_instance** out) {
  return guarded([&] {
    require(out, "out");
    GenConfig config;
    config.seed = seed;
    config.num_agents = num_agents;
    config.num_items = num_items;
    config.polarity = chores ? Polarity::kChores : Polarity::kGoods;
    config.max_classes = max_classes;
    *out = new lexalloc_instance{generate(config)};
  });
}

void lexalloc_instance_free(lexalloc_instance* inst) { delete inst; }

lexalloc_status lexalloc_instance_to_json(const lexalloc_instance* inst, char** out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    *out = dup_string(serialize_instance(inst->value));
  });
}

size_t lexalloc_instance_num_agents(const lexalloc_instance* inst) {
  return inst ? inst->value.num_agents() : 0;
}

size_t lexalloc_instance_num_items(const lexalloc_instance* inst) {
  return inst ? inst->value.num_items() : 0;
}

int lexalloc_instance_is_goods(const lexalloc_instance* inst) {
  return inst && inst->value.goods() ? 1 : 0;
}

lexalloc_status lexalloc_instance_find_agent(const lexalloc_instance* inst, const char* name,
                                             size_t* out) {
  return guarded([&] {
    require(inst, "instance");
    require(name, "name");
    require(out, "out");
    auto agent = inst->value.find_agent(name);
    if (!agent) fail(ErrorKind::kInput, std::string("unknown agent '") + name + "'");
    *out = index(*agent) + 1;
  });
}

lexalloc_status lexalloc_allocation_parse(const lexalloc_instance* inst, const char* json,
                                          lexalloc_allocation** out) {
  return guarded([&] {
    require(inst, "instance");
    require(json, "json");
    require(out, "out");
    *out = new lexalloc_allocation{parse_allocation(inst->value, json)};
  });
}

void lexalloc_allocation_free(lexalloc_allocation* alloc) { delete alloc; }

lexalloc_status lexalloc_allocation_to_json(const lexalloc_instance* inst,
                                            const lexalloc_allocation* alloc, char** out) {
  return guarded([&] {
    require(inst, "instance");
    require(alloc, "allocation");
    require(out, "out");
    *out = dup_string(serialize_allocation(inst->value, alloc->value));
  });
}

int lexalloc_allocation_is_complete(const lexalloc_allocation* alloc) {
  return alloc && alloc->value.complete() ? 1 : 0;
}

lexalloc_status lexalloc_solve(const lexalloc_instance* inst, const size_t* sigma,
                               size_t sigma_len, lexalloc_criteria criteria,
                               lexalloc_allocation** out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    const AgentOrdering order = ordering_from(inst->value, sigma, sigma_len);
    *out = new lexalloc_allocation{solve(inst->value, order, criteria, nullptr)};
  });
}

lexalloc_status lexalloc_solve_traced(const lexalloc_instance* inst, const size_t* sigma,
                                      size_t sigma_len, lexalloc_criteria criteria,
                                      lexalloc_allocation** out, char** trace) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    require(trace, "trace");
    const AgentOrdering order = ordering_from(inst->value, sigma, sigma_len);
    Json steps = Json::array();
    Allocation result = solve(inst->value, order, criteria, &steps);
    std::string text = steps.dump();
    *out = new lexalloc_allocation{std::move(result)};
    *trace = dup_string(text);
  });
}

lexalloc_status lexalloc_verify(const lexalloc_instance* inst, const lexalloc_allocation* alloc,
                                char** report) {
  return guarded([&] {
    require(inst, "instance");
    require(alloc, "allocation");
    require(report, "report");
    *report = dup_string(report_to_json(inst->value, verify(inst->value, alloc->value)).dump());
  });
}

lexalloc_status lexalloc_mms(const lexalloc_instance* inst, char** out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    Json j = Json::object();
    for (std::size_t a = 0; a < inst->value.num_agents(); ++a) {
      j[inst->value.agent_label(agent_at(a))] = score_to_json(mms_threshold(inst->value, agent_at(a)));
    }
    *out = dup_string(j.dump());
  });
}

lexalloc_status lexalloc_envy_graph(const lexalloc_instance* inst,
                                    const lexalloc_allocation* alloc, int potential,
                                    const size_t* sigma, size_t sigma_len, char** out) {
  return guarded([&] {
    require(inst, "instance");
    require(alloc, "allocation");
    require(out, "out");
    const Instance& in = inst->value;
    check_allocation(in, alloc->value);
    std::vector<AgentId> everyone;
    for (std::size_t a = 0; a < in.num_agents(); ++a) everyone.push_back(agent_at(a));
    const EnvyGraph graph =
        potential ? potential_envy_graph(in, alloc->value, everyone) : envy_graph(in, alloc->value);

    Json edges = Json::array();
    for (const auto& [from, to] : graph.edges()) {
      edges.push_back({in.agent_label(from), in.agent_label(to)});
    }
    Json j = {{"kind", potential ? "potential" : "actual"},
              {"nodes", agents_to_json(in, graph.nodes())},
              {"edges", std::move(edges)}};
    if (potential) {
      j["available"] = items_to_json(in, available_items(in, alloc->value));
      j["source"] = agents_to_json(in, source_scc(graph, ordering_from(in, sigma, sigma_len)));
    }
    *out = dup_string(j.dump());
  });
}

lexalloc_status lexalloc_oracle_ef_exists(const lexalloc_instance* inst, uint64_t budget,
                                          lexalloc_allocation** out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    auto found = ef_exists(inst->value, budget);
    *out = found ? new lexalloc_allocation{std::move(*found)} : nullptr;
  });
}

lexalloc_status lexalloc_oracle_dominator(const lexalloc_instance* inst,
                                          const lexalloc_allocation* alloc, uint64_t budget,
                                          lexalloc_allocation** out) {
  return guarded([&] {
    require(inst, "instance");
    require(alloc, "allocation");
    require(out, "out");
    auto found = po_dominance_search(inst->value, alloc->value, budget);
    *out = found ? new lexalloc_allocation{std::move(*found)} : nullptr;
  });
}

lexalloc_status lexalloc_oracle_mms(const lexalloc_instance* inst, uint64_t budget, char** out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    Json j = Json::object();
    for (std::size_t a = 0; a < inst->value.num_agents(); ++a) {
      j[inst->value.agent_label(agent_at(a))] =
          score_to_json(mms_enumerate(inst->value, agent_at(a), budget));
    }
    *out = dup_string(j.dump());
  });
}

lexalloc_status lexalloc_oracle_efx_catalogue(const lexalloc_instance* inst, uint64_t budget,
                                              char** out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    Json j = Json::array();
    for (const auto& a : efx_po_catalogue(inst->value, budget)) {
      j.push_back(allocation_to_json(inst->value, a));
    }
    *out = dup_string(j.dump());
  });
}

}  // extern "C"
