// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lexalloc/verify.hpp"

#include <algorithm>

#include "lexalloc/mms.hpp"

namespace lexalloc {

namespace {

void require_complete(const Instance& inst, const Allocation& alloc) {
  check_allocation(inst, alloc);
  if (!alloc.complete()) fail(ErrorKind::kContract, "envy checks need a complete allocation");
}

ItemSet without(const ItemSet& bundle, ItemId g) {
  ItemSet out;
  std::copy_if(bundle.begin(), bundle.end(), std::back_inserter(out),
               [g](ItemId h) { return h != g; });
  return out;
}

enum class Relaxation { kNone, kOne, kAny };

// Removal candidates come from the envied bundle for goods and from the
// envious agent's own bundle for chores.
EnvyVerdict check_envy(const Instance& inst, const Allocation& alloc, Relaxation relax) {
  require_complete(inst, alloc);
  std::vector<ItemSet> bundles;
  for (std::size_t a = 0; a < inst.num_agents(); ++a) bundles.push_back(alloc.bundle(agent_at(a)));

  for (std::size_t j = 0; j < inst.num_agents(); ++j) {
    const AgentId envious = agent_at(j);
    const ScoreVector own = score(inst, envious, bundles[j]);
    for (std::size_t i = 0; i < inst.num_agents(); ++i) {
      if (i == j) continue;
      const ScoreVector other = score(inst, envious, bundles[i]);
      if (lex_compare(other, own) <= 0) continue;

      EnvyWitness witness{envious, agent_at(i), own, other, std::nullopt};
      if (relax == Relaxation::kNone) return {false, witness};

      const ItemSet& removable = inst.goods() ? bundles[i] : bundles[j];
      bool some_fixes = false;
      for (ItemId g : removable) {
        const bool fixed =
            inst.goods()
                ? lex_compare(own, score(inst, envious, without(bundles[i], g))) >= 0
                : lex_compare(score(inst, envious, without(bundles[j], g)), other) >= 0;
        if (fixed) {
          some_fixes = true;
          if (relax == Relaxation::kOne) break;
        } else if (relax == Relaxation::kAny) {
          witness.item = g;
          return {false, witness};
        }
      }
      if (relax == Relaxation::kOne && !some_fixes) return {false, witness};
      // kAny with an empty removal set: nothing can be removed, so envy stays.
      if (relax == Relaxation::kAny && removable.empty()) return {false, witness};
    }
  }
  return {};
}

}  // namespace

EnvyVerdict check_ef(const Instance& inst, const Allocation& alloc) {
  return check_envy(inst, alloc, Relaxation::kNone);
}

EnvyVerdict check_ef1(const Instance& inst, const Allocation& alloc) {
  return check_envy(inst, alloc, Relaxation::kOne);
}

EnvyVerdict check_efx(const Instance& inst, const Allocation& alloc) {
  return check_envy(inst, alloc, Relaxation::kAny);
}

ParetoVerdict check_pareto(const Instance& inst, const Allocation& alloc) {
  auto witness = find_pareto_improvement(inst, alloc);
  return {!witness.has_value(), std::move(witness)};
}

bool Report::mms_holds() const {
  return std::all_of(mms.begin(), mms.end(), [](const AgentMms& m) { return m.holds; });
}

Report verify(const Instance& inst, const Allocation& alloc) {
  require_complete(inst, alloc);
  Report report;
  report.ef = check_ef(inst, alloc);
  report.ef1 = check_ef1(inst, alloc);
  report.efx = check_efx(inst, alloc);
  for (std::size_t a = 0; a < inst.num_agents(); ++a) {
    const AgentId agent = agent_at(a);
    ScoreVector own = score(inst, alloc, agent);
    ScoreVector threshold = mms_threshold(inst, agent);
    const bool holds = lex_compare(own, threshold) >= 0;
    report.mms.push_back({holds, std::move(own), std::move(threshold)});
  }
  report.po = check_pareto(inst, alloc);
  for (std::size_t j = 0; j < inst.num_agents(); ++j) {
    const ScoreVector own = score(inst, alloc, agent_at(j));
    for (std::size_t i = 0; i < inst.num_agents(); ++i) {
      if (i != j && lex_compare(score(inst, agent_at(j), alloc.bundle(agent_at(i))), own) > 0) {
        ++report.envy_edges;
      }
    }
  }
  return report;
}

namespace {

Json envy_to_json(const Instance& inst, const EnvyVerdict& v) {
  Json out = {{"holds", v.holds}};
  if (v.witness) {
    const auto& w = *v.witness;
    Json witness = {{"envious", inst.agent_label(w.envious)},
                    {"envied", inst.agent_label(w.envied)},
                    {"own_score", score_to_json(w.own_score)},
                    {"other_score", score_to_json(w.other_score)}};
    if (w.item) witness["item"] = inst.item_label(*w.item);
    out["witness"] = std::move(witness);
  }
  return out;
}

}  // namespace

Json report_to_json(const Instance& inst, const Report& report) {
  Json mms_agents = Json::object();
  for (std::size_t a = 0; a < report.mms.size(); ++a) {
    const auto& m = report.mms[a];
    mms_agents[inst.agent_label(agent_at(a))] = {{"holds", m.holds},
                                                 {"score", score_to_json(m.score)},
                                                 {"threshold", score_to_json(m.threshold)}};
  }
  Json po = {{"holds", report.po.holds}};
  if (report.po.witness) {
    const auto& w = *report.po.witness;
    Json agents = Json::array();
    for (AgentId a : w.path.agents) agents.push_back(inst.agent_label(a));
    po["witness"] = {{"items", items_to_json(inst, w.path.items)},
                     {"agents", std::move(agents)},
                     {"beneficiary", inst.agent_label(w.beneficiary)}};
  }
  return {{"ef", envy_to_json(inst, report.ef)},
          {"ef1", envy_to_json(inst, report.ef1)},
          {"efx", envy_to_json(inst, report.efx)},
          {"mms", {{"holds", report.mms_holds()}, {"agents", std::move(mms_agents)}}},
          {"po", std::move(po)},
          {"envy_edges", report.envy_edges}};
}

}  // namespace lexalloc
