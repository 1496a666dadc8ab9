// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

// Command-line front end. Talks to the library exclusively through the C API.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget
// exceeded, 4 unsupported request (wrong polarity, chores EFX with n != 2),
// 5 internal error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lexalloc/lexalloc.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudget = 3, kUnsupported = 4, kInternal = 5 };

struct CliError {
  int code;
  std::string message;
};

int exit_code(lexalloc_status s) {
  switch (s) {
    case LEXALLOC_OK: return kOk;
    case LEXALLOC_ERR_INPUT: return kInputError;
    case LEXALLOC_ERR_BUDGET: return kBudget;
    case LEXALLOC_ERR_POLARITY:
    case LEXALLOC_ERR_UNSUPPORTED: return kUnsupported;
    case LEXALLOC_ERR_CONTRACT:
    case LEXALLOC_ERR_INTERNAL: return kInternal;
  }
  return kInternal;
}

void check(lexalloc_status s) {
  if (s != LEXALLOC_OK) throw CliError{exit_code(s), lexalloc_last_error()};
}

struct InstanceDeleter {
  void operator()(lexalloc_instance* p) const { lexalloc_instance_free(p); }
};
struct AllocationDeleter {
  void operator()(lexalloc_allocation* p) const { lexalloc_allocation_free(p); }
};
using InstancePtr = std::unique_ptr<lexalloc_instance, InstanceDeleter>;
using AllocationPtr = std::unique_ptr<lexalloc_allocation, AllocationDeleter>;

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out(s);
  lexalloc_string_free(s);
  return out;
}

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw CliError{kInputError, "cannot open '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InstancePtr load_instance(const std::string& path) {
  lexalloc_instance* raw = nullptr;
  check(lexalloc_instance_parse(read_source(path).c_str(), &raw));
  return InstancePtr(raw);
}

AllocationPtr load_allocation(const lexalloc_instance* inst, const std::string& path) {
  lexalloc_allocation* raw = nullptr;
  check(lexalloc_allocation_parse(inst, read_source(path).c_str(), &raw));
  return AllocationPtr(raw);
}

std::string allocation_json(const lexalloc_instance* inst, const lexalloc_allocation* alloc) {
  char* out = nullptr;
  check(lexalloc_allocation_to_json(inst, alloc, &out));
  return take(out);
}

// "--sigma 3,1,2" names agents; translated to 1-based positions.
std::optional<std::vector<size_t>> parse_sigma(const lexalloc_instance* inst,
                                               const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<size_t> order;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    size_t pos = 0;
    check(lexalloc_instance_find_agent(inst, name.c_str(), &pos));
    order.push_back(pos);
  }
  return order;
}

lexalloc_criteria parse_criteria(const std::string& text) {
  if (text == "null") return LEXALLOC_CRITERIA_NULL;
  if (text == "efx") return LEXALLOC_CRITERIA_EFX;
  if (text == "mms") return LEXALLOC_CRITERIA_MMS;
  if (text == "efx-mms") return LEXALLOC_CRITERIA_EFX_MMS;
  throw CliError{kInputError, "unknown criteria '" + text + "'"};
}

// Properties each solver run guarantees.
std::vector<std::string> guarantees(bool goods, const std::string& criteria) {
  if (!goods) return criteria == "efx" ? std::vector<std::string>{"efx", "po"}
                                       : std::vector<std::string>{"ef1", "po"};
  if (criteria == "efx") return {"efx", "po"};
  if (criteria == "mms") return {"mms", "po"};
  if (criteria == "efx-mms") return {"efx", "mms", "po"};
  return {"ef1", "po"};
}

bool holds(const Json& report, const std::vector<std::string>& props) {
  for (const auto& p : props) {
    if (!report.at(p).at("holds").get<bool>()) return false;
  }
  return true;
}

Json verify_json(const lexalloc_instance* inst, const lexalloc_allocation* alloc) {
  char* out = nullptr;
  check(lexalloc_verify(inst, alloc, &out));
  return Json::parse(take(out));
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair and Pareto-optimal allocation under weakly lexicographic preferences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lexalloc_version()));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  uint64_t seed = 0;
  size_t agents = 3, items = 5, max_classes = 3;
  std::string kind = "goods";
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-n,--agents", agents, "Number of agents")->check(CLI::PositiveNumber);
  gen->add_option("-m,--items", items, "Number of items");
  gen->add_option("--kind", kind, "goods or chores")->check(CLI::IsMember({"goods", "chores"}));
  gen->add_option("--max-classes", max_classes, "Upper bound on classes per agent")
      ->check(CLI::PositiveNumber);

  // solve
  auto* solve = app.add_subcommand("solve", "Compute a fair and Pareto-optimal allocation");
  std::string instance_path, criteria = "null", sigma_text;
  bool trace = false;
  solve->add_option("instance", instance_path, "Instance JSON file (default: stdin)");
  solve->add_option("--criteria", criteria, "null, efx, mms or efx-mms")
      ->check(CLI::IsMember({"null", "efx", "mms", "efx-mms"}));
  solve->add_option("--sigma", sigma_text, "Agent ordering, e.g. 1,2,3");
  solve->add_flag("--trace", trace, "Include per-iteration steps");

  // verify
  auto* verify = app.add_subcommand("verify", "Check an allocation against fairness properties");
  std::string allocation_path;
  bool want_ef = false, want_ef1 = false, want_efx = false, want_mms = false, want_po = false;
  verify->add_option("instance", instance_path, "Instance JSON file")->required();
  verify->add_option("allocation", allocation_path, "Allocation JSON file (default: stdin)");
  verify->add_flag("--ef", want_ef);
  verify->add_flag("--ef1", want_ef1);
  verify->add_flag("--efx", want_efx);
  verify->add_flag("--mms", want_mms);
  verify->add_flag("--po", want_po);

  // mms
  auto* mms = app.add_subcommand("mms", "Print maximin-share thresholds");
  mms->add_option("instance", instance_path, "Instance JSON file (default: stdin)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive brute-force checks");
  std::string oracle_kind;
  uint64_t budget = 10'000'000;
  oracle->add_option("query", oracle_kind, "ef-exists, po, mms or efx-catalogue")
      ->required()
      ->check(CLI::IsMember({"ef-exists", "po", "mms", "efx-catalogue"}));
  oracle->add_option("instance", instance_path, "Instance JSON file")->required();
  oracle->add_option("--allocation", allocation_path, "Allocation JSON file (for po)");
  oracle->add_option("--budget", budget, "Maximum number of allocations to enumerate");

  // envy-graph
  auto* envy = app.add_subcommand("envy-graph", "Dump the envy graph of an allocation");
  bool potential = false;
  envy->add_option("instance", instance_path, "Instance JSON file")->required();
  envy->add_option("allocation", allocation_path, "Allocation JSON file (default: stdin)");
  envy->add_flag("--potential", potential, "Potential envy (goods only)");
  envy->add_option("--sigma", sigma_text, "Ordering used to pick the source component");

  // bench
  auto* bench = app.add_subcommand("bench", "Solve and verify a batch of random instances (CSV)");
  size_t seeds = 10;
  std::string agent_counts = "3", item_counts = "6", criteria_list = "null,efx,mms,efx-mms";
  bench->add_option("--seeds", seeds, "Instances per (n, m) pair");
  bench->add_option("--seed", seed, "First seed");
  bench->add_option("--agents", agent_counts, "Comma-separated agent counts");
  bench->add_option("--items", item_counts, "Comma-separated item counts");
  bench->add_option("--kind", kind, "goods or chores")->check(CLI::IsMember({"goods", "chores"}));
  bench->add_option("--max-classes", max_classes)->check(CLI::PositiveNumber);
  bench->add_option("--criteria", criteria_list, "Comma-separated criteria (may be empty)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      lexalloc_instance* raw = nullptr;
      check(lexalloc_instance_generate(seed, agents, items, kind == "chores", max_classes, &raw));
      InstancePtr inst(raw);
      char* out = nullptr;
      check(lexalloc_instance_to_json(inst.get(), &out));
      std::cout << take(out) << "\n";
      return kOk;
    }

    if (solve->parsed()) {
      InstancePtr inst = load_instance(instance_path);
      const auto sigma = parse_sigma(inst.get(), sigma_text);
      lexalloc_allocation* raw = nullptr;
      char* steps = nullptr;
      const auto crit = parse_criteria(criteria);
      const size_t* order = sigma ? sigma->data() : nullptr;
      const size_t len = sigma ? sigma->size() : 0;
      if (trace) {
        check(lexalloc_solve_traced(inst.get(), order, len, crit, &raw, &steps));
      } else {
        check(lexalloc_solve(inst.get(), order, len, crit, &raw));
      }
      AllocationPtr alloc(raw);
      Json report = verify_json(inst.get(), alloc.get());
      const auto promised = guarantees(lexalloc_instance_is_goods(inst.get()), criteria);
      Json out = {{"criteria", criteria},
                  {"allocation", Json::parse(allocation_json(inst.get(), alloc.get()))},
                  {"guarantees", promised},
                  {"report", report}};
      if (steps) out["trace"] = Json::parse(take(steps));
      print(out);
      return holds(report, promised) ? kOk : kVerifyFailed;
    }

    if (verify->parsed()) {
      InstancePtr inst = load_instance(instance_path);
      AllocationPtr alloc = load_allocation(inst.get(), allocation_path);
      if (!lexalloc_allocation_is_complete(alloc.get())) {
        throw CliError{kInputError, "verify needs a complete allocation"};
      }
      std::vector<std::string> wanted;
      if (want_ef) wanted.push_back("ef");
      if (want_ef1) wanted.push_back("ef1");
      if (want_efx) wanted.push_back("efx");
      if (want_mms) wanted.push_back("mms");
      if (want_po) wanted.push_back("po");
      if (wanted.empty()) wanted = {"ef", "ef1", "efx", "mms", "po"};
      Json report = verify_json(inst.get(), alloc.get());
      print(report);
      return holds(report, wanted) ? kOk : kVerifyFailed;
    }

    if (mms->parsed()) {
      InstancePtr inst = load_instance(instance_path);
      char* out = nullptr;
      check(lexalloc_mms(inst.get(), &out));
      print(Json::parse(take(out)));
      return kOk;
    }

    if (oracle->parsed()) {
      InstancePtr inst = load_instance(instance_path);
      if (oracle_kind == "ef-exists") {
        lexalloc_allocation* raw = nullptr;
        check(lexalloc_oracle_ef_exists(inst.get(), budget, &raw));
        AllocationPtr found(raw);
        Json out = {{"exists", found != nullptr}};
        if (found) out["allocation"] = Json::parse(allocation_json(inst.get(), found.get()));
        print(out);
        return kOk;
      }
      if (oracle_kind == "po") {
        if (allocation_path.empty()) throw CliError{kInputError, "oracle po needs --allocation"};
        AllocationPtr alloc = load_allocation(inst.get(), allocation_path);
        lexalloc_allocation* raw = nullptr;
        check(lexalloc_oracle_dominator(inst.get(), alloc.get(), budget, &raw));
        AllocationPtr dominator(raw);
        Json out = {{"pareto_optimal", dominator == nullptr}};
        if (dominator) out["dominator"] = Json::parse(allocation_json(inst.get(), dominator.get()));
        print(out);
        return dominator ? kVerifyFailed : kOk;
      }
      char* out = nullptr;
      if (oracle_kind == "mms") {
        check(lexalloc_oracle_mms(inst.get(), budget, &out));
      } else {
        check(lexalloc_oracle_efx_catalogue(inst.get(), budget, &out));
      }
      print(Json::parse(take(out)));
      return kOk;
    }

    if (envy->parsed()) {
      InstancePtr inst = load_instance(instance_path);
      AllocationPtr alloc = load_allocation(inst.get(), allocation_path);
      const auto sigma = parse_sigma(inst.get(), sigma_text);
      char* out = nullptr;
      check(lexalloc_envy_graph(inst.get(), alloc.get(), potential ? 1 : 0,
                                sigma ? sigma->data() : nullptr, sigma ? sigma->size() : 0,
                                &out));
      print(Json::parse(take(out)));
      return kOk;
    }

    if (bench->parsed()) {
      const auto criteria_set = split_list(criteria_list);
      std::cout << "seed,kind,agents,items,criteria,runtime_us,envy_edges,ef,ef1,efx,mms,po,error\n";
      for (const auto& n_text : split_list(agent_counts)) {
        for (const auto& m_text : split_list(item_counts)) {
          const size_t n = std::stoul(n_text);
          const size_t m = std::stoul(m_text);
          for (size_t s = 0; s < seeds; ++s) {
            const uint64_t instance_seed = seed + s;
            for (const auto& crit : criteria_set) {
              std::cout << instance_seed << ',' << kind << ',' << n << ',' << m << ','
                        << csv_field(crit) << ',';
              lexalloc_instance* raw = nullptr;
              lexalloc_status st =
                  lexalloc_instance_generate(instance_seed, n, m, kind == "chores", max_classes, &raw);
              InstancePtr inst(raw);
              lexalloc_allocation* alloc_raw = nullptr;
              const auto start = std::chrono::steady_clock::now();
              if (st == LEXALLOC_OK) {
                st = lexalloc_solve(inst.get(), nullptr, 0, parse_criteria(crit), &alloc_raw);
              }
              const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                  std::chrono::steady_clock::now() - start);
              AllocationPtr alloc(alloc_raw);
              if (st != LEXALLOC_OK) {
                std::cout << ",,,,,,," << csv_field(lexalloc_last_error()) << "\n";
                continue;
              }
              const Json report = verify_json(inst.get(), alloc.get());
              auto flag = [&](const char* p) { return report.at(p).at("holds").get<bool>() ? "true" : "false"; };
              std::cout << elapsed.count() << ',' << report.at("envy_edges").get<size_t>() << ','
                        << flag("ef") << ',' << flag("ef1") << ',' << flag("efx") << ','
                        << flag("mms") << ',' << flag("po") << ",\n";
            }
          }
        }
      }
      return kOk;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
