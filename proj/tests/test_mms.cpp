// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "doctest.h"
#include "fixtures.hpp"
#include "lexalloc/generate.hpp"
#include "lexalloc/mms.hpp"
#include "lexalloc/oracle.hpp"

using namespace lexalloc;
using namespace lexalloc::testing;

namespace {

ScoreVector sv(std::vector<int> v) { return ScoreVector(std::move(v)); }

// n identical agents whose classes have the given sizes.
Instance sized_classes(Polarity pol, std::size_t n, const std::vector<std::size_t>& sizes) {
  Labels all;
  Prefs prefs;
  for (std::size_t l = 0; l < sizes.size(); ++l) {
    Labels cls;
    for (std::size_t t = 0; t < sizes[l]; ++t) {
      cls.push_back("x" + std::to_string(all.size() + 1));
      all.push_back(cls.back());
    }
    prefs.push_back(cls);
  }
  return make_instance(pol, all, std::vector<Prefs>(n, prefs));
}

}  // namespace

TEST_SUITE("mms") {
  TEST_CASE("goods thresholds of the worked example") {
    const Instance inst = goods_three_by_four();
    CHECK(mms_goods(inst, agent(1)) == sv({0, 2}));
    CHECK(mms_goods(inst, agent(2)) == sv({0, 1}));
    CHECK(mms_goods(inst, agent(3)) == sv({0, 1}));
    const auto trace = mms_goods_trace(inst, agent(1));
    CHECK(trace.open_bundles == std::vector<int>{3, 1});
    CHECK(mms_enumerate(inst, agent(1)) == sv({0, 2}));
  }

  TEST_CASE("chores thresholds") {
    CHECK(mms_chores(chores_three_by_four(), agent(2)) == sv({-1, -1}));
    CHECK(mms_enumerate(chores_three_by_four(), agent(2)) == sv({-1, -1}));
    const Instance even = sized_classes(Polarity::kChores, 2, {2, 4});
    CHECK(mms_chores(even, agent(1)) == sv({-1, -2}));
    CHECK(mms_enumerate(even, agent(1)) == sv({-1, -2}));
    // The first indivisible class is floored and everything after it is zero.
    const Instance odd = sized_classes(Polarity::kChores, 2, {2, 3, 2});
    CHECK(mms_chores(odd, agent(1)) == sv({-1, -2, 0}));
    CHECK(mms_enumerate(odd, agent(1)) == sv({-1, -2, 0}));
  }

  TEST_CASE("single agent gets the full score") {
    const Instance goods = generate({4, 1, 6, Polarity::kGoods, 3, ""});
    CHECK(mms_goods(goods, agent(1)) == full_score(goods, agent(1)));
    const Instance chores = generate({4, 1, 6, Polarity::kChores, 3, ""});
    CHECK(mms_chores(chores, agent(1)) == full_score(chores, agent(1)));
  }

  TEST_CASE("wrong polarity") {
    CHECK(error_kind([] { mms_goods(chores_three_by_four(), agent(1)); }) ==
          ErrorKind::kWrongPolarity);
    CHECK(error_kind([] { mms_chores(goods_three_by_four(), agent(1)); }) ==
          ErrorKind::kWrongPolarity);
    CHECK(mms_threshold(chores_three_by_four(), agent(2)) == sv({-1, -1}));
  }

  TEST_CASE("closed forms equal exhaustive max-min") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
      const Polarity pol = seed % 2 ? Polarity::kChores : Polarity::kGoods;
      const Instance inst = generate({seed, 1 + seed % 3, seed % 7, pol, 1 + seed % 4, ""});
      const auto thresholds = mms_thresholds(inst);
      for (std::size_t a = 0; a < inst.num_agents(); ++a) {
        CAPTURE(seed);
        REQUIRE(thresholds[a] == mms_enumerate(inst, agent_at(a)));
      }
    }
  }

  TEST_CASE("threshold bounds and remaining-bundle recurrence") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const Polarity pol = seed % 2 ? Polarity::kChores : Polarity::kGoods;
      const Instance inst = generate({seed, 1 + seed % 5, seed % 12, pol, 1 + seed % 6, ""});
      for (std::size_t a = 0; a < inst.num_agents(); ++a) {
        const AgentId id = agent_at(a);
        const ScoreVector t = mms_threshold(inst, id);
        const ScoreVector full = full_score(inst, id);
        REQUIRE(t.size() == full.size());
        for (std::size_t l = 0; l < t.size(); ++l) {
          if (inst.goods()) {
            REQUIRE((t[l] >= 0 && t[l] <= full[l]));
          } else {
            REQUIRE((t[l] <= 0 && t[l] >= full[l]));
          }
        }
        if (!inst.goods()) continue;
        const auto trace = mms_goods_trace(inst, id);
        REQUIRE(trace.open_bundles.size() == t.size());
        if (t.size() == 0) continue;
        REQUIRE(trace.open_bundles[0] == static_cast<int>(inst.num_agents()));
        for (std::size_t l = 0; l + 1 < t.size(); ++l) {
          const int r = trace.open_bundles[l];
          REQUIRE(t[l] == full[l] / r);
          REQUIRE(trace.open_bundles[l + 1] == r - (full[l] - r * t[l]));
          REQUIRE(trace.open_bundles[l + 1] >= 1);
          REQUIRE(trace.open_bundles[l + 1] <= r);
        }
      }
    }
  }

  TEST_CASE("divisible classes scale linearly") {
    for (std::size_t n = 1; n <= 3; ++n) {
      const std::vector<std::size_t> base = {1, 2, 1};
      for (std::size_t factor = 1; factor <= 3; ++factor) {
        std::vector<std::size_t> sizes;
        for (std::size_t b : base) sizes.push_back(b * n * factor);
        std::vector<int> expected;
        for (std::size_t b : base) expected.push_back(static_cast<int>(b * factor));
        CHECK(mms_goods(sized_classes(Polarity::kGoods, n, sizes), agent(1)) == sv(expected));
        for (int& e : expected) e = -e;
        CHECK(mms_chores(sized_classes(Polarity::kChores, n, sizes), agent(1)) == sv(expected));
      }
    }
  }

  TEST_CASE("satisfies_mms") {
    const Instance inst = goods_three_by_four();
    const Allocation final_alloc = allocation(inst, {{"g2"}, {"g1"}, {"g3", "g4"}});
    CHECK(satisfies_mms(inst, final_alloc, agent(3)));
    const Allocation hoard = allocation(inst, {{"g1", "g2", "g3", "g4"}, {}, {}});
    CHECK(satisfies_mms(inst, hoard, agent(1)));
    CHECK_FALSE(satisfies_mms(inst, hoard, agent(2)));
    CHECK(error_kind([&] { satisfies_mms(inst, Allocation(3, 4), agent(1)); }) ==
          ErrorKind::kContract);

    // Agent 2 keeps a single top good but needs a second-class one as well.
    const Instance seven = goods_three_by_seven();
    const Allocation efx_run = allocation(seven, {{"g1", "g3"}, {"g2"}, {"g4", "g5", "g6", "g7"}});
    CHECK(mms_goods(seven, agent(2)) == sv({1, 1}));
    CHECK_FALSE(satisfies_mms(seven, efx_run, agent(2)));
    CHECK(satisfies_mms(seven, efx_run, agent(1)));
    CHECK(satisfies_mms(seven, efx_run, agent(3)));
  }
}
