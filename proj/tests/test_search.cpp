// SPDX-License-Identifier: Apache-2.0
#include <invmap/search.hpp>

#include <doctest.h>

#include <invmap/invcheck.hpp>
#include <invmap/report_io.hpp>
#include <invmap/stg.hpp>

#include "fixtures.hpp"

using namespace invmap;

TEST_CASE("total_cost counts only outputs that differ from the backbone") {
  const auto backbone = VectorialMapping::shift(20);
  CHECK(total_cost(fixtures::full_period20_a(), backbone) == 4);
  CHECK(total_cost(fixtures::full_period20_b(), backbone) == 4);
  CHECK(total_cost(backbone, backbone) == 0);
  CHECK_THROWS_AS(total_cost(fixtures::machine4(), backbone), std::invalid_argument);
}

TEST_CASE("a zero budget returns the backbone unchanged") {
  SearchConfig cfg;
  cfg.n = 8;
  cfg.op_budget = 0;
  auto rng = SplitMix64::substream(7, 0);
  CHECK(generate_candidate(cfg, rng) == VectorialMapping::shift(8));

  cfg.op_budget = 4;
  cfg.max_modified = 0;
  auto rng2 = SplitMix64::substream(7, 1);
  CHECK(generate_candidate(cfg, rng2) == VectorialMapping::shift(8));
}

TEST_CASE("candidates respect the budget and the modification bound") {
  SearchConfig cfg;
  cfg.n = 12;
  cfg.op_budget = 5;
  cfg.max_modified = 3;
  const auto backbone = VectorialMapping::shift(12);
  for (std::uint64_t idx = 0; idx < 300; ++idx) {
    auto rng = SplitMix64::substream(99, idx);
    const auto candidate = generate_candidate(cfg, rng);
    CHECK(total_cost(candidate, backbone) <= cfg.op_budget);
    unsigned modified = 0;
    for (unsigned i = 0; i < 12; ++i)
      if (!(candidate.output(i) == backbone.output(i))) ++modified;
    CHECK(modified <= cfg.max_modified);
    // No constant terms are drawn, so 0 stays fixed.
    CHECK(apply(candidate, 0) == 0);
  }
}

TEST_CASE("published finds are reachable as pinned backbones") {
  // With a zero budget the backbone itself is the only candidate, which
  // re-verifies a known mapping end to end.
  SearchConfig cfg;
  cfg.n = 20;
  cfg.backbone = fixtures::full_period20_b();
  cfg.op_budget = 0;
  cfg.candidate_limit = 1;
  const auto result = run_search(cfg);
  CHECK(result.candidates_tried == 1);
  CHECK(result.accepted_by_checker == 1);
  REQUIRE(result.found.size() == 1);
  CHECK(result.found[0].verified_period == (1u << 20) - 1);
  CHECK(result.found[0].mapping == fixtures::full_period20_b());
  // total_cost is measured against the pinned backbone here, hence 0.
  CHECK(result.found[0].total_cost == 0);
}

TEST_CASE("run_search is deterministic, including across thread counts") {
  SearchConfig cfg;
  cfg.n = 10;
  cfg.op_budget = 4;
  cfg.max_modified = 3;
  cfg.rng_seed = 0xfeed;
  cfg.candidate_limit = 3000;

  const auto a = run_search(cfg);
  const auto b = run_search(cfg);
  CHECK(to_json(a) == to_json(b));

  cfg.threads = 4;
  const auto parallel = run_search(cfg);
  CHECK(to_json(parallel) == to_json(a));

  // A different seed explores a different candidate stream.
  bool any_differ = false;
  for (std::uint64_t idx = 0; idx < 20 && !any_differ; ++idx) {
    auto r1 = SplitMix64::substream(cfg.rng_seed, idx);
    auto r2 = SplitMix64::substream(cfg.rng_seed + 1, idx);
    any_differ = !(generate_candidate(cfg, r1) == generate_candidate(cfg, r2));
  }
  CHECK(any_differ);
}

TEST_CASE("every reported find re-verifies independently") {
  SearchConfig cfg;
  cfg.n = 10;
  cfg.op_budget = 4;
  cfg.max_modified = 3;
  cfg.rng_seed = 0xcafe;
  cfg.candidate_limit = 4000;
  const auto result = run_search(cfg);
  CHECK(result.accepted_by_checker > 0);
  CHECK(!result.found.empty());
  const auto backbone = VectorialMapping::shift(10);
  for (const auto& f : result.found) {
    CHECK(check_theorem1(f.mapping).accepted);
    CHECK(period_from(f.mapping, 1) == PeriodResult{0, (1u << 10) - 1});
    CHECK(f.verified_period == (1u << 10) - 1);
    CHECK(f.total_cost == total_cost(f.mapping, backbone));
    CHECK(f.total_cost <= cfg.op_budget);
  }
  // Canonical forms are unique across the find list.
  std::set<std::string> keys;
  for (const auto& f : result.found) keys.insert(mapping_to_text(f.mapping));
  CHECK(keys.size() == result.found.size());
}

TEST_CASE("an impossible target yields an empty result") {
  SearchConfig cfg;
  cfg.n = 6;
  cfg.op_budget = 4;
  cfg.rng_seed = 3;
  cfg.candidate_limit = 500;
  cfg.period_target = std::uint64_t{1} << 6;  // needs 0 on the cycle, but 0 is fixed
  const auto result = run_search(cfg);
  CHECK(result.found.empty());
  CHECK(result.candidates_tried == 500);
}

TEST_CASE("invalid configurations are rejected") {
  SearchConfig cfg;
  cfg.n = 0;
  CHECK_THROWS_AS(run_search(cfg), std::invalid_argument);
  cfg.n = 6;
  cfg.candidate_limit = 0;
  CHECK_THROWS_AS(run_search(cfg), std::invalid_argument);
  cfg.candidate_limit = 1;
  cfg.period_target = (std::uint64_t{1} << 6) + 1;
  CHECK_THROWS_AS(run_search(cfg), std::invalid_argument);
  cfg.period_target.reset();
  cfg.backbone = VectorialMapping::shift(5);
  CHECK_THROWS_AS(run_search(cfg), std::invalid_argument);
}

TEST_CASE("search config JSON round trips") {
  SearchConfig cfg;
  cfg.n = 12;
  cfg.op_budget = 6;
  cfg.max_modified = 2;
  cfg.rng_seed = 42;
  cfg.candidate_limit = 10;
  cfg.period_target = 4095;
  const auto parsed = search_config_from_json(to_json(cfg));
  CHECK(parsed.n == cfg.n);
  CHECK(parsed.op_budget == cfg.op_budget);
  CHECK(parsed.max_modified == cfg.max_modified);
  CHECK(parsed.rng_seed == cfg.rng_seed);
  CHECK(parsed.candidate_limit == cfg.candidate_limit);
  CHECK(parsed.period_target == cfg.period_target);
  CHECK(!parsed.backbone.has_value());

  CHECK_THROWS_AS(search_config_from_json("{\"bogus\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(search_config_from_json("not json"), std::invalid_argument);

  SearchConfig with_backbone = cfg;
  with_backbone.backbone = fixtures::full_period20_b();
  with_backbone.n = 20;
  const auto parsed2 = search_config_from_json(to_json(with_backbone));
  REQUIRE(parsed2.backbone.has_value());
  CHECK(*parsed2.backbone == fixtures::full_period20_b());
}
