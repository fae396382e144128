// SPDX-License-Identifier: Apache-2.0
#include "invmap/search.hpp"

#include <atomic>
#include <set>
#include <thread>

#include "invmap/invcheck.hpp"
#include "invmap/stg.hpp"

namespace invmap {

namespace {

std::uint64_t default_period_target(unsigned n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

const VectorialMapping& backbone_of(const SearchConfig& cfg, VectorialMapping& storage) {
  if (cfg.backbone) return *cfg.backbone;
  storage = VectorialMapping::shift(cfg.n);
  return storage;
}

void validate_config(const SearchConfig& cfg) {
  if (cfg.n == 0 || cfg.n > kMaxEvalWidth)
    throw std::invalid_argument("search width must be in 1.." + std::to_string(kMaxEvalWidth));
  if (cfg.candidate_limit == 0)
    throw std::invalid_argument("candidate_limit must be at least 1");
  if (cfg.backbone && cfg.backbone->width() != cfg.n)
    throw std::invalid_argument("backbone width does not match search width");
  const auto max_target = default_period_target(cfg.n) + (cfg.n == 64 ? 0 : 1);
  if (cfg.period_target && *cfg.period_target > max_target)
    throw std::invalid_argument("period_target exceeds the state count");
}

}  // namespace

unsigned total_cost(const VectorialMapping& m, const VectorialMapping& backbone) {
  if (m.width() != backbone.width())
    throw std::invalid_argument("mapping and backbone widths differ");
  unsigned cost = 0;
  for (unsigned i = 0; i < m.width(); ++i)
    if (!(m.output(i) == backbone.output(i)))
      cost += static_cast<unsigned>(op_cost(m.output(i)).total());
  return cost;
}

VectorialMapping generate_candidate(const SearchConfig& cfg, SplitMix64& rng) {
  validate_config(cfg);
  VectorialMapping storage = VectorialMapping::identity(1);
  const VectorialMapping& backbone = backbone_of(cfg, storage);
  if (cfg.op_budget == 0 || cfg.max_modified == 0) return backbone;

  const unsigned n = cfg.n;
  const unsigned touch = std::min<unsigned>(
      1 + static_cast<unsigned>(rng.below(cfg.max_modified)), n);

  // Partial Fisher-Yates: the first `touch` entries are the target outputs.
  std::vector<std::uint32_t> order(n);
  for (unsigned i = 0; i < n; ++i) order[i] = i;
  for (unsigned i = 0; i < touch; ++i)
    std::swap(order[i], order[i + rng.below(n - i)]);

  std::vector<AnfFunction> outputs = backbone.outputs();
  unsigned cost = 0;

  auto try_insert = [&](std::uint32_t target) {
    const unsigned remaining = cfg.op_budget - cost;
    if (remaining == 0) return false;
    unsigned degree = 1;
    if (remaining >= 2 && n >= 2) degree = 1 + static_cast<unsigned>(rng.below(2));
    std::vector<std::uint32_t> vars;
    vars.push_back(static_cast<std::uint32_t>(rng.below(n)));
    if (degree == 2) {
      std::uint32_t v;
      do {
        v = static_cast<std::uint32_t>(rng.below(n));
      } while (v == vars[0]);
      vars.push_back(v);
    }
    Monomial mono(std::move(vars));
    if (outputs[target].contains(mono)) return false;  // would cancel
    AnfFunction updated = outputs[target].with_xored(mono);
    const unsigned previous =
        outputs[target] == backbone.output(target)
            ? 0
            : static_cast<unsigned>(op_cost(outputs[target]).total());
    const unsigned updated_cost = updated == backbone.output(target)
                                      ? 0
                                      : static_cast<unsigned>(op_cost(updated).total());
    if (cost - previous + updated_cost > cfg.op_budget) return false;
    cost = cost - previous + updated_cost;
    outputs[target] = std::move(updated);
    return true;
  };

  for (unsigned i = 0; i < touch; ++i) try_insert(order[i]);
  while (cost < cfg.op_budget && rng.below(2) == 0)
    try_insert(order[rng.below(touch)]);

  return VectorialMapping(n, std::move(outputs));
}

SearchResult run_search(const SearchConfig& cfg) {
  validate_config(cfg);
  VectorialMapping storage = VectorialMapping::identity(1);
  const VectorialMapping& backbone = backbone_of(cfg, storage);
  const std::uint64_t target = cfg.period_target.value_or(default_period_target(cfg.n));

  SearchResult result;
  result.n = cfg.n;
  result.rng_seed = cfg.rng_seed;
  result.period_target = target;
  result.candidates_tried = cfg.candidate_limit;

  const std::uint64_t limit = cfg.candidate_limit;
  std::vector<std::uint8_t> accepted(limit, 0);
  std::vector<std::optional<SearchFinding>> findings(limit);

  auto evaluate = [&](std::uint64_t idx) {
    SplitMix64 rng = SplitMix64::substream(cfg.rng_seed, idx);
    VectorialMapping candidate = generate_candidate(cfg, rng);
    const auto outcome = check_theorem1(candidate);
    if (!outcome.accepted) return;  // rejected candidates are never period-tested
    accepted[idx] = 1;
    const auto period = period_from(candidate, 1);
    if (period.tail_length == 0 && period.cycle_length == target) {
      const unsigned cost = total_cost(candidate, backbone);
      findings[idx] = SearchFinding{std::move(candidate), idx, cost, period.cycle_length};
    }
  };

  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1) {
    for (std::uint64_t idx = 0; idx < limit; ++idx) evaluate(idx);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t idx = next.fetch_add(1); idx < limit; idx = next.fetch_add(1))
          evaluate(idx);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Merge in candidate-index order; first occurrence of a canonical form wins.
  std::set<std::string> seen;
  for (std::uint64_t idx = 0; idx < limit; ++idx) {
    result.accepted_by_checker += accepted[idx];
    if (!findings[idx]) continue;
    if (seen.insert(mapping_to_text(findings[idx]->mapping)).second)
      result.found.push_back(std::move(*findings[idx]));
  }
  return result;
}

}  // namespace invmap
