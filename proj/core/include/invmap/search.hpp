// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "invmap/mapping.hpp"
#include "invmap/rng.hpp"

namespace invmap {

/// Parameters of the seeded random search for cheap full-period mappings.
struct SearchConfig {
  unsigned n = 20;
  /// Pivot skeleton the candidates perturb; the shift register when absent.
  std::optional<VectorialMapping> backbone;
  /// Maximum total binary Boolean operations across outputs that differ from
  /// the backbone.
  unsigned op_budget = 4;
  /// Maximum number of outputs a candidate may change.
  unsigned max_modified = 3;
  std::uint64_t rng_seed = 1;
  std::uint64_t candidate_limit = 1000;
  /// Required cycle length from seed state 1; 2^n - 1 when absent.
  std::optional<std::uint64_t> period_target;
  unsigned threads = 1;
};

struct SearchFinding {
  VectorialMapping mapping;
  std::uint64_t candidate_index = 0;
  unsigned total_cost = 0;
  std::uint64_t verified_period = 0;
};

struct SearchResult {
  unsigned n = 0;
  std::uint64_t rng_seed = 0;
  std::uint64_t period_target = 0;
  std::uint64_t candidates_tried = 0;
  std::uint64_t accepted_by_checker = 0;
  std::vector<SearchFinding> found;  // candidate-index order, deduplicated
};

/// Sum of op_cost totals over outputs that differ from the backbone.
unsigned total_cost(const VectorialMapping& m, const VectorialMapping& backbone);

/// One random perturbation of the backbone: up to max_modified outputs get
/// monomials of degree 1 or 2 XOR-ed in, keeping total_cost within op_budget.
/// No constant terms are drawn, so state 0 stays a fixed point of every
/// candidate. The result is well-formed but not necessarily invertible.
VectorialMapping generate_candidate(const SearchConfig& cfg, SplitMix64& rng);

/// Evaluate candidate_limit candidates: filter through the sufficient
/// invertibility condition, verify the period from seed state 1 only for
/// accepted ones, and collect the mappings that hit the target exactly.
/// Bit-identical results for a fixed (config, seed), including with threads > 1.
SearchResult run_search(const SearchConfig& cfg);

}  // namespace invmap
