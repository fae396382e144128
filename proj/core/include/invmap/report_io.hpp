// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "invmap/invcheck.hpp"
#include "invmap/search.hpp"
#include "invmap/seqstats.hpp"
#include "invmap/stg.hpp"

namespace invmap {

// Deterministic serializations: fixed key order, two-space indentation, one
// trailing newline. Equal inputs produce byte-identical output.

std::string to_json(const CheckOutcome& outcome);
std::string to_text(const CheckOutcome& outcome);

std::string to_json(const CycleReport& report);
std::string to_text(const CycleReport& report);

std::string to_json(const SequenceReport& report);
std::string to_text(const SequenceReport& report);

std::string to_json(const SearchResult& result);
std::string to_text(const SearchResult& result);

/// Parse a SearchConfig from a JSON document. Recognized keys: n, op_budget,
/// max_modified, rng_seed, candidate_limit, period_target, threads, backbone
/// (mapping file text). Unknown keys are rejected.
SearchConfig search_config_from_json(const std::string& text);

std::string to_json(const SearchConfig& cfg);

}  // namespace invmap
