// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "invmap/mapping.hpp"

namespace invmap {

/// One full period of a binary-machine output; all statistics treat it as
/// cyclic.
using BitSequence = std::vector<std::uint8_t>;

/// Element t is the chosen bit of the t-th iterate of m starting at seed
/// (element 0 comes from the seed itself).
BitSequence output_sequence(const VectorialMapping& m, State seed, unsigned bit,
                            std::uint64_t length);

struct BalanceResult {
  std::uint64_t ones = 0;
  std::uint64_t zeros = 0;
  bool balance_ok = false;  // |ones - zeros| <= 1
};

BalanceResult golomb_balance(const BitSequence& s);

struct RunHistogramEntry {
  std::uint64_t length = 0;
  std::uint64_t zero_runs = 0;
  std::uint64_t one_runs = 0;
  friend bool operator==(const RunHistogramEntry&, const RunHistogramEntry&) = default;
};

/// Runs are maximal constant blocks of the cyclic sequence. run_ok checks the
/// second Golomb postulate: with R runs in total, for every length L while
/// the expectation R/2^L is at least 1, the count of runs of length L must be
/// floor or ceil of that expectation, and 0-runs and 1-runs of that length
/// must be equally many whenever there is more than one.
struct RunsResult {
  std::vector<RunHistogramEntry> histogram;  // ascending by length, only nonzero rows
  std::uint64_t total_runs = 0;
  bool run_ok = false;
};

RunsResult golomb_runs(const BitSequence& s);

/// profile[tau-1] = sum_t (-1)^(s_t xor s_{t+tau mod p}) for tau = 1..p-1.
/// two_level iff all out-of-phase values coincide.
struct AutocorrResult {
  std::vector<std::int64_t> profile;
  bool two_level = false;
};

AutocorrResult autocorrelation(const BitSequence& s);

/// Everything above in one report. The autocorrelation profile is quadratic
/// in the period, so it can be skipped for long sequences.
struct SequenceReport {
  std::uint64_t period = 0;
  std::uint64_t ones = 0;
  std::uint64_t zeros = 0;
  bool balance_ok = false;
  std::vector<RunHistogramEntry> run_histogram;
  std::uint64_t total_runs = 0;
  bool run_ok = false;
  std::optional<std::vector<std::int64_t>> autocorrelation;
  std::optional<bool> two_level;
};

SequenceReport analyze_sequence(const BitSequence& s, bool with_autocorrelation = true);

/// The set of distinct cyclic output sequences of one bit over all cycles of
/// the state graph, each canonicalized to its lexicographically smallest
/// rotation and rendered as a '0'/'1' string.
std::set<std::string> distinct_cycle_sequences(const VectorialMapping& m, unsigned bit,
                                               unsigned cap = kDefaultExhaustiveCap);

}  // namespace invmap
