// SPDX-License-Identifier: Apache-2.0
#include "invmap/seqstats.hpp"

#include <algorithm>
#include <map>

#include "invmap/invcheck.hpp"
#include "invmap/stg.hpp"

namespace invmap {

BitSequence output_sequence(const VectorialMapping& m, State seed, unsigned bit,
                            std::uint64_t length) {
  if (bit >= m.width())
    throw std::invalid_argument("output bit " + std::to_string(bit) +
                                " out of range for width " + std::to_string(m.width()));
  BitSequence seq;
  seq.reserve(length);
  State s = seed;
  for (std::uint64_t t = 0; t < length; ++t) {
    seq.push_back(static_cast<std::uint8_t>(s >> bit & 1));
    s = apply(m, s);
  }
  return seq;
}

BalanceResult golomb_balance(const BitSequence& s) {
  BalanceResult r;
  for (auto b : s) b ? ++r.ones : ++r.zeros;
  const std::uint64_t diff = r.ones > r.zeros ? r.ones - r.zeros : r.zeros - r.ones;
  r.balance_ok = diff <= 1;
  return r;
}

RunsResult golomb_runs(const BitSequence& s) {
  if (s.empty()) throw std::invalid_argument("sequence must be non-empty");
  const std::size_t p = s.size();

  std::map<std::uint64_t, RunHistogramEntry> hist;
  auto bump = [&hist](std::uint64_t length, std::uint8_t value) {
    auto& row = hist[length];
    row.length = length;
    value ? ++row.one_runs : ++row.zero_runs;
  };

  // Find a run boundary to anchor the cyclic scan; a constant sequence is a
  // single run covering the whole period.
  std::size_t start = p;
  for (std::size_t t = 0; t < p; ++t) {
    if (s[t] != s[(t + p - 1) % p]) {
      start = t;
      break;
    }
  }
  RunsResult result;
  if (start == p) {
    bump(p, s[0]);
    result.total_runs = 1;
  } else {
    std::size_t t = 0;
    while (t < p) {
      const std::uint8_t value = s[(start + t) % p];
      std::size_t len = 1;
      while (t + len < p && s[(start + t + len) % p] == value) ++len;
      bump(len, value);
      ++result.total_runs;
      t += len;
    }
  }

  for (auto& [len, row] : hist) result.histogram.push_back(row);

  const std::uint64_t runs = result.total_runs;
  result.run_ok = true;
  for (std::uint64_t length = 1; (std::uint64_t{1} << length) <= runs; ++length) {
    const std::uint64_t expected_floor = runs >> length;
    const std::uint64_t expected_ceil = (runs + (std::uint64_t{1} << length) - 1) >> length;
    auto it = hist.find(length);
    const std::uint64_t zero_runs = it == hist.end() ? 0 : it->second.zero_runs;
    const std::uint64_t one_runs = it == hist.end() ? 0 : it->second.one_runs;
    const std::uint64_t count = zero_runs + one_runs;
    if (count < expected_floor || count > expected_ceil) {
      result.run_ok = false;
      break;
    }
    if (count > 1 && zero_runs != one_runs) {
      result.run_ok = false;
      break;
    }
  }
  return result;
}

AutocorrResult autocorrelation(const BitSequence& s) {
  if (s.empty()) throw std::invalid_argument("sequence must be non-empty");
  const std::size_t p = s.size();
  AutocorrResult r;
  r.profile.reserve(p - 1);
  for (std::size_t tau = 1; tau < p; ++tau) {
    std::int64_t acc = 0;
    for (std::size_t t = 0; t < p; ++t)
      acc += (s[t] ^ s[(t + tau) % p]) ? -1 : 1;
    r.profile.push_back(acc);
  }
  r.two_level = std::all_of(r.profile.begin(), r.profile.end(),
                            [&](std::int64_t v) { return v == r.profile.front(); });
  if (r.profile.empty()) r.two_level = true;  // period 1: no out-of-phase shifts
  return r;
}

SequenceReport analyze_sequence(const BitSequence& s, bool with_autocorrelation) {
  SequenceReport report;
  report.period = s.size();
  const auto balance = golomb_balance(s);
  report.ones = balance.ones;
  report.zeros = balance.zeros;
  report.balance_ok = balance.balance_ok;
  auto runs = golomb_runs(s);
  report.run_histogram = std::move(runs.histogram);
  report.total_runs = runs.total_runs;
  report.run_ok = runs.run_ok;
  if (with_autocorrelation) {
    auto ac = autocorrelation(s);
    report.autocorrelation = std::move(ac.profile);
    report.two_level = ac.two_level;
  }
  return report;
}

std::set<std::string> distinct_cycle_sequences(const VectorialMapping& m, unsigned bit,
                                               unsigned cap) {
  if (bit >= m.width())
    throw std::invalid_argument("output bit " + std::to_string(bit) +
                                " out of range for width " + std::to_string(m.width()));
  const auto report = cycle_structure(m, cap);
  const auto succ = successor_table(m, cap);

  std::set<std::string> sequences;
  for (const auto& cycle : report.cycles) {
    std::string seq;
    seq.reserve(cycle.length);
    State s = cycle.representative;
    for (std::uint64_t t = 0; t < cycle.length; ++t) {
      seq += static_cast<char>('0' + (s >> bit & 1));
      s = succ[s];
    }
    std::string best = seq;
    for (std::size_t k = 1; k < seq.size(); ++k) {
      std::string rot = seq.substr(k) + seq.substr(0, k);
      if (rot < best) best = std::move(rot);
    }
    sequences.insert(std::move(best));
  }
  return sequences;
}

}  // namespace invmap
