// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "invmap/mapping.hpp"

namespace invmap {

struct CycleEntry {
  std::uint64_t length = 0;
  State representative = 0;  // smallest state on the cycle
  friend bool operator==(const CycleEntry&, const CycleEntry&) = default;
};

/// Exact cycle decomposition of the state transition graph. For invertible
/// mappings the cycles partition all 2^n states; otherwise some states sit on
/// tails leading into the cycles.
struct CycleReport {
  unsigned n = 0;
  std::vector<CycleEntry> cycles;  // sorted by (length, representative)
  std::uint64_t total_states_covered = 0;  // states lying on cycles
  bool tails_present = false;
};

/// Full traversal of all 2^n states. Throws std::invalid_argument when the
/// width exceeds cap.
CycleReport cycle_structure(const VectorialMapping& m, unsigned cap = kDefaultExhaustiveCap);

struct PeriodResult {
  std::uint64_t tail_length = 0;   // steps before the orbit enters its cycle
  std::uint64_t cycle_length = 0;
  friend bool operator==(const PeriodResult&, const PeriodResult&) = default;
};

/// Tail and cycle length of the orbit of seed, found with Brent's
/// teleporting-pointer scheme: constant memory, any width up to kMaxEvalWidth.
PeriodResult period_from(const VectorialMapping& m, State seed);

/// All states with apply(m, s) = s, ascending.
std::vector<State> fixed_points(const VectorialMapping& m, unsigned cap = kDefaultExhaustiveCap);

}  // namespace invmap
