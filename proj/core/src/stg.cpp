// SPDX-License-Identifier: Apache-2.0
#include "invmap/stg.hpp"

#include <algorithm>

#include "invmap/invcheck.hpp"

namespace invmap {

CycleReport cycle_structure(const VectorialMapping& m, unsigned cap) {
  const auto succ = successor_table(m, cap);
  const std::size_t size = succ.size();

  CycleReport report;
  report.n = m.width();

  // 0 = unvisited, 1 = on the current path, 2 = finished.
  std::vector<std::uint8_t> color(size, 0);
  std::vector<std::uint64_t> path_pos(size, 0);
  std::vector<State> path;

  for (std::size_t start = 0; start < size; ++start) {
    if (color[start]) continue;
    path.clear();
    State s = static_cast<State>(start);
    while (color[s] == 0) {
      color[s] = 1;
      path_pos[s] = path.size();
      path.push_back(s);
      s = succ[s];
    }
    if (color[s] == 1) {
      // Closed a new cycle inside the current path.
      const std::uint64_t first = path_pos[s];
      State rep = path[first];
      for (std::size_t k = first + 1; k < path.size(); ++k) rep = std::min(rep, path[k]);
      report.cycles.push_back({path.size() - first, rep});
      report.total_states_covered += path.size() - first;
    }
    for (State p : path) color[p] = 2;
  }

  std::sort(report.cycles.begin(), report.cycles.end(), [](const CycleEntry& a, const CycleEntry& b) {
    return a.length != b.length ? a.length < b.length : a.representative < b.representative;
  });
  report.tails_present = report.total_states_covered != size;
  return report;
}

PeriodResult period_from(const VectorialMapping& m, State seed) {
  // Brent: the tortoise teleports to the hare at powers of two.
  std::uint64_t power = 1, lambda = 1;
  State tortoise = seed;
  State hare = apply(m, seed);
  while (tortoise != hare) {
    if (power == lambda) {
      tortoise = hare;
      power <<= 1;
      lambda = 0;
    }
    hare = apply(m, hare);
    ++lambda;
  }

  std::uint64_t mu = 0;
  tortoise = hare = seed;
  for (std::uint64_t i = 0; i < lambda; ++i) hare = apply(m, hare);
  while (tortoise != hare) {
    tortoise = apply(m, tortoise);
    hare = apply(m, hare);
    ++mu;
  }
  return {mu, lambda};
}

std::vector<State> fixed_points(const VectorialMapping& m, unsigned cap) {
  const auto succ = successor_table(m, cap);
  std::vector<State> fixed;
  for (std::size_t s = 0; s < succ.size(); ++s)
    if (succ[s] == static_cast<State>(s)) fixed.push_back(static_cast<State>(s));
  return fixed;
}

}  // namespace invmap
