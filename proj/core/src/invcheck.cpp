// SPDX-License-Identifier: Apache-2.0
#include "invmap/invcheck.hpp"

#include <algorithm>

namespace invmap {

std::string to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::none:
      return "none";
    case RejectReason::no_constant_pivot_base:
      return "no output of the form x_j or x_j ^ 1 provides a base pivot";
    case RejectReason::unmarkable_residue:
      return "remaining outputs have no usable free variable";
  }
  return "unknown";
}

namespace {

// f = x_j, or f = x_j ^ 1: exactly one singleton monomial plus an optional
// constant term.
bool constant_rest(const AnfFunction& f, std::uint32_t& pivot) {
  const auto& ms = f.monomials();
  if (ms.size() == 1 && ms[0].degree() == 1) {
    pivot = ms[0].vars()[0];
    return true;
  }
  if (ms.size() == 2 && ms[0].is_constant_one() && ms[1].degree() == 1) {
    pivot = ms[1].vars()[0];
    return true;
  }
  return false;
}

}  // namespace

CheckOutcome check_theorem1(const VectorialMapping& m) {
  const unsigned n = m.width();
  std::vector<std::vector<std::uint32_t>> free(n), deps(n);
  for (unsigned i = 0; i < n; ++i) {
    free[i] = free_vars(m.output(i));
    deps[i] = dep_set(m.output(i));
  }

  std::vector<bool> marked(n, false);
  std::vector<bool> pivot_used(n, false);
  InvertibilityCertificate cert;
  cert.order.reserve(n);

  // Base pass: outputs whose rest is constant.
  bool any_base = false;
  for (unsigned i = 0; i < n; ++i) {
    std::uint32_t pivot = 0;
    if (!constant_rest(m.output(i), pivot)) continue;
    if (pivot_used[pivot]) continue;  // a second x_j row can never be marked
    pivot_used[pivot] = true;
    marked[i] = true;
    cert.order.push_back({i, pivot});
    any_base = true;
  }

  CheckOutcome outcome;
  if (!any_base) {
    outcome.reason = RejectReason::no_constant_pivot_base;
    for (unsigned i = 0; i < n; ++i)
      if (!marked[i]) outcome.unmarked.push_back(i);
    return outcome;
  }

  // Marking loop: restart the scan after every success.
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (unsigned i = 0; i < n && !progressed; ++i) {
      if (marked[i]) continue;
      for (auto j : free[i]) {  // ascending; the lowest eligible pivot wins
        if (pivot_used[j]) continue;
        bool rest_known = true;
        for (auto d : deps[i]) {
          if (d != j && !pivot_used[d]) {
            rest_known = false;
            break;
          }
        }
        if (!rest_known) continue;
        pivot_used[j] = true;
        marked[i] = true;
        cert.order.push_back({i, j});
        progressed = true;
        break;
      }
    }
  }

  for (unsigned i = 0; i < n; ++i)
    if (!marked[i]) outcome.unmarked.push_back(i);
  if (outcome.unmarked.empty()) {
    outcome.accepted = true;
    outcome.certificate = std::move(cert);
  } else {
    outcome.reason = RejectReason::unmarkable_residue;
  }
  return outcome;
}

void validate_certificate(const VectorialMapping& m, const InvertibilityCertificate& cert) {
  const unsigned n = m.width();
  if (cert.order.size() != n)
    throw std::invalid_argument("certificate must list every output exactly once");
  std::vector<bool> output_seen(n, false), pivot_seen(n, false);
  std::vector<bool> pivot_known(n, false);
  for (const auto& entry : cert.order) {
    if (entry.output_index >= n || output_seen[entry.output_index])
      throw std::invalid_argument("certificate output indices are not a permutation");
    if (entry.pivot >= n || pivot_seen[entry.pivot])
      throw std::invalid_argument("certificate pivots are not distinct");
    output_seen[entry.output_index] = true;
    pivot_seen[entry.pivot] = true;

    const auto free = free_vars(m.output(entry.output_index));
    if (!std::binary_search(free.begin(), free.end(), entry.pivot))
      throw std::invalid_argument("pivot x" + std::to_string(entry.pivot) +
                                  " is not a free variable of f" +
                                  std::to_string(entry.output_index));
    for (auto d : dep_set(m.output(entry.output_index))) {
      if (d != entry.pivot && !pivot_known[d])
        throw std::invalid_argument("f" + std::to_string(entry.output_index) +
                                    " depends on x" + std::to_string(d) +
                                    " before it is recovered");
    }
    pivot_known[entry.pivot] = true;
  }
}

State invert_state(const VectorialMapping& m, const InvertibilityCertificate& cert, State y) {
  validate_certificate(m, cert);
  // Row by row: with the pivot bit still zero, f evaluates to its rest g,
  // which depends only on pivots recovered so far.
  State x = 0;
  for (const auto& entry : cert.order) {
    const bool g = m.output(entry.output_index).eval(x);
    const bool bit = ((y >> entry.output_index) & 1) ^ g;
    x |= static_cast<State>(bit) << entry.pivot;
  }
  return x;
}

std::vector<State> successor_table(const VectorialMapping& m, unsigned cap) {
  const unsigned n = m.width();
  if (n > cap)
    throw std::invalid_argument("width " + std::to_string(n) + " exceeds exhaustive cap " +
                                std::to_string(cap));
  const std::size_t size = std::size_t{1} << n;
  std::vector<State> succ(size, 0);
  std::uint64_t monomial_count = 0;
  for (const auto& f : m.outputs()) monomial_count += f.monomials().size();
  if (monomial_count > std::uint64_t{4} * n) {
    // Dense ANFs: per-output truth tables via the Moebius transform,
    // O(n * 2^n) per output instead of one monomial scan per state.
    for (unsigned i = 0; i < n; ++i) {
      const auto tt = truth_table(m.output(i), cap);
      for (std::size_t s = 0; s < size; ++s)
        succ[s] |= static_cast<State>(tt[s]) << i;
    }
  } else {
    for (std::size_t s = 0; s < size; ++s) succ[s] = apply(m, s);
  }
  return succ;
}

OracleResult brute_force_invertible(const VectorialMapping& m, unsigned cap) {
  const auto succ = successor_table(m, cap);
  std::vector<bool> seen(succ.size(), false);
  for (std::size_t s = 0; s < succ.size(); ++s) {
    const State y = succ[s];
    if (seen[y]) {
      // Recover the earlier preimage for the witness.
      for (std::size_t t = 0; t < s; ++t) {
        if (succ[t] == y)
          return {false, CollisionWitness{static_cast<State>(t), static_cast<State>(s)}};
      }
    }
    seen[y] = true;
  }
  return {true, std::nullopt};
}

VectorialMapping inverse_mapping(const VectorialMapping& m, unsigned cap) {
  const auto succ = successor_table(m, cap);
  const std::size_t size = succ.size();
  std::vector<State> pre(size, 0);
  std::vector<bool> hit(size, false);
  for (std::size_t s = 0; s < size; ++s) {
    const State y = succ[s];
    if (hit[y]) throw std::invalid_argument("mapping is not invertible");
    hit[y] = true;
    pre[y] = static_cast<State>(s);
  }
  const unsigned n = m.width();
  std::vector<AnfFunction> outs;
  outs.reserve(n);
  TruthTableData tt(size);
  for (unsigned i = 0; i < n; ++i) {
    for (std::size_t y = 0; y < size; ++y) tt[y] = static_cast<std::uint8_t>(pre[y] >> i & 1);
    outs.push_back(anf_from_truth_table(tt));
  }
  return VectorialMapping(n, std::move(outs));
}

}  // namespace invmap
