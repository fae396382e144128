// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invmap/mapping.hpp"

namespace invmap {

/// Witness of the sufficient invertibility condition: functions listed in an
/// order in which each can be solved for its pivot variable, the pivot
/// depending only on pivots recovered earlier. Pivots are distinct.
struct CertificateEntry {
  unsigned output_index;  // i_k
  std::uint32_t pivot;    // j_k, a free variable of f_{i_k}
  friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};

struct InvertibilityCertificate {
  std::vector<CertificateEntry> order;
  friend bool operator==(const InvertibilityCertificate&, const InvertibilityCertificate&) = default;
};

enum class RejectReason {
  none,
  /// No output is of the form x_j or x_j ^ 1 with an unclaimed pivot, so the
  /// triangular order has no base row.
  no_constant_pivot_base,
  /// The marking loop stalled with outputs left over.
  unmarkable_residue,
};

std::string to_string(RejectReason reason);

struct CheckOutcome {
  bool accepted = false;
  std::optional<InvertibilityCertificate> certificate;  // present iff accepted
  RejectReason reason = RejectReason::none;
  std::vector<unsigned> unmarked;  // offending outputs, on rejection
};

/// Sufficient-condition check. Acceptance guarantees invertibility (the
/// certificate drives a triangular inversion); rejection only means this
/// condition failed -- the mapping may still be a bijection.
///
/// Deterministic marking procedure: first every output whose non-pivot part
/// is constant is marked in index order (skipping outputs whose sole pivot is
/// already claimed); then, repeatedly scanning from output 0 and restarting
/// after each success, any unmarked output with an unclaimed free variable
/// whose remaining dependencies are all claimed pivots is marked. Accept iff
/// everything gets marked.
CheckOutcome check_theorem1(const VectorialMapping& m);

/// Throws std::invalid_argument unless cert is a valid certificate for m.
void validate_certificate(const VectorialMapping& m, const InvertibilityCertificate& cert);

/// Recover the unique preimage of y by back-substitution along the
/// certificate order. Throws std::invalid_argument on an invalid certificate.
State invert_state(const VectorialMapping& m, const InvertibilityCertificate& cert, State y);

struct CollisionWitness {
  State a = 0;
  State b = 0;
};

struct OracleResult {
  bool invertible = false;
  std::optional<CollisionWitness> collision;  // two states with equal image
};

/// Exhaustive bijectivity test over all 2^n states.
/// Throws std::invalid_argument when the width exceeds cap.
OracleResult brute_force_invertible(const VectorialMapping& m,
                                    unsigned cap = kDefaultExhaustiveCap);

/// Materialize the inverse mapping from per-bit truth tables of the inverse
/// permutation. Throws std::invalid_argument if m is not invertible or the
/// width exceeds cap.
VectorialMapping inverse_mapping(const VectorialMapping& m,
                                 unsigned cap = kDefaultExhaustiveCap);

/// Image of every state, indexed by state. Shared helper for the exhaustive
/// analyses; uses per-output truth tables so dense ANFs stay cheap.
std::vector<State> successor_table(const VectorialMapping& m,
                                   unsigned cap = kDefaultExhaustiveCap);

}  // namespace invmap
