// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <invmap/mapping.hpp>

// Shared fixture mappings, built through the public text format so every
// suite also exercises the parser.

namespace fixtures {

/// x -> x + 1 (mod 16) as a 4-bit Boolean mapping.
inline invmap::VectorialMapping increment4() {
  return invmap::mapping_from_text(
      "n = 4\n"
      "f0 = x0 ^ 1\n"
      "f1 = x1 ^ x0\n"
      "f2 = x2 ^ x0*x1\n"
      "f3 = x3 ^ x0*x1*x2\n");
}

/// The running 4-bit binary machine: invertible, 3 gates, not an NLFSR.
inline invmap::VectorialMapping machine4() {
  return invmap::mapping_from_text(
      "n = 4\n"
      "f0 = x1\n"
      "f1 = x2\n"
      "f2 = x3 ^ x1*x2\n"
      "f3 = x0 ^ x3\n");
}

/// A 4-bit T-function with a fragmented state graph (8 fixed points,
/// 4 two-cycles).
inline invmap::VectorialMapping tfunction4() {
  return invmap::mapping_from_text(
      "n = 4\n"
      "f0 = x0\n"
      "f1 = x1\n"
      "f2 = x2 ^ x0\n"
      "f3 = x3 ^ x0 ^ x0*x1\n");
}

/// tfunction4 with variables renamed by (0,1,2,3) -> (1,2,3,0): one fixed
/// point plus a 15-cycle.
inline invmap::VectorialMapping renamed4() {
  return invmap::mapping_from_text(
      "n = 4\n"
      "f0 = x1\n"
      "f1 = x2\n"
      "f2 = x3 ^ x1\n"
      "f3 = x0 ^ x1 ^ x1*x2\n");
}

/// Invertible, but outside the sufficient condition: every output mixes
/// unrecovered variables, so the marking procedure stalls.
inline invmap::VectorialMapping uncertified4() {
  return invmap::mapping_from_text(
      "n = 4\n"
      "f0 = x1 ^ x0 ^ x0*x2\n"
      "f1 = x2 ^ x1 ^ x3\n"
      "f2 = x3 ^ x0*x2\n"
      "f3 = x0\n");
}

/// The 4-bit NLFSR feedback that generates the same sequence set as machine4
/// at five gates instead of three.
inline invmap::AnfFunction nlfsr_feedback4() {
  return invmap::parse_anf("x0 ^ x3 ^ x1*x2 ^ x2*x3", 4);
}

/// 20-bit full-period mapping, total cost 4: three outputs differ from the
/// shift backbone.
inline invmap::VectorialMapping full_period20_a() {
  return invmap::mapping_from_text(
      "n = 20\n"
      "f16 = x17 ^ x4*x11\n"
      "f13 = x14 ^ x13\n"
      "f4 = x5 ^ x1\n");
}

/// 20-bit full-period mapping, total cost 4: two outputs differ from the
/// shift backbone.
inline invmap::VectorialMapping full_period20_b() {
  return invmap::mapping_from_text(
      "n = 20\n"
      "f19 = x0 ^ x16\n"
      "f15 = x16 ^ x3 ^ x1*x15\n");
}

/// Collapses states 1 and 3: the smallest non-bijective pair fixture.
inline invmap::VectorialMapping collapse2() {
  return invmap::mapping_from_text(
      "n = 2\n"
      "f0 = x0\n"
      "f1 = x0\n");
}

}  // namespace fixtures
