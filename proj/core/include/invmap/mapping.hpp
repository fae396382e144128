// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "invmap/anf.hpp"

namespace invmap {

/// A bijection candidate {0,1}^n -> {0,1}^n given by one ANF per output bit.
/// Immutable after construction.
class VectorialMapping {
public:
  /// Requires exactly n outputs, each an AnfFunction over n variables.
  VectorialMapping(unsigned n, std::vector<AnfFunction> outputs);

  /// The register that shifts every stage down: f_i = x_{(i+1) mod n}.
  static VectorialMapping shift(unsigned n);
  static VectorialMapping identity(unsigned n);

  unsigned width() const { return n_; }
  const std::vector<AnfFunction>& outputs() const { return outputs_; }
  const AnfFunction& output(unsigned i) const { return outputs_.at(i); }

  /// Replace one output function (returns a new mapping).
  VectorialMapping with_output(unsigned i, AnfFunction f) const;

  friend bool operator==(const VectorialMapping& a, const VectorialMapping& b) {
    return a.n_ == b.n_ && a.outputs_ == b.outputs_;
  }

private:
  unsigned n_;
  std::vector<AnfFunction> outputs_;
};

/// Bit i of the result is output i evaluated at s. Width must be <= kMaxEvalWidth.
State apply(const VectorialMapping& m, State s);

/// A bijection on variable indices {0,..,n-1}, stored as the image list:
/// index j is renamed to image(j).
class VariableRelabeling {
public:
  explicit VariableRelabeling(std::vector<std::uint32_t> image);

  static VariableRelabeling identity(unsigned n);

  unsigned size() const { return static_cast<unsigned>(image_.size()); }
  std::uint32_t image(std::uint32_t j) const { return image_.at(j); }
  const std::vector<std::uint32_t>& image_list() const { return image_; }
  VariableRelabeling inverse() const;

private:
  std::vector<std::uint32_t> image_;
};

/// Move bit j of s to bit r(j) of the result.
State permute_bits(State s, const VariableRelabeling& r);

/// Rename the variables inside every output: output i becomes
/// f_i with each x_j replaced by x_{r(j)}. Output positions are untouched,
/// so the gate structure (and op_cost) is preserved while the dynamics --
/// and in particular the cycle structure -- may change completely.
/// Satisfies apply(relabel(m,r), s) = apply(m, permute_bits(s, r.inverse())).
VectorialMapping relabel(const VectorialMapping& m, const VariableRelabeling& r);

/// Transport the whole mapping along the bit permutation: output i becomes
/// f_{r^-1(i)} with each x_j replaced by x_{r(j)}. The state graph of the
/// result is isomorphic to m's under permute_bits, so cycle-length multisets
/// are preserved.
VectorialMapping conjugate(const VectorialMapping& m, const VariableRelabeling& r);

/// True iff output i depends on input bits 0..i only, for every i.
bool is_t_function(const VectorialMapping& m);

/// For a T-function: true iff every f_i = x_i ^ g_i(x_0,..,x_{i-1}).
/// Throws std::invalid_argument when m is not a T-function.
bool t_function_invertible(const VectorialMapping& m);

/// State mapping of an n-stage NLFSR: stages shift down, stage n-1 is updated
/// by the feedback function. The feedback must be an AnfFunction over n vars.
VectorialMapping nlfsr_to_mapping(const AnfFunction& feedback, unsigned n);

/// Classical NLFSR invertibility: feedback = x_0 ^ g(x_1,..,x_{n-1}).
bool nlfsr_feedback_invertible(const AnfFunction& feedback);

// ---------------------------------------------------------------------------
// Mapping file format
//
//   # comment
//   n = 4
//   f2 = x3 ^ x1*x2
//   f3 = x0 ^ x3
//
// The first non-comment line fixes the width; each following line gives one
// output. Outputs not listed default to the shift f_i = x_{(i+1) mod n}.

/// Throws ParseError (with a 1-based line number) on malformed input.
VectorialMapping mapping_from_text(std::string_view text);

/// Canonical rendering with all n outputs listed; re-parses to an equal mapping.
std::string mapping_to_text(const VectorialMapping& m);

}  // namespace invmap
