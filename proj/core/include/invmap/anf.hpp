// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invmap {

/// Truth-table style operations refuse to enumerate more than 2^cap states
/// unless the caller passes a larger cap explicitly.
inline constexpr unsigned kDefaultExhaustiveCap = 24;

/// Widest function that supports word-based evaluation (one state per word).
inline constexpr unsigned kMaxEvalWidth = 64;

/// A state of an n-bit register; bit i carries the value of variable x_i
/// (bit 0 is least significant).
using State = std::uint64_t;

/// Error raised while parsing an expression or a mapping file.
/// `position` is a 0-based byte offset into the offending expression;
/// `line` is 1-based when the input came from a multi-line document, 0 otherwise.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t position, std::size_t line = 0)
      : std::runtime_error(std::move(message)), position(position), line(line) {}

  std::size_t position;
  std::size_t line;
};

/// One AND-product of variables; the empty product is the constant 1.
/// Variable indices are kept sorted and distinct (x*x = x over GF(2)).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> vars);

  const std::vector<std::uint32_t>& vars() const { return vars_; }
  std::size_t degree() const { return vars_.size(); }
  bool is_constant_one() const { return vars_.empty(); }
  bool contains(std::uint32_t var) const;

  /// AND-mask over the state word; only valid for max index < kMaxEvalWidth.
  std::uint64_t mask() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Canonical order: by degree, then lexicographically by variable indices.
  friend bool operator<(const Monomial& a, const Monomial& b);

private:
  std::vector<std::uint32_t> vars_;
};

/// A Boolean function in Algebraic Normal Form: an XOR of distinct monomials
/// over variables x_0..x_{n-1}. Canonical on construction: duplicate monomials
/// cancel in pairs, the remainder is sorted. The empty set is the constant 0.
/// Immutable after construction; safe to share across threads.
class AnfFunction {
public:
  AnfFunction() : var_count_(0) {}
  AnfFunction(unsigned var_count, std::vector<Monomial> monomials);

  static AnfFunction zero(unsigned var_count) { return AnfFunction(var_count, {}); }
  static AnfFunction one(unsigned var_count);
  static AnfFunction var(unsigned var_count, std::uint32_t index);

  unsigned var_count() const { return var_count_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  bool is_zero() const { return monomials_.empty(); }
  bool contains(const Monomial& m) const;

  /// This function with one monomial XOR-ed in (added if absent, cancelled
  /// if present).
  AnfFunction with_xored(const Monomial& m) const;

  /// Evaluate at a state word. Requires var_count() <= kMaxEvalWidth.
  bool eval(State s) const;

  friend bool operator==(const AnfFunction& a, const AnfFunction& b) {
    return a.var_count_ == b.var_count_ && a.monomials_ == b.monomials_;
  }

private:
  unsigned var_count_;
  std::vector<Monomial> monomials_;
  std::vector<std::uint64_t> masks_;  // per-monomial AND masks when width permits
};

/// Parse the expression grammar
///   expression := term ("^" term)*
///   term       := "0" | "1" | factor ("*" factor)*
///   factor     := "x" decimal-index
/// Whitespace is ignored around tokens; "+" and U+2295 are accepted as
/// synonyms of "^" on input. Throws ParseError on malformed text or an
/// index >= var_count.
AnfFunction parse_anf(std::string_view text, unsigned var_count);

/// Canonical rendering; "^" and "*" as separators, "0"/"1" for the constants.
std::string to_string(const AnfFunction& f);
std::string to_string(const Monomial& m);

/// One byte per state, value 0 or 1, indexed by the state word.
using TruthTableData = std::vector<std::uint8_t>;

/// Entry s equals eval(f, s). Throws std::invalid_argument when
/// var_count > cap.
TruthTableData truth_table(const AnfFunction& f, unsigned cap = kDefaultExhaustiveCap);

/// Reed-Muller (binary Moebius) transform of a truth table back to the
/// canonical ANF. The table length must be a power of two.
AnfFunction anf_from_truth_table(const TruthTableData& tt);

/// Variables the function depends on; for canonical ANF this is exactly the
/// union of monomial supports.
std::vector<std::uint32_t> dep_set(const AnfFunction& f);

/// Free variables: x_j is free when f = x_j ^ g with x_j not in dep(g), i.e.
/// the singleton monomial {j} is present and j occurs in no other monomial.
std::vector<std::uint32_t> free_vars(const AnfFunction& f);

/// Total number of variable occurrences across all monomials.
std::uint64_t anf_size(const AnfFunction& f);

/// Two-input gate count of the direct ANF realization.
struct OpCost {
  std::uint64_t xor_count = 0;  // #terms - 1, the constant 1 counting as a term
  std::uint64_t and_count = 0;  // sum over monomials of (degree - 1)
  std::uint64_t total() const { return xor_count + and_count; }

  friend bool operator==(const OpCost&, const OpCost&) = default;
};

OpCost op_cost(const AnfFunction& f);

}  // namespace invmap
