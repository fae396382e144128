// SPDX-License-Identifier: Apache-2.0
#include "invmap/anf.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace invmap {

Monomial::Monomial(std::vector<std::uint32_t> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool Monomial::contains(std::uint32_t var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

std::uint64_t Monomial::mask() const {
  std::uint64_t m = 0;
  for (auto v : vars_) m |= std::uint64_t{1} << v;
  return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.vars_.size() != b.vars_.size()) return a.vars_.size() < b.vars_.size();
  return a.vars_ < b.vars_;
}

AnfFunction::AnfFunction(unsigned var_count, std::vector<Monomial> monomials)
    : var_count_(var_count), monomials_(std::move(monomials)) {
  for (const auto& m : monomials_) {
    if (!m.vars().empty() && m.vars().back() >= var_count_)
      throw std::invalid_argument("monomial variable index " +
                                  std::to_string(m.vars().back()) +
                                  " out of range for width " + std::to_string(var_count_));
  }
  std::sort(monomials_.begin(), monomials_.end());
  // GF(2): equal monomials cancel in pairs.
  std::vector<Monomial> reduced;
  for (std::size_t i = 0; i < monomials_.size();) {
    std::size_t j = i;
    while (j < monomials_.size() && monomials_[j] == monomials_[i]) ++j;
    if ((j - i) % 2 == 1) reduced.push_back(std::move(monomials_[i]));
    i = j;
  }
  monomials_ = std::move(reduced);
  if (var_count_ <= kMaxEvalWidth) {
    masks_.reserve(monomials_.size());
    for (const auto& m : monomials_) masks_.push_back(m.mask());
  }
}

AnfFunction AnfFunction::one(unsigned var_count) {
  return AnfFunction(var_count, {Monomial{}});
}

AnfFunction AnfFunction::var(unsigned var_count, std::uint32_t index) {
  return AnfFunction(var_count, {Monomial({index})});
}

bool AnfFunction::contains(const Monomial& m) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), m,
                            [](const Monomial& a, const Monomial& b) { return a < b; });
}

AnfFunction AnfFunction::with_xored(const Monomial& m) const {
  auto ms = monomials_;
  ms.push_back(m);
  return AnfFunction(var_count_, std::move(ms));
}

bool AnfFunction::eval(State s) const {
  if (var_count_ > kMaxEvalWidth)
    throw std::invalid_argument("eval requires width <= " + std::to_string(kMaxEvalWidth));
  bool acc = false;
  for (auto mask : masks_) acc ^= (s & mask) == mask;  // empty mask: constant 1
  return acc;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return text[pos]; }

  // The XOR separator: '^', '+', or UTF-8 U+2295.
  bool eat_xor() {
    skip_ws();
    if (pos < text.size() && (text[pos] == '^' || text[pos] == '+')) {
      ++pos;
      return true;
    }
    if (pos + 2 < text.size() && static_cast<unsigned char>(text[pos]) == 0xE2 &&
        static_cast<unsigned char>(text[pos + 1]) == 0x8A &&
        static_cast<unsigned char>(text[pos + 2]) == 0x95) {
      pos += 3;
      return true;
    }
    return false;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

std::uint32_t parse_index(Cursor& cur, unsigned var_count) {
  std::size_t start = cur.pos;
  if (cur.pos >= cur.text.size() || !std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
    throw ParseError("expected variable index after 'x'", cur.pos);
  std::uint64_t value = 0;
  while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
    value = value * 10 + static_cast<std::uint64_t>(cur.text[cur.pos] - '0');
    if (value > std::numeric_limits<std::uint32_t>::max())
      throw ParseError("variable index too large", start);
    ++cur.pos;
  }
  if (value >= var_count)
    throw ParseError("variable index " + std::to_string(value) + " out of range for width " +
                         std::to_string(var_count),
                     start);
  return static_cast<std::uint32_t>(value);
}

std::uint32_t parse_factor(Cursor& cur, unsigned var_count) {
  cur.skip_ws();
  if (cur.pos >= cur.text.size() || cur.text[cur.pos] != 'x')
    throw ParseError("expected factor 'x<index>'", cur.pos);
  ++cur.pos;
  return parse_index(cur, var_count);
}

// term := "0" | "1" | factor ("*" factor)*
// Returns false for the "0" term, which contributes nothing.
bool parse_term(Cursor& cur, unsigned var_count, Monomial& out) {
  cur.skip_ws();
  if (cur.pos >= cur.text.size()) throw ParseError("expected term", cur.pos);
  char c = cur.peek();
  if (c == '0') {
    ++cur.pos;
    return false;
  }
  if (c == '1') {
    ++cur.pos;
    out = Monomial{};
    return true;
  }
  std::vector<std::uint32_t> vars;
  vars.push_back(parse_factor(cur, var_count));
  while (cur.eat('*')) vars.push_back(parse_factor(cur, var_count));
  out = Monomial(std::move(vars));
  return true;
}

}  // namespace

AnfFunction parse_anf(std::string_view text, unsigned var_count) {
  Cursor cur{text};
  std::vector<Monomial> monomials;
  Monomial m;
  if (parse_term(cur, var_count, m)) monomials.push_back(std::move(m));
  while (cur.eat_xor()) {
    if (parse_term(cur, var_count, m)) monomials.push_back(std::move(m));
  }
  if (!cur.done())
    throw ParseError(std::string("unexpected character '") + cur.peek() + "'", cur.pos);
  return AnfFunction(var_count, std::move(monomials));
}

std::string to_string(const Monomial& m) {
  if (m.is_constant_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.vars().size(); ++i) {
    if (i) out += '*';
    out += 'x';
    out += std::to_string(m.vars()[i]);
  }
  return out;
}

std::string to_string(const AnfFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.monomials().size(); ++i) {
    if (i) out += " ^ ";
    out += to_string(f.monomials()[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Truth tables

namespace {

// In-place binary Moebius / Reed-Muller transform; self-inverse over GF(2).
void xor_transform(TruthTableData& a) {
  const std::size_t size = a.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1)
    for (std::size_t s = 0; s < size; ++s)
      if (s & bit) a[s] ^= a[s ^ bit];
}

}  // namespace

TruthTableData truth_table(const AnfFunction& f, unsigned cap) {
  const unsigned n = f.var_count();
  if (n > cap)
    throw std::invalid_argument("truth table of width " + std::to_string(n) +
                                " exceeds exhaustive cap " + std::to_string(cap));
  TruthTableData coeffs(std::size_t{1} << n, 0);
  for (const auto& m : f.monomials()) coeffs[m.mask()] ^= 1;
  xor_transform(coeffs);
  return coeffs;
}

AnfFunction anf_from_truth_table(const TruthTableData& tt) {
  if (tt.empty() || !std::has_single_bit(tt.size()))
    throw std::invalid_argument("truth table length must be a power of two");
  const unsigned n = static_cast<unsigned>(std::countr_zero(tt.size()));
  TruthTableData coeffs(tt.size());
  for (std::size_t s = 0; s < tt.size(); ++s) coeffs[s] = tt[s] ? 1 : 0;
  xor_transform(coeffs);
  std::vector<Monomial> monomials;
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    if (!coeffs[s]) continue;
    std::vector<std::uint32_t> vars;
    for (unsigned j = 0; j < n; ++j)
      if (s >> j & 1) vars.push_back(j);
    monomials.emplace_back(std::move(vars));
  }
  return AnfFunction(n, std::move(monomials));
}

std::vector<std::uint32_t> dep_set(const AnfFunction& f) {
  std::vector<std::uint32_t> deps;
  for (const auto& m : f.monomials())
    deps.insert(deps.end(), m.vars().begin(), m.vars().end());
  std::sort(deps.begin(), deps.end());
  deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
  return deps;
}

std::vector<std::uint32_t> free_vars(const AnfFunction& f) {
  std::vector<std::uint32_t> singletons;
  for (const auto& m : f.monomials())
    if (m.degree() == 1) singletons.push_back(m.vars()[0]);
  std::vector<std::uint32_t> result;
  for (auto j : singletons) {
    bool elsewhere = false;
    for (const auto& m : f.monomials()) {
      if (m.degree() != 1 && m.contains(j)) {
        elsewhere = true;
        break;
      }
    }
    if (!elsewhere) result.push_back(j);
  }
  return result;  // singletons were collected in sorted monomial order
}

std::uint64_t anf_size(const AnfFunction& f) {
  std::uint64_t total = 0;
  for (const auto& m : f.monomials()) total += m.degree();
  return total;
}

OpCost op_cost(const AnfFunction& f) {
  OpCost cost;
  const auto terms = f.monomials().size();
  cost.xor_count = terms == 0 ? 0 : terms - 1;
  for (const auto& m : f.monomials())
    cost.and_count += m.degree() == 0 ? 0 : m.degree() - 1;
  return cost;
}

}  // namespace invmap
