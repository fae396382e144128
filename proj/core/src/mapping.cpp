// SPDX-License-Identifier: Apache-2.0
#include "invmap/mapping.hpp"

#include <algorithm>
#include <cctype>

namespace invmap {

VectorialMapping::VectorialMapping(unsigned n, std::vector<AnfFunction> outputs)
    : n_(n), outputs_(std::move(outputs)) {
  if (outputs_.size() != n_)
    throw std::invalid_argument("expected " + std::to_string(n_) + " outputs, got " +
                                std::to_string(outputs_.size()));
  for (const auto& f : outputs_) {
    if (f.var_count() != n_)
      throw std::invalid_argument("output width " + std::to_string(f.var_count()) +
                                  " does not match mapping width " + std::to_string(n_));
  }
}

VectorialMapping VectorialMapping::shift(unsigned n) {
  std::vector<AnfFunction> outs;
  outs.reserve(n);
  for (unsigned i = 0; i < n; ++i) outs.push_back(AnfFunction::var(n, (i + 1) % n));
  return VectorialMapping(n, std::move(outs));
}

VectorialMapping VectorialMapping::identity(unsigned n) {
  std::vector<AnfFunction> outs;
  outs.reserve(n);
  for (unsigned i = 0; i < n; ++i) outs.push_back(AnfFunction::var(n, i));
  return VectorialMapping(n, std::move(outs));
}

VectorialMapping VectorialMapping::with_output(unsigned i, AnfFunction f) const {
  auto outs = outputs_;
  outs.at(i) = std::move(f);
  return VectorialMapping(n_, std::move(outs));
}

State apply(const VectorialMapping& m, State s) {
  State y = 0;
  for (unsigned i = 0; i < m.width(); ++i)
    y |= static_cast<State>(m.output(i).eval(s)) << i;
  return y;
}

VariableRelabeling::VariableRelabeling(std::vector<std::uint32_t> image)
    : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || seen[v])
      throw std::invalid_argument("image list is not a permutation");
    seen[v] = true;
  }
}

VariableRelabeling VariableRelabeling::identity(unsigned n) {
  std::vector<std::uint32_t> image(n);
  for (unsigned i = 0; i < n; ++i) image[i] = i;
  return VariableRelabeling(std::move(image));
}

VariableRelabeling VariableRelabeling::inverse() const {
  std::vector<std::uint32_t> inv(image_.size());
  for (std::uint32_t j = 0; j < image_.size(); ++j) inv[image_[j]] = j;
  return VariableRelabeling(std::move(inv));
}

State permute_bits(State s, const VariableRelabeling& r) {
  State out = 0;
  for (std::uint32_t j = 0; j < r.size(); ++j)
    out |= (s >> j & 1) << r.image(j);
  return out;
}

namespace {

AnfFunction rename_vars(const AnfFunction& f, const VariableRelabeling& r) {
  std::vector<Monomial> monomials;
  monomials.reserve(f.monomials().size());
  for (const auto& m : f.monomials()) {
    std::vector<std::uint32_t> vars;
    vars.reserve(m.degree());
    for (auto v : m.vars()) vars.push_back(r.image(v));
    monomials.emplace_back(std::move(vars));
  }
  return AnfFunction(f.var_count(), std::move(monomials));
}

void check_relabeling_width(const VectorialMapping& m, const VariableRelabeling& r) {
  if (r.size() != m.width())
    throw std::invalid_argument("relabeling size " + std::to_string(r.size()) +
                                " does not match mapping width " + std::to_string(m.width()));
}

}  // namespace

VectorialMapping relabel(const VectorialMapping& m, const VariableRelabeling& r) {
  check_relabeling_width(m, r);
  std::vector<AnfFunction> outs;
  outs.reserve(m.width());
  for (const auto& f : m.outputs()) outs.push_back(rename_vars(f, r));
  return VectorialMapping(m.width(), std::move(outs));
}

VectorialMapping conjugate(const VectorialMapping& m, const VariableRelabeling& r) {
  check_relabeling_width(m, r);
  const auto rinv = r.inverse();
  std::vector<AnfFunction> outs;
  outs.reserve(m.width());
  for (unsigned i = 0; i < m.width(); ++i)
    outs.push_back(rename_vars(m.output(rinv.image(i)), r));
  return VectorialMapping(m.width(), std::move(outs));
}

bool is_t_function(const VectorialMapping& m) {
  for (unsigned i = 0; i < m.width(); ++i) {
    const auto deps = dep_set(m.output(i));
    if (!deps.empty() && deps.back() > i) return false;
  }
  return true;
}

bool t_function_invertible(const VectorialMapping& m) {
  if (!is_t_function(m)) throw std::invalid_argument("mapping is not a T-function");
  for (unsigned i = 0; i < m.width(); ++i) {
    const auto free = free_vars(m.output(i));
    if (!std::binary_search(free.begin(), free.end(), i)) return false;
  }
  return true;
}

VectorialMapping nlfsr_to_mapping(const AnfFunction& feedback, unsigned n) {
  if (feedback.var_count() != n)
    throw std::invalid_argument("feedback width " + std::to_string(feedback.var_count()) +
                                " does not match register width " + std::to_string(n));
  std::vector<AnfFunction> outs;
  outs.reserve(n);
  for (unsigned i = 0; i + 1 < n; ++i) outs.push_back(AnfFunction::var(n, i + 1));
  outs.push_back(feedback);
  return VectorialMapping(n, std::move(outs));
}

bool nlfsr_feedback_invertible(const AnfFunction& feedback) {
  const auto free = free_vars(feedback);
  return std::binary_search(free.begin(), free.end(), 0u);
}

// ---------------------------------------------------------------------------
// File format

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses a full decimal token; returns false on anything else.
bool parse_decimal(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
    if (out > std::numeric_limits<std::uint32_t>::max()) return false;
  }
  return true;
}

}  // namespace

VectorialMapping mapping_from_text(std::string_view text) {
  std::size_t line_no = 0;
  bool have_width = false;
  unsigned n = 0;
  std::vector<AnfFunction> outputs;
  std::vector<bool> given;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view line = strip(raw);
    if (line.empty() || line.front() == '#') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected '<name> = <value>'", 0, line_no);
    std::string_view lhs = strip(line.substr(0, eq));
    std::string_view rhs = strip(line.substr(eq + 1));

    if (!have_width) {
      std::uint64_t value = 0;
      if (lhs != "n" || !parse_decimal(rhs, value) || value == 0)
        throw ParseError("first line must be 'n = <positive decimal>'", 0, line_no);
      n = static_cast<unsigned>(value);
      have_width = true;
      outputs.assign(n, AnfFunction::zero(n));
      given.assign(n, false);
      continue;
    }

    if (lhs.size() < 2 || lhs.front() != 'f')
      throw ParseError("expected output line 'f<i> = <expression>'", 0, line_no);
    std::uint64_t index = 0;
    if (!parse_decimal(lhs.substr(1), index) || index >= n)
      throw ParseError("output index out of range in '" + std::string(lhs) + "'", 0, line_no);
    if (given[index])
      throw ParseError("duplicate definition of f" + std::to_string(index), 0, line_no);
    try {
      outputs[index] = parse_anf(rhs, n);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), e.position, line_no);
    }
    given[index] = true;
  }

  if (!have_width) throw ParseError("missing 'n = <decimal>' line", 0, line_no);
  for (unsigned i = 0; i < n; ++i)
    if (!given[i]) outputs[i] = AnfFunction::var(n, (i + 1) % n);
  return VectorialMapping(n, std::move(outputs));
}

std::string mapping_to_text(const VectorialMapping& m) {
  std::string out = "n = " + std::to_string(m.width()) + "\n";
  for (unsigned i = 0; i < m.width(); ++i)
    out += "f" + std::to_string(i) + " = " + to_string(m.output(i)) + "\n";
  return out;
}

}  // namespace invmap
