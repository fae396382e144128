// SPDX-License-Identifier: Apache-2.0
#include "invmap/polyperm.hpp"

namespace invmap {

IntPolynomial::IntPolynomial(std::vector<std::uint64_t> coeffs, unsigned modulus_exponent)
    : coeffs_(std::move(coeffs)), n_(modulus_exponent) {
  if (n_ == 0 || n_ > 64)
    throw std::invalid_argument("modulus exponent must be in 1..64");
  if (coeffs_.empty()) coeffs_.push_back(0);
  const auto mask = modulus_mask();
  for (auto& c : coeffs_) c &= mask;
}

std::uint64_t IntPolynomial::modulus_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::uint64_t eval_poly(const IntPolynomial& p, std::uint64_t x) {
  const auto mask = p.modulus_mask();
  x &= mask;
  std::uint64_t acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = (acc * x + *it) & mask;  // wraps mod 2^64, then reduced mod 2^n
  return acc;
}

bool is_rivest_permutation(const IntPolynomial& p) {
  if (p.modulus_exponent() <= 2)
    throw std::invalid_argument(
        "the Rivest criterion is stated for moduli 2^n with n > 2");
  const auto& a = p.coeffs();
  const bool a1_odd = a.size() > 1 && (a[1] & 1);
  bool even_sum = false, odd_sum = false;  // parities of a2+a4+... and a3+a5+...
  for (std::size_t i = 2; i < a.size(); ++i) {
    if (i % 2 == 0)
      even_sum ^= a[i] & 1;
    else
      odd_sum ^= a[i] & 1;
  }
  return a1_odd && !even_sum && !odd_sum;
}

VectorialMapping poly_to_mapping(const IntPolynomial& p, unsigned cap) {
  const unsigned n = p.modulus_exponent();
  if (n > cap)
    throw std::invalid_argument("width " + std::to_string(n) + " exceeds exhaustive cap " +
                                std::to_string(cap));
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint64_t> values(size);
  for (std::size_t x = 0; x < size; ++x) values[x] = eval_poly(p, x);
  std::vector<AnfFunction> outs;
  outs.reserve(n);
  TruthTableData tt(size);
  for (unsigned i = 0; i < n; ++i) {
    for (std::size_t x = 0; x < size; ++x) tt[x] = static_cast<std::uint8_t>(values[x] >> i & 1);
    outs.push_back(anf_from_truth_table(tt));
  }
  return VectorialMapping(n, std::move(outs));
}

}  // namespace invmap
