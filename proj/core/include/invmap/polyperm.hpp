// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "invmap/mapping.hpp"

namespace invmap {

/// A univariate polynomial a_0 + a_1 x + ... + a_d x^d with arithmetic
/// modulo 2^n (1 <= n <= 64). Coefficients are reduced on construction.
class IntPolynomial {
public:
  IntPolynomial(std::vector<std::uint64_t> coeffs, unsigned modulus_exponent);

  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  unsigned modulus_exponent() const { return n_; }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::uint64_t modulus_mask() const;

private:
  std::vector<std::uint64_t> coeffs_;
  unsigned n_;
};

/// Horner evaluation modulo 2^n.
std::uint64_t eval_poly(const IntPolynomial& p, std::uint64_t x);

/// Rivest's characterization of permutation polynomials modulo 2^n, n > 2:
/// a_1 odd, a_2 + a_4 + ... even, a_3 + a_5 + ... even.
/// Throws std::invalid_argument for n <= 2 (outside the criterion's stated
/// domain; use the brute-force oracle there).
bool is_rivest_permutation(const IntPolynomial& p);

/// The bitwise view of x -> p(x): one ANF per output bit, recovered from
/// per-bit truth tables. The result is always a T-function.
/// Throws std::invalid_argument when the width exceeds cap.
VectorialMapping poly_to_mapping(const IntPolynomial& p,
                                 unsigned cap = kDefaultExhaustiveCap);

}  // namespace invmap
