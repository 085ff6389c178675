#pragma once

#include <array>
#include <cstdint>

#include <gmpxx.h>

#include "stern/digits.hpp"
#include "stern/stern_poly.hpp"

namespace stern {

/// 2x2 matrix over the polynomial ring, row-major.
struct SymMatrix2 {
  std::array<SternPoly, 4> e;

  const SternPoly& at(int r, int c) const { return e[std::size_t(2 * r + c)]; }
  SymMatrix2 operator*(const SymMatrix2& o) const;
};

/// Digit matrix A_digit(level) of the product representation:
///   A_0(d) = [[z_{b-1}^{t_{b-1}^d}, 0], [z_b^{t_b^d}, 1]]
///   A_1(d) = [[z_b^{t_b^d}, 1], [0, z_1^{t_1^d}]]
///   A_i(d) = [[0, z_{i-1}^{t_{i-1}^d}], [0, z_i^{t_i^d}]]   (2 <= i <= b-1)
SymMatrix2 sym_matrix(int digit, std::uint32_t level, int base);

/// The numeric digit matrices (entries 0/1): the symbolic ones at z = t = 1.
struct NumMatrix2 {
  std::array<unsigned, 4> e;
  unsigned at(int r, int c) const { return e[std::size_t(2 * r + c)]; }
};
NumMatrix2 num_matrix(int digit, int base);

/// (1 0) A_{i_0}(0) ... A_{i_s}(s) (0 1)^T with digits least significant
/// first in the product. Leading zeros are harmless; the empty string gives
/// zero.
SternPoly stern_via_matrix(const DigitString& d);
SternPoly stern_via_matrix(std::uint64_t n, int base);

/// Big-integer counting along the digit string: one row vector propagated
/// through the numeric digit matrices, O(digits) big-integer additions.
mpz_class stern_count_big(const DigitString& d);
mpz_class stern_count_big(const mpz_class& n, int base);

}  // namespace stern
