#pragma once

#include <cstdint>
#include <vector>

#include "stern/stern_poly.hpp"

namespace stern {

/// One hyper b-ary expansion of an integer: mults[i] is how many copies of
/// the part b^i are used (0..b), trailing zeros trimmed.
struct Expansion {
  int base = 2;
  std::vector<int> mults;

  std::uint64_t value() const;  // sum of mults[i] * b^i
  bool operator==(const Expansion&) const = default;
};

/// All hyper b-ary expansions of n by exhaustive descent from the largest
/// part, in descending lexicographic order of (m_k, ..., m_0) read from the
/// highest power down. enumerate_expansions(0) is the singleton empty
/// expansion.
std::vector<Expansion> enumerate_expansions(std::uint64_t n, int base);

/// A part b^i used j >= 1 times contributes t_j^i to the exponent of z_j.
Monomial expansion_to_monomial(const Expansion& h);

/// Ground truth for w_T(n): the sum of monomials over the expansions of
/// n - 1; zero for n = 0.
SternPoly oracle_poly(std::uint64_t n, int base);

}  // namespace stern
