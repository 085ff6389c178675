#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>

#include <gmpxx.h>

#include "stern/digits.hpp"
#include "stern/stern_poly.hpp"

namespace stern {

/// Evaluates the defining recurrences with memoization. Memo entries are
/// keyed on n alone; deeper substitution levels are reached by applying
/// frobenius to a memoized value, never by re-deriving it.
///
/// An engine instance is not thread-safe; confine it to one thread or give
/// each thread its own (entries are deterministic, duplicated work is
/// benign).
class SternEngine {
public:
  explicit SternEngine(int base);
  int base() const noexcept { return base_; }

  /// w_T(n | z_1..z_b)
  const SternPoly& poly(std::uint64_t n);

  /// w_T(n) at z = 1: the number of hyper b-ary expansions of n - 1.
  /// Checked 64-bit arithmetic.
  std::uint64_t count(std::uint64_t n);

  /// Same recursion over big integers, for n far beyond 64 bits.
  mpz_class count_ref(const mpz_class& n);

private:
  int base_;
  std::unordered_map<std::uint64_t, SternPoly> poly_memo_;
  std::unordered_map<std::uint64_t, std::uint64_t> count_memo_;
  std::map<mpz_class, mpz_class> big_memo_;
};

SternPoly stern_poly(std::uint64_t n, int base);
std::uint64_t stern_count(std::uint64_t n, int base);

}  // namespace stern
