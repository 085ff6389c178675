#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "stern/monomial.hpp"

namespace stern {

/// Element of the coefficient ring: a finite sum of Monomials with positive
/// 64-bit coefficients. Coefficient overflow raises OverflowError.
///
/// Values are immutable once built (all operations return new values), so
/// they are safe to move between threads.
class SternPoly {
public:
  explicit SternPoly(int base);  // the zero polynomial
  static SternPoly zero(int base) { return SternPoly(base); }
  static SternPoly one(int base);
  static SternPoly constant(int base, std::uint64_t c);
  static SternPoly from_monomial(Monomial m, std::uint64_t coeff = 1);
  static SternPoly variable(int base, int j);                    // z_j
  static SternPoly variable_power(int base, int j, ExpPoly p);   // z_j^{p}

  int base() const noexcept { return base_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<Monomial, std::uint64_t>& terms() const noexcept {
    return terms_;
  }

  SternPoly& operator+=(const SternPoly& o);
  friend SternPoly operator+(SternPoly a, const SternPoly& b) {
    a += b;
    return a;
  }
  SternPoly operator*(const SternPoly& o) const;
  SternPoly& operator*=(const SternPoly& o) { return *this = *this * o; }
  bool operator==(const SternPoly& o) const noexcept {
    return base_ == o.base_ && terms_ == o.terms_;
  }

  // Applies z_j -> z_j^{t_j^d} to every monomial.
  SternPoly frobenius(std::uint32_t d) const;

  // Exact evaluation: z holds b rationals, t holds b nonnegative integers.
  // Exponent polynomials are evaluated first, in checked 64-bit arithmetic.
  mpq_class evaluate(const std::vector<mpq_class>& z,
                     const std::vector<std::uint64_t>& t) const;
  mpq_class evaluate_at_ones() const;
  mpz_class coefficient_sum() const;

  bool coefficients_all_one() const;
  bool exponent_coefficients_01() const;

  // Canonical serialization; terms ordered by their canonical key string.
  std::string text() const;
  static SternPoly parse(std::string_view s, int base);

private:
  void add_term(Monomial m, std::uint64_t c);

  int base_;
  std::map<Monomial, std::uint64_t> terms_;
};

/// Ratio of two ring elements; the denominator is never zero. Fractions are
/// never reduced (no GCD exists here); equality is by cross-multiplication,
/// valid because the ring is an integral domain.
class RationalPair {
public:
  RationalPair(SternPoly num, SternPoly den);
  const SternPoly& num() const noexcept { return num_; }
  const SternPoly& den() const noexcept { return den_; }
  bool equivalent(const RationalPair& o) const;

private:
  SternPoly num_, den_;
};

}  // namespace stern
