#include "stern/matrixrep.hpp"

namespace stern {

namespace {

SternPoly vp(int base, int j, std::uint32_t d) {
  return SternPoly::variable_power(base, j, ExpPoly::t_power(d));
}

void check_digit(int digit, int base) {
  require(base >= 2, "base must be >= 2");
  require(digit >= 0 && digit <= base - 1, "digit out of range for base");
}

}  // namespace

SymMatrix2 SymMatrix2::operator*(const SymMatrix2& o) const {
  SymMatrix2 out{{at(0, 0) * o.at(0, 0) + at(0, 1) * o.at(1, 0),
                  at(0, 0) * o.at(0, 1) + at(0, 1) * o.at(1, 1),
                  at(1, 0) * o.at(0, 0) + at(1, 1) * o.at(1, 0),
                  at(1, 0) * o.at(0, 1) + at(1, 1) * o.at(1, 1)}};
  return out;
}

SymMatrix2 sym_matrix(int digit, std::uint32_t level, int base) {
  check_digit(digit, base);
  const SternPoly zero = SternPoly::zero(base);
  const SternPoly one = SternPoly::one(base);
  if (digit == 0)
    return {{vp(base, base - 1, level), zero, vp(base, base, level), one}};
  if (digit == 1)
    return {{vp(base, base, level), one, zero, vp(base, 1, level)}};
  return {{zero, vp(base, digit - 1, level), zero, vp(base, digit, level)}};
}

NumMatrix2 num_matrix(int digit, int base) {
  check_digit(digit, base);
  if (digit == 0) return {{1, 0, 1, 1}};
  if (digit == 1) return {{1, 1, 0, 1}};
  return {{0, 1, 0, 1}};
}

SternPoly stern_via_matrix(const DigitString& d) {
  require(d.base >= 2, "base must be >= 2");
  // Row (1 0) propagated left to right; the result is the dot product with
  // (0 1)^T, i.e. the second row entry.
  SternPoly r0 = SternPoly::one(d.base);
  SternPoly r1 = SternPoly::zero(d.base);
  std::uint32_t level = 0;
  for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it, ++level) {
    const SymMatrix2 a = sym_matrix(*it, level, d.base);
    SternPoly n0 = r0 * a.at(0, 0) + r1 * a.at(1, 0);
    SternPoly n1 = r0 * a.at(0, 1) + r1 * a.at(1, 1);
    r0 = std::move(n0);
    r1 = std::move(n1);
  }
  return r1;
}

SternPoly stern_via_matrix(std::uint64_t n, int base) {
  return stern_via_matrix(to_digits(n, base));
}

mpz_class stern_count_big(const DigitString& d) {
  require(d.base >= 2, "base must be >= 2");
  mpz_class r0 = 1, r1 = 0;
  for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it) {
    const int digit = *it;
    require(digit >= 0 && digit < d.base, "digit out of range");
    if (digit == 0) {
      r0 += r1;  // A_0: (r0 + r1, r1)
    } else if (digit == 1) {
      r1 += r0;  // A_1: (r0, r0 + r1)
    } else {
      r1 += r0;  // A_i: (0, r0 + r1)
      r0 = 0;
    }
  }
  return r1;
}

mpz_class stern_count_big(const mpz_class& n, int base) {
  return stern_count_big(to_digits(n, base));
}

}  // namespace stern
