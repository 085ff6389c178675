#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stern/util.hpp"

namespace stern {

/// Univariate polynomial in a single t_j with nonnegative integer
/// coefficients, used as the exponent of one ring variable z_j.
///
/// Sparse representation: terms sorted by ascending t-power, no zero
/// coefficients stored. The zero polynomial is the empty term list.
class ExpPoly {
public:
  using Term = std::pair<std::uint32_t, std::uint64_t>;  // (t-power, coeff)

  ExpPoly() = default;
  static ExpPoly constant(std::uint64_t c);
  static ExpPoly t_power(std::uint32_t a);  // the single term t^a

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  // Multiply by t^d: every term t^a becomes t^{a+d}.
  ExpPoly shifted(std::uint32_t d) const;

  ExpPoly& operator+=(const ExpPoly& o);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) {
    a += b;
    return a;
  }

  // Value at integer t, checked 64-bit arithmetic.
  std::uint64_t eval(std::uint64_t t) const;

  // True when every stored coefficient equals 1 (so all coefficients of the
  // dense form are 0 or 1).
  bool coefficients_are_01() const noexcept;

  int compare(const ExpPoly& o) const noexcept;
  bool operator==(const ExpPoly& o) const noexcept {
    return terms_ == o.terms_;
  }
  bool operator<(const ExpPoly& o) const noexcept { return compare(o) < 0; }

  // Grammar text for variable index j, e.g. "1 + t3" or "t1 + t1^2".
  std::string text(int var_index) const;

private:
  std::vector<Term> terms_;
};

}  // namespace stern
