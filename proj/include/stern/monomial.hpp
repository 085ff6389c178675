#pragma once

#include <string>
#include <vector>

#include "stern/expoly.hpp"

namespace stern {

/// One term z_1^{p_1(t_1)} * ... * z_b^{p_b(t_b)} of the coefficient ring.
/// Variable z_j only ever carries powers of its own t_j.
class Monomial {
public:
  explicit Monomial(int base);  // multiplicative identity, all exponents zero
  Monomial(int base, std::vector<ExpPoly> exps);

  int base() const noexcept { return base_; }
  const ExpPoly& exp(int j) const;  // 1-based variable index
  Monomial with_exp(int j, ExpPoly e) const;
  bool is_identity() const noexcept;

  Monomial operator*(const Monomial& o) const;  // exponents add variable-wise
  Monomial frobenius(std::uint32_t d) const;    // z_j -> z_j^{t_j^d}
  Monomial without_var(int j) const;            // exponent of z_j dropped

  // Canonical inner string, e.g. "z1^(t1^2)*z3"; identity maps to "".
  std::string key() const;

  int compare(const Monomial& o) const noexcept;
  bool operator==(const Monomial& o) const noexcept {
    return base_ == o.base_ && exps_ == o.exps_;
  }
  bool operator<(const Monomial& o) const noexcept { return compare(o) < 0; }

private:
  int base_;
  std::vector<ExpPoly> exps_;  // index j-1 holds the exponent of z_j
};

}  // namespace stern
