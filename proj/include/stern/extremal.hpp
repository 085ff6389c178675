#pragma once

#include <cstdint>
#include <memory>

#include <gmpxx.h>

#include "stern/digits.hpp"
#include "stern/stern_poly.hpp"

namespace stern {

std::uint64_t fib_u64(unsigned k);  // checked
mpz_class fib(unsigned k);

/// Smallest n in [b^{k-2}, b^{k-1}) where the counting sequence attains its
/// maximum F_k. Exact closed form, k >= 2:
///   even k:  (b^k - 1) / (b^2 - 1)
///   odd  k:  1 + b (b^{k-1} - 1) / (b^2 - 1)
mpz_class a_index(unsigned k, int base);
std::uint64_t a_index_u64(unsigned k, int base);

/// The digit patterns (10...01)_b for even k and (10...011)_b for odd k.
DigitString a_digits(unsigned k, int base);

/// Checks a_n = b*a_{n-1} + 1 - (b/2)(1 + (-1)^n) against the closed form
/// for 3 <= n <= k_max.
bool a_recurrence_check(unsigned k_max, int base);

struct MaxScanResult {
  unsigned k = 0;
  std::uint64_t max_value = 0;
  std::uint64_t argmin_index = 0;  // smallest attaining index
};

std::uint64_t default_scan_bound();  // STERN_SCAN_BOUND env var, or 10^6
MaxScanResult max_scan(unsigned k, int base,
                       std::uint64_t scan_bound = default_scan_bound());

/// Both recurrences at maximal indices, checked by exact polynomial
/// equality:
///   w_T(a_{2l+1}) = z_b F(w_T(a_{2l}), 1) + z_1^{t_1} F(w_T(a_{2l-1}), 2)
///   w_T(a_{2l+2}) = F(w_T(a_{2l+1}), 1) + z_b z_{b-1}^{t_{b-1}} F(w_T(a_{2l}), 2)
bool thm_rec_check(unsigned l, int base);  // l >= 2

/// True when no monomial of w_T(a_k) uses any variable z_i, 2 <= i <= b-2
/// (so those variables can be set to 0 without changing the value).
bool multiplicity_support_check(unsigned k, int base);

/// Finite continued fraction over the ring: a terminal value, or
/// head + numerator / tail.
struct CFNode {
  SternPoly head;
  SternPoly numerator;  // ignored when terminal
  std::unique_ptr<CFNode> tail;

  bool terminal() const noexcept { return tail == nullptr; }
};

enum class Parity { odd, even };

/// Convergents of the two continued-fraction families, built by the
/// head-plus-fraction recursion with frobenius shifts applied per level:
///   cf_odd(1, d)  = z_b^{t_b^d} + z_1^{t_1^{d+1}}                (terminal)
///   cf_odd(l, d)  = z_b^{t_b^d} + z_1^{t_1^{d+1}} / cf_even(l-1, d+1)
///   cf_even(l, d) = 1 + z_b^{t_b^d} z_{b-1}^{t_{b-1}^{d+1}} / cf_odd(l, d+1)
CFNode cf_odd(int base, unsigned l, std::uint32_t level = 0);   // l >= 1
CFNode cf_even(int base, unsigned l, std::uint32_t level = 0);  // l >= 1

RationalPair cf_fold(const CFNode& node);
mpq_class cf_fold_at_ones(const CFNode& node);

/// Cross-multiplied equality of the folded convergent with the engine
/// ratio: odd  -> w_T(a_{2l+1}) / F(w_T(a_{2l}), 1)
///        even -> w_T(a_{2l+2}) / F(w_T(a_{2l+1}), 1)
bool cf_verify(unsigned l, int base, Parity which);

/// F_k / a_k^{log_b phi}, converging to phi^{log_b(b^2-1)} / sqrt(5).
double max_order_ratio(unsigned k, int base);
double max_order_constant(int base);

}  // namespace stern
