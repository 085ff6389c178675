#pragma once

#include <cstdint>
#include <vector>

#include "stern/stern_poly.hpp"

namespace stern {

enum class ExponentMode { symbolic, numeric };

/// Truncated expansion of the generating product
///   t * prod_{i=0}^{K-1} (1 + sum_{j=1}^{b} z_j^{t_j^i} t^{j*b^i})
/// as a series in t. coeff(n) is exact (equals w_T(n)) for 1 <= n <= b^K,
/// because every expansion of n - 1 < b^K only uses parts up to b^{K-1}.
class ProductTruncation {
public:
  ProductTruncation(int base, int levels, std::vector<SternPoly> coeffs);

  int base() const noexcept { return base_; }
  int levels() const noexcept { return levels_; }
  std::uint64_t max_index() const noexcept { return coeffs_.size() - 1; }

  /// Coefficient of t^n, 0 <= n <= base^levels (n = 0 gives zero).
  const SternPoly& coeff(std::uint64_t n) const;

private:
  int base_;
  int levels_;
  std::vector<SternPoly> coeffs_;  // index n, entry 0 is the zero polynomial
};

ProductTruncation truncated_product(int base, int levels,
                                    std::uint64_t size_bound = 1u << 20);

/// l_N = (b^{N+1} - 1) / (b - 1), the largest index generated by the first
/// N + 1 product factors.
std::uint64_t repunit(int base, int N);

/// Partial evaluation at z_1 = 1: drops the z_1 exponent of every monomial
/// and merges equal survivors.
SternPoly specialize_z1(const SternPoly& p);

/// Replaces every exponent polynomial p(t_j) by the constant p(t_j = t[j-1]).
SternPoly substitute_t(const SternPoly& p,
                       const std::vector<std::uint64_t>& t);

/// prod_{i=0}^{N-1} (2 + sum_{j=2}^{b} z_j^{e_i}) where e_i is t_j^i in
/// symbolic mode and the constant b^i in numeric mode.
SternPoly finite_product_lhs(int base, int N, ExponentMode mode);

/// sum of w_T(n | 1, z_2, ..., z_b) for n in [l_N - b^N + 2, l_N + 1].
SternPoly finite_product_rhs(int base, int N);

}  // namespace stern
