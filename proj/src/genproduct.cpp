#include "stern/genproduct.hpp"

#include <stdexcept>

#include "stern/stern_core.hpp"

namespace stern {

ProductTruncation::ProductTruncation(int base, int levels,
                                     std::vector<SternPoly> coeffs)
    : base_(base), levels_(levels), coeffs_(std::move(coeffs)) {}

const SternPoly& ProductTruncation::coeff(std::uint64_t n) const {
  if (n > max_index())
    throw std::out_of_range("coefficient index beyond truncation range");
  return coeffs_[n];
}

ProductTruncation truncated_product(int base, int levels,
                                    std::uint64_t size_bound) {
  require(base >= 2, "base must be >= 2");
  require(levels >= 1, "levels must be >= 1");
  std::uint64_t cap = 1;  // b^K
  for (int i = 0; i < levels; ++i) {
    cap = checked_mul(cap, static_cast<std::uint64_t>(base));
    if (cap > size_bound)
      throw std::length_error("truncated_product size bound exceeded");
  }

  // Series in t with SternPoly coefficients, degrees 0..cap-1; the leading
  // factor t shifts everything up by one at the end.
  std::vector<SternPoly> series(cap, SternPoly::zero(base));
  series[0] = SternPoly::one(base);
  for (int i = 0; i < levels; ++i) {
    std::uint64_t part = 1;  // b^i
    for (int k = 0; k < i; ++k) part *= static_cast<std::uint64_t>(base);
    // Multiply by (1 + sum_j z_j^{t_j^i} t^{j*part}) in place, descending
    // degree so every read sees the previous factor's coefficients. The
    // degree cap is enforced here, keeping intermediates linear in output.
    for (std::uint64_t d = cap; d-- > 0;) {
      for (int j = 1; j <= base; ++j) {
        const std::uint64_t step = static_cast<std::uint64_t>(j) * part;
        if (step > d) break;
        if (series[d - step].is_zero()) continue;
        series[d] += SternPoly::variable_power(
                         base, j, ExpPoly::t_power(static_cast<std::uint32_t>(i))) *
                     series[d - step];
      }
    }
  }

  std::vector<SternPoly> coeffs;
  coeffs.reserve(cap + 1);
  coeffs.push_back(SternPoly::zero(base));  // t^0 coefficient of t * P
  for (std::uint64_t d = 0; d < cap; ++d) coeffs.push_back(std::move(series[d]));
  return ProductTruncation(base, levels, std::move(coeffs));
}

std::uint64_t repunit(int base, int N) {
  require(base >= 2, "base must be >= 2");
  require(N >= 0, "N must be nonnegative");
  std::uint64_t v = 0;
  for (int i = 0; i <= N; ++i)
    v = checked_add(checked_mul(v, static_cast<std::uint64_t>(base)), 1);
  return v;
}

SternPoly specialize_z1(const SternPoly& p) {
  SternPoly out(p.base());
  for (const auto& [m, c] : p.terms())
    out += SternPoly::from_monomial(m.without_var(1), c);
  return out;
}

SternPoly substitute_t(const SternPoly& p,
                       const std::vector<std::uint64_t>& t) {
  require(t.size() == static_cast<std::size_t>(p.base()),
          "substitute_t needs one value per variable");
  SternPoly out(p.base());
  for (const auto& [m, c] : p.terms()) {
    Monomial sub(p.base());
    for (int j = 1; j <= p.base(); ++j) {
      const ExpPoly& e = m.exp(j);
      if (e.is_zero()) continue;
      sub = sub.with_exp(
          j, ExpPoly::constant(e.eval(t[static_cast<std::size_t>(j - 1)])));
    }
    out += SternPoly::from_monomial(std::move(sub), c);
  }
  return out;
}

SternPoly finite_product_lhs(int base, int N, ExponentMode mode) {
  require(base >= 2, "base must be >= 2");
  require(N >= 1, "N must be >= 1");
  SternPoly prod = SternPoly::one(base);
  std::uint64_t part = 1;  // b^i
  for (int i = 0; i < N; ++i) {
    SternPoly factor = SternPoly::constant(base, 2);
    for (int j = 2; j <= base; ++j) {
      ExpPoly e = mode == ExponentMode::symbolic
                      ? ExpPoly::t_power(static_cast<std::uint32_t>(i))
                      : ExpPoly::constant(part);
      factor += SternPoly::variable_power(base, j, std::move(e));
    }
    prod = prod * factor;
    part = checked_mul(part, static_cast<std::uint64_t>(base));
  }
  return prod;
}

SternPoly finite_product_rhs(int base, int N) {
  require(base >= 2, "base must be >= 2");
  require(N >= 1, "N must be >= 1");
  const std::uint64_t l_N = repunit(base, N);
  std::uint64_t bN = 1;
  for (int i = 0; i < N; ++i) bN = checked_mul(bN, static_cast<std::uint64_t>(base));
  SternPoly sum(base);
  SternEngine engine(base);
  for (std::uint64_t n = l_N - bN + 2; n <= l_N + 1; ++n)
    sum += specialize_z1(engine.poly(n));
  return sum;
}

}  // namespace stern
