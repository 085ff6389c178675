#include "stern/oracle.hpp"

#include <algorithm>

namespace stern {

std::uint64_t Expansion::value() const {
  std::uint64_t v = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    v = checked_add(v, checked_mul(power, static_cast<std::uint64_t>(mults[i])));
    if (i + 1 < mults.size())
      power = checked_mul(power, static_cast<std::uint64_t>(base));
  }
  return v;
}

namespace {

// Parts strictly below b^i sum to at most b * (b^i - 1) / (b - 1).
std::uint64_t max_below(std::uint64_t power_i, int base) {
  return static_cast<std::uint64_t>(base) * (power_i - 1) /
         static_cast<std::uint64_t>(base - 1);
}

void descend(std::uint64_t remaining, int i, std::uint64_t power_i, int base,
             std::vector<int>& mults, std::vector<Expansion>& out) {
  if (i < 0) {
    if (remaining == 0) {
      Expansion h{base, mults};
      while (!h.mults.empty() && h.mults.back() == 0) h.mults.pop_back();
      out.push_back(std::move(h));
    }
    return;
  }
  const std::uint64_t cap =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(base),
                              remaining / power_i);
  // Highest multiplicity first gives the descending lexicographic order.
  for (std::uint64_t m = cap + 1; m-- > 0;) {
    const std::uint64_t rest = remaining - m * power_i;
    if (rest > max_below(power_i, base)) break;  // smaller m only leaves more
    mults[static_cast<std::size_t>(i)] = static_cast<int>(m);
    descend(rest, i - 1, power_i / static_cast<std::uint64_t>(base), base,
            mults, out);
  }
  mults[static_cast<std::size_t>(i)] = 0;
}

}  // namespace

std::vector<Expansion> enumerate_expansions(std::uint64_t n, int base) {
  require(base >= 2, "base must be >= 2");
  if (n == 0) return {Expansion{base, {}}};
  int top = 0;
  std::uint64_t power = 1;
  while (power <= n / static_cast<std::uint64_t>(base)) {
    power *= static_cast<std::uint64_t>(base);
    ++top;
  }
  std::vector<int> mults(static_cast<std::size_t>(top) + 1, 0);
  std::vector<Expansion> out;
  descend(n, top, power, base, mults, out);
  return out;
}

Monomial expansion_to_monomial(const Expansion& h) {
  Monomial m(h.base);
  for (std::size_t i = 0; i < h.mults.size(); ++i) {
    const int j = h.mults[i];
    if (j == 0) continue;
    require(j <= h.base, "multiplicity exceeds base");
    m = m.with_exp(j, m.exp(j) + ExpPoly::t_power(static_cast<std::uint32_t>(i)));
  }
  return m;
}

SternPoly oracle_poly(std::uint64_t n, int base) {
  require(base >= 2, "base must be >= 2");
  SternPoly p(base);
  if (n == 0) return p;
  for (const Expansion& h : enumerate_expansions(n - 1, base))
    p += SternPoly::from_monomial(expansion_to_monomial(h));
  return p;
}

}  // namespace stern
