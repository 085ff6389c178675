#include "stern/extremal.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "stern/stern_core.hpp"

namespace stern {

std::uint64_t fib_u64(unsigned k) {
  std::uint64_t a = 0, b = 1;
  for (unsigned i = 0; i < k; ++i) {
    std::uint64_t next = checked_add(a, b);
    a = b;
    b = next;
  }
  return a;
}

mpz_class fib(unsigned k) {
  mpz_class f;
  mpz_fib_ui(f.get_mpz_t(), k);
  return f;
}

mpz_class a_index(unsigned k, int base) {
  require(base >= 2, "base must be >= 2");
  require(k >= 2, "a_index needs k >= 2");
  const mpz_class b(base);
  const mpz_class denom = b * b - 1;
  mpz_class v;
  if (k % 2 == 0) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), k);
    mpz_divexact(v.get_mpz_t(), mpz_class(p - 1).get_mpz_t(),
                 denom.get_mpz_t());
  } else {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), k - 1);
    mpz_divexact(v.get_mpz_t(), mpz_class(b * (p - 1)).get_mpz_t(),
                 denom.get_mpz_t());
    v += 1;
  }
  return v;
}

std::uint64_t a_index_u64(unsigned k, int base) {
  const mpz_class v = a_index(k, base);
  if (!v.fits_ulong_p()) throw OverflowError("a_k exceeds 64 bits");
  return static_cast<std::uint64_t>(v.get_ui());
}

DigitString a_digits(unsigned k, int base) {
  require(base >= 2, "base must be >= 2");
  require(k >= 2, "a_digits needs k >= 2");
  DigitString out{base, {}};
  const unsigned l = k / 2;
  for (unsigned i = 0; i + 1 < l; ++i) {
    out.digits.push_back(1);
    out.digits.push_back(0);
  }
  out.digits.push_back(1);
  if (k % 2 == 1) out.digits.push_back(1);
  return out;
}

bool a_recurrence_check(unsigned k_max, int base) {
  require(base >= 2, "base must be >= 2");
  mpz_class a = a_index(2, base);  // a_2 = 1
  for (unsigned n = 3; n <= k_max; ++n) {
    mpz_class next = base * a + 1;
    if (n % 2 == 0) next -= base;  // the (b/2)(1 + (-1)^n) correction
    if (next != a_index(n, base)) return false;
    a = next;
  }
  return true;
}

std::uint64_t default_scan_bound() {
  if (const char* env = std::getenv("STERN_SCAN_BOUND")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

MaxScanResult max_scan(unsigned k, int base, std::uint64_t scan_bound) {
  require(base >= 2, "base must be >= 2");
  require(k >= 2, "max_scan needs k >= 2");
  std::uint64_t limit = 1;  // b^{k-1}
  for (unsigned i = 0; i + 1 < k; ++i)
    limit = checked_mul(limit, static_cast<std::uint64_t>(base));
  if (limit > scan_bound)
    throw std::length_error("max_scan range exceeds the scan bound");
  const std::uint64_t lo = limit / static_cast<std::uint64_t>(base);  // b^{k-2}

  // Dense forward table of the counting sequence up to the range end.
  std::vector<std::uint64_t> s(limit, 0);
  if (limit > 1) s[1] = 1;
  const std::uint64_t b = static_cast<std::uint64_t>(base);
  for (std::uint64_t m = 2; m < limit; ++m) {
    const std::uint64_t q = (m - 1) / b;
    const std::uint64_t r = (m - 1) % b;
    s[m] = r == 0 ? checked_add(s[q], s[q + 1]) : s[q + 1];
  }

  MaxScanResult res{k, 0, lo};
  for (std::uint64_t n = lo; n < limit; ++n) {
    if (s[n] > res.max_value) {
      res.max_value = s[n];
      res.argmin_index = n;
    }
  }
  return res;
}

bool thm_rec_check(unsigned l, int base) {
  require(l >= 2, "thm_rec_check needs l >= 2");
  SternEngine engine(base);
  const SternPoly w_2lm1 = engine.poly(a_index_u64(2 * l - 1, base));
  const SternPoly w_2l = engine.poly(a_index_u64(2 * l, base));
  const SternPoly w_2lp1 = engine.poly(a_index_u64(2 * l + 1, base));
  const SternPoly w_2lp2 = engine.poly(a_index_u64(2 * l + 2, base));

  const SternPoly z_b = SternPoly::variable(base, base);
  const SternPoly z1_t1 =
      SternPoly::variable_power(base, 1, ExpPoly::t_power(1));
  const SternPoly odd_rhs = z_b * w_2l.frobenius(1) + z1_t1 * w_2lm1.frobenius(2);
  if (!(w_2lp1 == odd_rhs)) return false;

  const SternPoly zb_zbm1 =
      z_b * SternPoly::variable_power(base, base - 1, ExpPoly::t_power(1));
  const SternPoly even_rhs =
      w_2lp1.frobenius(1) + zb_zbm1 * w_2l.frobenius(2);
  return w_2lp2 == even_rhs;
}

bool multiplicity_support_check(unsigned k, int base) {
  require(k >= 2, "multiplicity_support_check needs k >= 2");
  if (base <= 3) return true;  // empty variable range
  SternEngine engine(base);
  const SternPoly& w = engine.poly(a_index_u64(k, base));
  for (const auto& [m, c] : w.terms())
    for (int i = 2; i <= base - 2; ++i)
      if (!m.exp(i).is_zero()) return false;
  return true;
}

namespace {

SternPoly vp(int base, int j, std::uint32_t power) {
  return SternPoly::variable_power(base, j, ExpPoly::t_power(power));
}

}  // namespace

CFNode cf_odd(int base, unsigned l, std::uint32_t level) {
  require(base >= 2, "base must be >= 2");
  require(l >= 1, "cf_odd needs l >= 1");
  if (l == 1) {
    return CFNode{vp(base, base, level) + vp(base, 1, level + 1),
                  SternPoly::zero(base), nullptr};
  }
  return CFNode{vp(base, base, level), vp(base, 1, level + 1),
                std::make_unique<CFNode>(cf_even(base, l - 1, level + 1))};
}

CFNode cf_even(int base, unsigned l, std::uint32_t level) {
  require(base >= 2, "base must be >= 2");
  require(l >= 1, "cf_even needs l >= 1");
  return CFNode{SternPoly::one(base),
                vp(base, base, level) * vp(base, base - 1, level + 1),
                std::make_unique<CFNode>(cf_odd(base, l, level + 1))};
}

RationalPair cf_fold(const CFNode& node) {
  if (node.terminal())
    return RationalPair(node.head, SternPoly::one(node.head.base()));
  const RationalPair tail = cf_fold(*node.tail);
  // head + numerator / (tn/td) = (head*tn + numerator*td) / tn
  return RationalPair(node.head * tail.num() + node.numerator * tail.den(),
                      tail.num());
}

mpq_class cf_fold_at_ones(const CFNode& node) {
  if (node.terminal()) return node.head.evaluate_at_ones();
  const mpq_class tail = cf_fold_at_ones(*node.tail);
  return node.head.evaluate_at_ones() +
         node.numerator.evaluate_at_ones() / tail;
}

bool cf_verify(unsigned l, int base, Parity which) {
  require(l >= 1, "cf_verify needs l >= 1");
  SternEngine engine(base);
  if (which == Parity::odd) {
    const RationalPair lhs = cf_fold(cf_odd(base, l));
    const RationalPair rhs(engine.poly(a_index_u64(2 * l + 1, base)),
                           engine.poly(a_index_u64(2 * l, base)).frobenius(1));
    return lhs.equivalent(rhs);
  }
  const RationalPair lhs = cf_fold(cf_even(base, l));
  const RationalPair rhs(
      engine.poly(a_index_u64(2 * l + 2, base)),
      engine.poly(a_index_u64(2 * l + 1, base)).frobenius(1));
  return lhs.equivalent(rhs);
}

double max_order_ratio(unsigned k, int base) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double alpha = std::log(phi) / std::log(static_cast<double>(base));
  return fib(k).get_d() / std::pow(a_index(k, base).get_d(), alpha);
}

double max_order_constant(int base) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double b = static_cast<double>(base);
  return std::pow(phi, std::log(b * b - 1.0) / std::log(b)) / std::sqrt(5.0);
}

}  // namespace stern
