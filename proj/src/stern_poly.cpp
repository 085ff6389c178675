#include "stern/stern_poly.hpp"

#include <algorithm>

namespace stern {

namespace {

// q^e for a rational q and 64-bit e. Guards against exponents that would
// allocate astronomically many bits.
mpq_class rational_pow(const mpq_class& q, std::uint64_t e) {
  if (e == 0) return 1;
  if (q == 1) return 1;
  if (q == 0) return 0;
  if (q == -1) return (e & 1) ? -1 : 1;
  constexpr std::uint64_t kMaxExponent = 1u << 20;
  if (e > kMaxExponent)
    throw OverflowError("exponent too large for exact evaluation");
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

}  // namespace

SternPoly::SternPoly(int base) : base_(base) {
  require(base >= 2, "base must be >= 2");
}

SternPoly SternPoly::one(int base) { return constant(base, 1); }

SternPoly SternPoly::constant(int base, std::uint64_t c) {
  SternPoly p(base);
  if (c != 0) p.terms_.emplace(Monomial(base), c);
  return p;
}

SternPoly SternPoly::from_monomial(Monomial m, std::uint64_t coeff) {
  SternPoly p(m.base());
  if (coeff != 0) p.terms_.emplace(std::move(m), coeff);
  return p;
}

SternPoly SternPoly::variable(int base, int j) {
  return variable_power(base, j, ExpPoly::constant(1));
}

SternPoly SternPoly::variable_power(int base, int j, ExpPoly p) {
  return from_monomial(Monomial(base).with_exp(j, std::move(p)));
}

void SternPoly::add_term(Monomial m, std::uint64_t c) {
  if (c == 0) return;
  require(m.base() == base_, "base mismatch");
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) it->second = checked_add(it->second, c);
}

SternPoly& SternPoly::operator+=(const SternPoly& o) {
  require(base_ == o.base_, "base mismatch in polynomial sum");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SternPoly SternPoly::operator*(const SternPoly& o) const {
  require(base_ == o.base_, "base mismatch in polynomial product");
  SternPoly out(base_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      out.add_term(ma * mb, checked_mul(ca, cb));
  return out;
}

SternPoly SternPoly::frobenius(std::uint32_t d) const {
  if (d == 0) return *this;
  SternPoly out(base_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.frobenius(d), c);
  return out;
}

mpq_class SternPoly::evaluate(const std::vector<mpq_class>& z,
                              const std::vector<std::uint64_t>& t) const {
  require(z.size() == static_cast<std::size_t>(base_),
          "evaluate needs one z value per variable");
  require(t.size() == static_cast<std::size_t>(base_),
          "evaluate needs one t value per variable");
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
  mpq_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class term(static_cast<unsigned long>(c));
    for (int j = 1; j <= base_; ++j) {
      const ExpPoly& e = m.exp(j);
      if (e.is_zero()) continue;
      const mpq_class& zj = z[static_cast<std::size_t>(j - 1)];
      if (zj == 1) continue;  // 1^anything, exponent value irrelevant
      term *= rational_pow(zj, e.eval(t[static_cast<std::size_t>(j - 1)]));
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

mpq_class SternPoly::evaluate_at_ones() const {
  std::vector<mpq_class> z(static_cast<std::size_t>(base_), mpq_class(1));
  std::vector<std::uint64_t> t(static_cast<std::size_t>(base_), 1);
  return evaluate(z, t);
}

mpz_class SternPoly::coefficient_sum() const {
  mpz_class s = 0;
  for (const auto& [m, c] : terms_) s += mpz_class(static_cast<unsigned long>(c));
  return s;
}

bool SternPoly::coefficients_all_one() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second == 1; });
}

bool SternPoly::exponent_coefficients_01() const {
  for (const auto& [m, c] : terms_)
    for (int j = 1; j <= base_; ++j)
      if (!m.exp(j).coefficients_are_01()) return false;
  return true;
}

RationalPair::RationalPair(SternPoly num, SternPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  require(num_.base() == den_.base(), "base mismatch in rational pair");
  require(!den_.is_zero(), "zero denominator");
}

bool RationalPair::equivalent(const RationalPair& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

}  // namespace stern
