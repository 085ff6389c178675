#include "stern/stern_core.hpp"

#include <vector>

namespace stern {

SternEngine::SternEngine(int base) : base_(base) {
  require(base >= 2, "base must be >= 2");
}

// For m >= 2 write m - 1 = q*b + r. Then
//   r == 0:  w_T(m) = z_b * F(w_T(q), 1) + F(w_T(q+1), 1)
//   r >= 1:  w_T(m) = z_r * F(w_T(q+1), 1)
// where F is the frobenius shift. The explicit work stack keeps the digit
// count of n, not the machine stack, as the only depth limit.

const SternPoly& SternEngine::poly(std::uint64_t n) {
  auto hit = poly_memo_.find(n);
  if (hit != poly_memo_.end()) return hit->second;
  const std::uint64_t b = static_cast<std::uint64_t>(base_);
  std::vector<std::uint64_t> stack{n};
  while (!stack.empty()) {
    const std::uint64_t m = stack.back();
    if (poly_memo_.contains(m)) {
      stack.pop_back();
      continue;
    }
    if (m <= 1) {
      poly_memo_.emplace(m, m == 0 ? SternPoly::zero(base_)
                                   : SternPoly::one(base_));
      stack.pop_back();
      continue;
    }
    const std::uint64_t q = (m - 1) / b;
    const std::uint64_t r = (m - 1) % b;
    if (r == 0) {
      auto a = poly_memo_.find(q);
      auto c = poly_memo_.find(q + 1);
      if (a == poly_memo_.end() || c == poly_memo_.end()) {
        if (a == poly_memo_.end()) stack.push_back(q);
        if (c == poly_memo_.end()) stack.push_back(q + 1);
        continue;
      }
      SternPoly v = SternPoly::variable(base_, base_) * a->second.frobenius(1) +
                    c->second.frobenius(1);
      poly_memo_.emplace(m, std::move(v));
    } else {
      auto a = poly_memo_.find(q + 1);
      if (a == poly_memo_.end()) {
        stack.push_back(q + 1);
        continue;
      }
      SternPoly v = SternPoly::variable(base_, static_cast<int>(r)) *
                    a->second.frobenius(1);
      poly_memo_.emplace(m, std::move(v));
    }
    stack.pop_back();
  }
  return poly_memo_.at(n);
}

std::uint64_t SternEngine::count(std::uint64_t n) {
  auto hit = count_memo_.find(n);
  if (hit != count_memo_.end()) return hit->second;
  const std::uint64_t b = static_cast<std::uint64_t>(base_);
  std::vector<std::uint64_t> stack{n};
  while (!stack.empty()) {
    const std::uint64_t m = stack.back();
    if (count_memo_.contains(m)) {
      stack.pop_back();
      continue;
    }
    if (m <= 1) {
      count_memo_.emplace(m, m);
      stack.pop_back();
      continue;
    }
    const std::uint64_t q = (m - 1) / b;
    const std::uint64_t r = (m - 1) % b;
    if (r == 0) {
      auto a = count_memo_.find(q);
      auto c = count_memo_.find(q + 1);
      if (a == count_memo_.end() || c == count_memo_.end()) {
        if (a == count_memo_.end()) stack.push_back(q);
        if (c == count_memo_.end()) stack.push_back(q + 1);
        continue;
      }
      count_memo_.emplace(m, checked_add(a->second, c->second));
    } else {
      auto a = count_memo_.find(q + 1);
      if (a == count_memo_.end()) {
        stack.push_back(q + 1);
        continue;
      }
      count_memo_.emplace(m, a->second);
    }
    stack.pop_back();
  }
  return count_memo_.at(n);
}

mpz_class SternEngine::count_ref(const mpz_class& n) {
  require(n >= 0, "n must be nonnegative");
  auto hit = big_memo_.find(n);
  if (hit != big_memo_.end()) return hit->second;
  std::vector<mpz_class> stack{n};
  while (!stack.empty()) {
    const mpz_class m = stack.back();
    if (big_memo_.contains(m)) {
      stack.pop_back();
      continue;
    }
    if (m <= 1) {
      big_memo_.emplace(m, m);
      stack.pop_back();
      continue;
    }
    mpz_class q;
    const mpz_class m1 = m - 1;
    const unsigned long r = mpz_fdiv_q_ui(q.get_mpz_t(), m1.get_mpz_t(),
                                          static_cast<unsigned long>(base_));
    if (r == 0) {
      auto a = big_memo_.find(q);
      auto c = big_memo_.find(q + 1);
      if (a == big_memo_.end() || c == big_memo_.end()) {
        if (a == big_memo_.end()) stack.push_back(q);
        if (c == big_memo_.end()) stack.push_back(q + 1);
        continue;
      }
      big_memo_.emplace(m, a->second + c->second);
    } else {
      auto a = big_memo_.find(q + 1);
      if (a == big_memo_.end()) {
        stack.push_back(q + 1);
        continue;
      }
      big_memo_.emplace(m, a->second);
    }
    stack.pop_back();
  }
  return big_memo_.at(n);
}

SternPoly stern_poly(std::uint64_t n, int base) {
  SternEngine engine(base);
  return engine.poly(n);
}

std::uint64_t stern_count(std::uint64_t n, int base) {
  SternEngine engine(base);
  return engine.count(n);
}

}  // namespace stern
