#include "doctest.h"
#include "stern/oracle.hpp"
#include "stern/stern_core.hpp"
#include "test_util.hpp"

using namespace stern;

TEST_CASE("enumeration of hyper b-ary expansions") {
  const auto h9 = enumerate_expansions(9, 3);
  REQUIRE(h9.size() == 3);
  CHECK(h9[0].mults == std::vector<int>{0, 0, 1});  // 9
  CHECK(h9[1].mults == std::vector<int>{0, 3});     // 3+3+3
  CHECK(h9[2].mults == std::vector<int>{3, 2});     // 3+3+1+1+1
  for (const Expansion& h : h9) CHECK(h.value() == 9);

  const auto h0 = enumerate_expansions(0, 5);
  REQUIRE(h0.size() == 1);
  CHECK(h0[0].mults.empty());

  CHECK(enumerate_expansions(4, 2).size() == 3);  // {4}, {2,2}, {2,1,1}
}

TEST_CASE("expansion to monomial map") {
  // n=9, b=3: part 3 twice -> z2^{t2}, part 1 thrice -> z3
  const Monomial m = expansion_to_monomial(Expansion{3, {3, 2}});
  CHECK(SternPoly::from_monomial(m) ==
        SternPoly::from_monomial(
            Monomial(3).with_exp(2, T(1)).with_exp(3, T(0))));
  CHECK(expansion_to_monomial(Expansion{3, {}}).is_identity());
  CHECK(expansion_to_monomial(Expansion{3, {0, 0, 1}}).key() == "z1^(t1^2)");
}

TEST_CASE("oracle polynomial assembles w_T") {
  CHECK(oracle_poly(10, 3) ==
        Zt(3, 1, 2) +
            SternPoly::from_monomial(
                Monomial(3).with_exp(2, T(1)).with_exp(3, T(0))) +
            Zt(3, 3, 1));
  for (int b : {2, 3, 4, 6}) CHECK(oracle_poly(1, b) == One(b));
  CHECK(oracle_poly(0, 3) == SternPoly::zero(3));
  CHECK(oracle_poly(27, 3) ==
        Zp(3, 2, ExpPoly::constant(1) + T(1) + T(2)));
}

TEST_CASE("oracle agrees with the recurrence engine") {
  for (int b : {2, 3, 5}) {
    SternEngine engine(b);
    const std::uint64_t cap = static_cast<std::uint64_t>(b) * b * b + 1;
    for (std::uint64_t n = 0; n <= cap; ++n) {
      CAPTURE(b);
      CAPTURE(n);
      CHECK(oracle_poly(n, b) == engine.poly(n));
    }
  }
}

TEST_CASE("distinct expansions give distinct monomials") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const auto expansions = enumerate_expansions(n - 1, 3);
    const SternPoly p = oracle_poly(n, 3);
    CHECK(p.term_count() == expansions.size());
    CHECK(p.coefficients_all_one());
  }
}

TEST_CASE("monomials reconstruct their expansion") {
  for (int b : {2, 4}) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      const SternPoly p = oracle_poly(n, b);
      for (const auto& [m, coeff] : p.terms()) {
        std::uint64_t total = 0;
        for (int j = 1; j <= b; ++j)
          for (const auto& [power, c] : m.exp(j).terms()) {
            CHECK(c == 1);
            total += static_cast<std::uint64_t>(j) * checked_pow(b, power);
          }
        CHECK(total == n - 1);
      }
    }
  }
}

TEST_CASE("powers of b have k+1 expansions") {
  for (int b : {2, 3, 4, 5}) {
    std::uint64_t p = 1;
    for (unsigned k = 0; k <= 8; ++k) {
      CAPTURE(b);
      CAPTURE(k);
      CHECK(enumerate_expansions(p, b).size() == k + 1);
      p *= static_cast<std::uint64_t>(b);
    }
  }
}
