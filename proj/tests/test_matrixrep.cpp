#include <random>

#include "doctest.h"
#include "stern/matrixrep.hpp"
#include "stern/stern_core.hpp"
#include "test_util.hpp"

using namespace stern;

TEST_CASE("digit matrices") {
  // A_1(0) for b=3: [[z3, 1], [0, z1]]
  const SymMatrix2 a1 = sym_matrix(1, 0, 3);
  CHECK(a1.at(0, 0) == Z(3, 3));
  CHECK(a1.at(0, 1) == One(3));
  CHECK(a1.at(1, 0).is_zero());
  CHECK(a1.at(1, 1) == Z(3, 1));

  // A_2(1) for b=3: [[0, z1^t1], [0, z2^t2]]
  const SymMatrix2 a2 = sym_matrix(2, 1, 3);
  CHECK(a2.at(0, 0).is_zero());
  CHECK(a2.at(0, 1) == Zt(3, 1, 1));
  CHECK(a2.at(1, 0).is_zero());
  CHECK(a2.at(1, 1) == Zt(3, 2, 1));

  CHECK_THROWS_AS(sym_matrix(3, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(sym_matrix(2, 0, 2), std::invalid_argument);  // b=2 has no A_i
  CHECK_THROWS_AS(sym_matrix(-1, 0, 3), std::invalid_argument);
}

TEST_CASE("symbolic matrices specialize to the numeric ones") {
  for (int b : {2, 3, 5}) {
    for (int digit = 0; digit < b; ++digit) {
      const SymMatrix2 sym = sym_matrix(digit, 0, b);
      const NumMatrix2 num = num_matrix(digit, b);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          CHECK(sym.at(r, c).evaluate_at_ones() == mpq_class(num.at(r, c)));
    }
  }
}

TEST_CASE("matrix products reproduce w_T") {
  SternEngine engine(3);
  // w_T(7 | x,y,z) = x^u z + y^v from the worked 21_3 product
  CHECK(stern_via_matrix(7, 3) ==
        SternPoly::from_monomial(
            Monomial(3).with_exp(1, T(1)).with_exp(3, T(0))) +
            Zt(3, 2, 1));
  // bottom-right of the same product: w_T(8) = x y^s
  CHECK(stern_via_matrix(8, 3) ==
        SternPoly::from_monomial(Monomial(3).with_exp(1, T(0)).with_exp(2, T(1))));
  for (int b : {2, 5}) CHECK(stern_via_matrix(0, b).is_zero());

  for (int b : {2, 3, 4}) {
    SternEngine e(b);
    const std::uint64_t cap = static_cast<std::uint64_t>(b) * b * b * b;
    for (std::uint64_t n = 0; n <= cap; ++n) {
      CAPTURE(b);
      CAPTURE(n);
      CHECK(stern_via_matrix(n, b) == e.poly(n));
    }
  }
}

TEST_CASE("partial products carry consecutive values in the second column") {
  for (int b : {2, 3}) {
    SternEngine engine(b);
    for (std::uint64_t n : {1ull, 7ull, 29ull, 61ull}) {
      const DigitString d = to_digits(n, b);
      SymMatrix2 prod = sym_matrix(d.digits.back(), 0, b);
      std::uint64_t m = static_cast<std::uint64_t>(d.digits.back());
      std::uint64_t place = static_cast<std::uint64_t>(b);
      std::uint32_t level = 1;
      CHECK(prod.at(0, 1) == engine.poly(m));
      CHECK(prod.at(1, 1) == engine.poly(m + 1));
      for (auto it = d.digits.rbegin() + 1; it != d.digits.rend();
           ++it, ++level) {
        prod = prod * sym_matrix(*it, level, b);
        m += static_cast<std::uint64_t>(*it) * place;
        place *= static_cast<std::uint64_t>(b);
        CHECK(prod.at(0, 1) == engine.poly(m));
        CHECK(prod.at(1, 1) == engine.poly(m + 1));
      }
    }
  }
}

TEST_CASE("leading zeros do not change the product") {
  for (int b : {2, 3, 4}) {
    for (std::uint64_t n : {0ull, 5ull, 97ull, 1000ull}) {
      DigitString padded = to_digits(n, b);
      padded.digits.insert(padded.digits.begin(), 3, 0);
      CHECK(stern_via_matrix(padded) == stern_via_matrix(n, b));
    }
  }
}

TEST_CASE("big-integer counting path") {
  CHECK(stern_count_big(DigitString{2, {1, 0, 1}}) == 3);  // classical s(5)
  for (int b : {2, 3, 6}) CHECK(stern_count_big(DigitString{b, {1}}) == 1);
  CHECK(stern_count_big(to_digits(10, 3)) == 3);
  CHECK(stern_count_big(DigitString{2, {}}) == 0);

  for (int b : {2, 3, 4}) {
    SternEngine engine(b);
    for (std::uint64_t n = 0; n <= 500; ++n)
      CHECK(stern_count_big(mpz_class(static_cast<unsigned long>(n)), b) ==
            static_cast<unsigned long>(engine.count(n)));
  }

  // agreement with the plain recursion far beyond 64 bits
  SternEngine engine(3);
  const mpz_class n("123456789012345678901234567890123456789");
  CHECK(stern_count_big(n, 3) == engine.count_ref(n));
}

TEST_CASE("count paths agree on random large indices") {
  std::mt19937_64 rng(99);
  for (int b : {2, 3, 5}) {
    SternEngine engine(b);
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t n = rng() % 1'000'000'000;
      CAPTURE(b);
      CAPTURE(n);
      CHECK(stern_count_big(mpz_class(static_cast<unsigned long>(n)), b) ==
            static_cast<unsigned long>(engine.count(n)));
    }
  }
}
