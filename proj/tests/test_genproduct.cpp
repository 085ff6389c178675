#include <gmpxx.h>

#include "doctest.h"
#include "stern/genproduct.hpp"
#include "stern/stern_core.hpp"
#include "test_util.hpp"

using namespace stern;

TEST_CASE("repunit bounds") {
  CHECK(repunit(2, 1) == 3);
  CHECK(repunit(3, 2) == 13);
  CHECK(repunit(5, 5) == 3906);
}

TEST_CASE("truncated generating product") {
  const ProductTruncation p = truncated_product(3, 2);
  CHECK(p.max_index() == 9);
  CHECK(p.coeff(4) == Zt(3, 1, 1) + Z(3, 3));
  CHECK(p.coeff(1) == One(3));
  CHECK(p.coeff(0).is_zero());
  CHECK_THROWS_AS(p.coeff(10), std::out_of_range);

  const ProductTruncation q = truncated_product(2, 3);
  SternEngine engine(2);
  for (std::uint64_t n = 1; n <= 8; ++n) CHECK(q.coeff(n) == engine.poly(n));

  CHECK_THROWS_AS(truncated_product(2, 40), std::length_error);
}

TEST_CASE("truncation is exact through b^K") {
  for (int b : {2, 3}) {
    const int K = 4;
    const ProductTruncation p = truncated_product(b, K);
    SternEngine engine(b);
    for (std::uint64_t n = 1; n <= p.max_index(); ++n) {
      CAPTURE(b);
      CAPTURE(n);
      CHECK(p.coeff(n) == engine.poly(n));
    }
  }
}

TEST_CASE("specialize z1") {
  CHECK(specialize_z1(Zt(3, 1, 1) + Z(3, 3)) == One(3) + Z(3, 3));
  CHECK(specialize_z1(One(3)) == One(3));
  CHECK(specialize_z1(Zt(3, 1, 1) + Zt(3, 1, 2)) ==
        SternPoly::constant(3, 2));
}

TEST_CASE("finite product left side") {
  CHECK(finite_product_lhs(2, 1, ExponentMode::symbolic) ==
        SternPoly::constant(2, 2) + Z(2, 2));
  // hand expansion of (2 + z2 + z3)(2 + z2^t2 + z3^t3)
  const SternPoly lhs = finite_product_lhs(3, 2, ExponentMode::symbolic);
  const SternPoly f0 = SternPoly::constant(3, 2) + Z(3, 2) + Z(3, 3);
  const SternPoly f1 = SternPoly::constant(3, 2) + Zt(3, 2, 1) + Zt(3, 3, 1);
  CHECK(lhs == f0 * f1);
  CHECK(lhs.evaluate_at_ones() == 16);  // (b+1)^N = 4^2

  // numeric mode prints constant exponents b^i
  const SternPoly num = finite_product_lhs(3, 2, ExponentMode::numeric);
  const SternPoly g1 = SternPoly::constant(3, 2) +
                       Zp(3, 2, ExpPoly::constant(3)) +
                       Zp(3, 3, ExpPoly::constant(3));
  CHECK(num == f0 * g1);
}

TEST_CASE("finite product right side") {
  CHECK(finite_product_rhs(2, 1) == SternPoly::constant(2, 2) + Z(2, 2));
  CHECK(finite_product_rhs(3, 1).evaluate_at_ones() == 4);
  for (int b : {2, 3, 4}) {
    for (int N = 1; N <= 3; ++N) {
      CAPTURE(b);
      CAPTURE(N);
      const SternPoly lhs = finite_product_lhs(b, N, ExponentMode::symbolic);
      const SternPoly rhs = finite_product_rhs(b, N);
      CHECK(lhs == rhs);
      mpz_class want;
      mpz_ui_pow_ui(want.get_mpz_t(), static_cast<unsigned long>(b + 1),
                    static_cast<unsigned long>(N));
      CHECK(rhs.evaluate_at_ones() == mpq_class(want));
    }
  }
}

TEST_CASE("numeric exponents match only under t_j = b") {
  const int b = 3, N = 2;
  const SternPoly rhs = finite_product_rhs(b, N);
  const SternPoly numeric = finite_product_lhs(b, N, ExponentMode::numeric);
  CHECK(numeric != rhs);
  const std::vector<std::uint64_t> tb(b, static_cast<std::uint64_t>(b));
  CHECK(substitute_t(rhs, tb) == numeric);
}

TEST_CASE("substitute_t") {
  const SternPoly p = Zp(3, 1, ExpPoly::constant(1) + T(2));  // z1^(1+t1^2)
  CHECK(substitute_t(p, {3, 1, 1}) == Zp(3, 1, ExpPoly::constant(10)));
  CHECK(substitute_t(One(3), {9, 9, 9}) == One(3));
}
