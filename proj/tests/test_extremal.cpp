#include <cmath>

#include "doctest.h"
#include "stern/extremal.hpp"
#include "stern/matrixrep.hpp"
#include "stern/oracle.hpp"
#include "stern/stern_core.hpp"
#include "test_util.hpp"

using namespace stern;

TEST_CASE("fibonacci numbers") {
  CHECK(fib_u64(0) == 0);
  CHECK(fib_u64(1) == 1);
  CHECK(fib_u64(4) == 3);
  CHECK(fib_u64(20) == 6765);
  CHECK(fib(90) == mpz_class("2880067194370816120"));
  CHECK_THROWS_AS(fib_u64(100), OverflowError);
}

TEST_CASE("maximal index closed forms") {
  CHECK(a_index(4, 3) == 10);
  CHECK(a_index(5, 3) == 31);
  CHECK(a_index(5, 2) == 11);  // Jacobsthal (2^5 - (-1)^5)/3
  CHECK(a_index(2, 7) == 1);
  CHECK(a_index_u64(3, 7) == 8);
}

TEST_CASE("maximal index digit patterns") {
  CHECK(a_digits(6, 3).digits == std::vector<int>{1, 0, 1, 0, 1});
  CHECK(from_digits(a_digits(6, 3)) == 91);
  for (int b : {2, 3, 9}) CHECK(a_digits(2, b).digits == std::vector<int>{1});
  CHECK(a_digits(5, 2).digits == std::vector<int>{1, 0, 1, 1});
  CHECK(from_digits_u64(a_digits(5, 2)) == 11);
  for (int b : {2, 3, 4, 5, 6}) {
    for (unsigned k = 2; k <= 41; ++k) {
      CAPTURE(b);
      CAPTURE(k);
      CHECK(from_digits(a_digits(k, b)) == a_index(k, b));
    }
  }
}

TEST_CASE("maximal index recurrence") {
  CHECK(a_index(5, 3) == 3 * a_index(4, 3) + 1);      // odd branch
  CHECK(a_index(4, 3) == 3 * a_index(3, 3) + 1 - 3);  // even branch
  for (int b : {2, 3, 4, 5, 6}) CHECK(a_recurrence_check(40, b));
}

TEST_CASE("scanned maxima are Fibonacci at the Jacobsthal index") {
  const MaxScanResult r52 = max_scan(5, 2);
  CHECK(r52.max_value == 5);
  CHECK(r52.argmin_index == 11);

  for (int b : {2, 3, 5}) {
    const MaxScanResult r2 = max_scan(2, b);
    CHECK(r2.max_value == 1);
    CHECK(r2.argmin_index == 1);
  }

  const MaxScanResult r43 = max_scan(4, 3);
  CHECK(r43.max_value == 3);
  CHECK(r43.argmin_index == 10);

  for (unsigned k = 2; k <= 12; ++k) {
    const MaxScanResult r = max_scan(k, 2);
    CHECK(r.max_value == fib_u64(k));
    CHECK(r.argmin_index == a_index_u64(k, 2));
  }
  CHECK_THROWS_AS(max_scan(60, 2, 1000), std::length_error);
}

TEST_CASE("count at a_k equals F_k via the matrix path") {
  for (int b : {2, 3, 4}) {
    for (unsigned k = 2; k <= 120; ++k) {
      CAPTURE(b);
      CAPTURE(k);
      CHECK(stern_count_big(a_digits(k, b)) == fib(k));
    }
  }
}

TEST_CASE("recurrences at maximal indices") {
  for (int b : {2, 3, 4}) {
    for (unsigned l = 2; l <= 4; ++l) {
      CAPTURE(b);
      CAPTURE(l);
      CHECK(thm_rec_check(l, b));
    }
  }
  // z=1 specialization of either identity is the Fibonacci recurrence
  SternEngine engine(3);
  const mpq_class f7 = engine.poly(a_index_u64(7, 3)).evaluate_at_ones();
  const mpq_class f6 = engine.poly(a_index_u64(6, 3)).evaluate_at_ones();
  const mpq_class f5 = engine.poly(a_index_u64(5, 3)).evaluate_at_ones();
  CHECK(f7 == f6 + f5);
  CHECK(f7 == mpq_class(static_cast<unsigned long>(fib_u64(7))));
}

TEST_CASE("multiplicity support at maximal indices") {
  for (unsigned k = 4; k <= 8; ++k) CHECK(multiplicity_support_check(k, 5));
  for (unsigned k = 2; k <= 10; ++k) CHECK(multiplicity_support_check(k, 3));
  CHECK(multiplicity_support_check(6, 4));
  // the same statement read through the oracle: expansions of a_6 - 1
  for (const Expansion& h :
       enumerate_expansions(a_index_u64(6, 4) - 1, 4)) {
    for (int m : h.mults) CHECK((m == 0 || m == 1 || m == 3 || m == 4));
  }
}

TEST_CASE("continued fraction convergents") {
  // cf_odd(1,0) for b=3 is w_T(4)/w_T(1)
  const RationalPair odd1 = cf_fold(cf_odd(3, 1));
  CHECK(odd1.num() == Z(3, 3) + Zt(3, 1, 1));
  CHECK(odd1.den() == One(3));

  // cf_even(1,0) for b=3 equals w_T(10)/frobenius(w_T(4),1)
  SternEngine engine(3);
  const RationalPair even1 = cf_fold(cf_even(3, 1));
  CHECK(even1.equivalent(
      RationalPair(engine.poly(10), engine.poly(4).frobenius(1))));

  for (int b : {2, 3}) {
    for (unsigned l = 1; l <= 3; ++l) {
      CAPTURE(b);
      CAPTURE(l);
      CHECK(cf_verify(l, b, Parity::odd));
      CHECK(cf_verify(l, b, Parity::even));
    }
  }
}

TEST_CASE("numeric folds are Fibonacci ratios") {
  for (unsigned l = 1; l <= 12; ++l) {
    const mpq_class odd = cf_fold_at_ones(cf_odd(2, l));
    CHECK(odd == mpq_class(fib(2 * l + 1), fib(2 * l)));
    const mpq_class even = cf_fold_at_ones(cf_even(3, l));
    CHECK(even == mpq_class(fib(2 * l + 2), fib(2 * l + 1)));
  }
  CHECK(cf_fold_at_ones(cf_odd(2, 4)) == mpq_class(34, 21));
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(cf_fold_at_ones(cf_odd(2, 10)).get_d() - phi) < 1e-6);
}

TEST_CASE("maximal order constant and ratio") {
  CHECK(max_order_constant(2) == doctest::Approx(0.9588).epsilon(1e-3));
  CHECK(max_order_ratio(20, 2) == doctest::Approx(0.9596).epsilon(1e-3));
  for (int b : {2, 3}) {
    const double c = max_order_constant(b);
    double prev = 1e9;
    for (unsigned k = 10; k <= 30; k += 2) {
      const double gap = std::abs(max_order_ratio(k, b) - c);
      CHECK(gap < prev);
      prev = gap;
    }
  }
}
