#include <bilaguerre/rook.hpp>

#include <bilaguerre/laguerre.hpp>

#include <doctest.h>

#include <sstream>

using namespace bilag;

TEST_SUITE("rook") {

TEST_CASE("placement counts from the polynomial, frozen") {
  UniPoly r2 = rook_polynomial_from_laguerre(2);
  CHECK(r2.coeff(0) == Rational(1));
  CHECK(r2.coeff(1) == Rational(4));
  CHECK(r2.coeff(2) == Rational(2));

  UniPoly r3 = rook_polynomial_from_laguerre(3);
  CHECK(r3.coeff(0) == Rational(1));
  CHECK(r3.coeff(1) == Rational(9));
  CHECK(r3.coeff(2) == Rational(18));
  CHECK(r3.coeff(3) == Rational(6));

  CHECK(rook_polynomial_from_laguerre(0) == UniPoly::constant(Rational(1)));
}

TEST_CASE("closed form C(n,k)^2 k!") {
  for (unsigned n = 0; n <= 8; ++n) {
    UniPoly r = rook_polynomial_from_laguerre(n);
    for (unsigned k = 0; k <= n; ++k) {
      Integer expect = binomial(n, k) * binomial(n, k) * factorial(k);
      CHECK(r.coeff(k) == Rational(expect));
    }
  }
}

TEST_CASE("exhaustive counting agrees with the polynomial") {
  for (unsigned n = 0; n <= 6; ++n) {
    RookVector rv = rook_numbers_bruteforce(n);
    UniPoly r = rook_polynomial_from_laguerre(n);
    REQUIRE(rv.counts.size() == n + 1);
    for (unsigned k = 0; k <= n; ++k)
      CHECK(Rational(rv.counts[k]) == r.coeff(k));
  }
}

TEST_CASE("exhaustive counter refuses big boards") {
  CHECK_THROWS_AS(rook_numbers_bruteforce(7), BoundExceededError);
  CHECK_NOTHROW(rook_numbers_bruteforce(7, 7));
}

TEST_CASE("two variable rescaling, frozen") {
  IntBiPoly t = bilaguerre_rook_transform(1, 1);
  CHECK(t.coeff(0, 0) == 1);
  CHECK(t.coeff(1, 0) == 2);
  CHECK(t.coeff(0, 1) == 2);
  CHECK(t.coeff(1, 1) == 2);
  CHECK(t.term_count() == 4);
}

TEST_CASE("two variable rescaling stays nonnegative and collapses correctly") {
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned m = 0; m <= 5; ++m) {
      IntBiPoly t = bilaguerre_rook_transform(n, m);
      CHECK(t.term_count() == static_cast<std::size_t>(n + 1) * (m + 1));
      for (const auto& [mono, c] : t.terms()) CHECK(c > 0);
    }
  // m = 0 reduces to the one board polynomial
  for (unsigned n = 0; n <= 6; ++n) {
    IntBiPoly t = bilaguerre_rook_transform(n, 0);
    UniPoly r = rook_polynomial_from_laguerre(n);
    for (unsigned k = 0; k <= n; ++k) CHECK(Rational(t.coeff(k, 0)) == r.coeff(k));
  }
}

TEST_CASE("csv emission, frozen bytes") {
  std::ostringstream os;
  write_rook_csv(os, rook_numbers_bruteforce(2));
  CHECK(os.str() == "n,k,r_k\n2,0,1\n2,1,4\n2,2,2\n");
}

}  // TEST_SUITE
