#include <bilaguerre/laguerre.hpp>

#include <doctest.h>

using namespace bilag;

TEST_SUITE("laguerre") {

TEST_CASE("one variable, frozen coefficients") {
  CHECK(laguerre_alpha(0, 0) == UniPoly::constant(Rational(1)));

  UniPoly l1;  // 1 - x
  l1.add_coeff(0, Rational(1));
  l1.add_coeff(1, Rational(-1));
  CHECK(laguerre_alpha(1, 0) == l1);

  UniPoly l22;  // 6 - 4x + x^2/2
  l22.add_coeff(0, Rational(6));
  l22.add_coeff(1, Rational(-4));
  l22.add_coeff(2, Rational(1, 2));
  CHECK(laguerre_alpha(2, 2) == l22);

  UniPoly l3;  // 1 - 3x + 3x^2/2 - x^3/6
  l3.add_coeff(0, Rational(1));
  l3.add_coeff(1, Rational(-3));
  l3.add_coeff(2, Rational(3, 2));
  l3.add_coeff(3, Rational(-1, 6));
  CHECK(laguerre_alpha(3, 0) == l3);
}

TEST_CASE("one variable, shape invariants") {
  for (unsigned n = 0; n <= 7; ++n)
    for (unsigned alpha = 0; alpha <= 5; ++alpha) {
      UniPoly l = laguerre_alpha(n, alpha);
      CHECK(l.degree() == static_cast<int>(n));
      Rational lead = (n % 2 == 0 ? Rational(1) : Rational(-1)) *
                      Rational(Integer(1), factorial(n));
      CHECK(l.coeff(n) == lead);
      // value at the origin collapses to a binomial
      CHECK(l.eval(Rational(0)) ==
            Rational(binomial(n + alpha, static_cast<long long>(n))));
    }
}

TEST_CASE("operator route matches the explicit sum") {
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned alpha = 0; alpha <= 6; ++alpha)
      CHECK(laguerre_rodrigues_1d(n, alpha) == laguerre_alpha(n, alpha));
}

TEST_CASE("two variables, frozen coefficients") {
  CHECK(bilaguerre(0, 0) == BiPoly::constant(Rational(1)));

  BiPoly l11;  // 2 - 2x - 2y + xy
  l11.add_coeff({0, 0}, Rational(2));
  l11.add_coeff({1, 0}, Rational(-2));
  l11.add_coeff({0, 1}, Rational(-2));
  l11.add_coeff({1, 1}, Rational(1));
  CHECK(bilaguerre(1, 1) == l11);

  // m = 0 degenerates to the one variable family in x
  for (unsigned n = 0; n <= 6; ++n)
    CHECK(bilaguerre(n, 0) == embed_x(laguerre_alpha(n, 0)));
  for (unsigned m = 0; m <= 6; ++m)
    CHECK(bilaguerre(0, m) == embed_y(laguerre_alpha(m, 0)));
}

TEST_CASE("all four construction routes agree") {
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned m = 0; m <= 5; ++m) {
      BiPoly reference = bilaguerre(n, m);
      CHECK(bilaguerre_via_x(n, m) == reference);
      CHECK(bilaguerre_via_y(n, m) == reference);
      CHECK(bilaguerre_rodrigues(n, m) == reference);
    }
}

TEST_CASE("symmetry in the two indices") {
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned m = 0; m <= 5; ++m)
      CHECK(bilaguerre(n, m).swap_variables() == bilaguerre(m, n));
}

TEST_CASE("iterated operator expansion, frozen") {
  // t = 0 leaves the seed untouched
  CHECK(d_partial_expansion(2, 3, 0) ==
        BiPoly::monomial(Monomial2{2, 3}, Rational(1)));

  BiPoly step;  // one application to xy: x + y - xy
  step.add_coeff({1, 0}, Rational(1));
  step.add_coeff({0, 1}, Rational(1));
  step.add_coeff({1, 1}, Rational(-1));
  CHECK(d_partial_expansion(1, 1, 1) == step);
}

TEST_CASE("expansion equals direct operator iteration") {
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = 0; m <= 4; ++m) {
      BiPoly q = BiPoly::monomial(Monomial2{n, m}, Rational(1));
      for (unsigned t = 0; t <= n + m; ++t) {
        CHECK(d_partial_expansion(n, m, t) == q);
        q = q.partial_derivative(Var::x) + q.partial_derivative(Var::y) - q;
      }
    }
}

TEST_CASE("full expansion reproduces the polynomial") {
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = 0; m <= 4; ++m)
      CHECK(d_partial_expansion(n, m, n + m) *
                Rational(Integer(1), factorial(n) * factorial(m)) ==
            bilaguerre(n, m));
}

TEST_CASE("separable product, frozen") {
  BiPoly expect;  // (1 - x)(1 - y)
  expect.add_coeff({0, 0}, Rational(1));
  expect.add_coeff({1, 0}, Rational(-1));
  expect.add_coeff({0, 1}, Rational(-1));
  expect.add_coeff({1, 1}, Rational(1));
  CHECK(product_laguerre_2(1, 0, 1, 0) == expect);

  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = 0; m <= 4; ++m)
      CHECK(product_laguerre_2(n, 1, m, 2) ==
            embed_x(laguerre_alpha(n, 1)) * embed_y(laguerre_alpha(m, 2)));
}

TEST_CASE("double sum coefficient spot checks") {
  // coefficient of x^s y^i is (-1)^(i+s)/(i! s!) C(m+n, m-i) C(n+i, n-s)
  BiPoly p = bilaguerre(2, 3);
  CHECK(p.coeff(0, 0) == Rational(binomial(5, 3) * binomial(2, 2)));
  CHECK(p.coeff(2, 3) ==
        Rational(Integer(-1), factorial(2) * factorial(3)) *
            Rational(binomial(5, 0) * binomial(5, 0)));
  CHECK(p.coeff(1, 2) ==
        Rational(Integer(-1) * binomial(5, 1) * binomial(4, 1),
                 factorial(2) * factorial(1)));
}

}  // TEST_SUITE
