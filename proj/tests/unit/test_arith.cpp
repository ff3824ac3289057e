#include <bilaguerre/arith.hpp>

#include <doctest.h>

#include <random>

using namespace bilag;

TEST_SUITE("arith") {

TEST_CASE("factorial small and exact") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == 479001600);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(factorial(30) == Integer("265252859812191058636308480000000"));
}

TEST_CASE("factorial beyond the memo bound") {
  CHECK(factorial(kFactorialMemoBound + 3) ==
        factorial(kFactorialMemoBound + 2) * (kFactorialMemoBound + 3));
}

TEST_CASE("binomial values and zero extension") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(52, 5) == Integer("2598960"));
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
  std::mt19937 rng(20240521);
  std::uniform_int_distribution<unsigned> pick_n(1, 60);
  for (int iter = 0; iter < 200; ++iter) {
    unsigned n = pick_n(rng);
    std::uniform_int_distribution<long long> pick_k(-2, n + 2);
    long long k = pick_k(rng);
    CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST_CASE("pochhammer rising factorial") {
  CHECK(pochhammer(Integer(7), 0) == 1);
  CHECK(pochhammer(Integer(1), 6) == factorial(6));
  CHECK(pochhammer(Integer(3), 4) == 3 * 4 * 5 * 6);
  CHECK(pochhammer(Integer(-2), 2) == 2);   // (-2)(-1)
  CHECK(pochhammer(Integer(-2), 4) == 0);   // crosses zero
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-3, 2), 2) == Rational(3, 4));
}

TEST_CASE("gcd conventions") {
  CHECK(gcd(Integer(12), Integer(18)) == 6);
  CHECK(gcd(Integer(-4), Integer(6)) == 2);
  CHECK(gcd(Integer(-4), Integer(-6)) == 2);
  CHECK(gcd(Integer(5), Integer(0)) == 5);
  CHECK(gcd(Integer(0), Integer(7)) == 7);
  CHECK(gcd(Integer(-5), Integer(0)) == 5);
  CHECK_THROWS_AS(gcd(Integer(0), Integer(0)), std::domain_error);
}

TEST_CASE("rational canonical form") {
  Rational r(Integer(4), Integer(6));
  CHECK(r.num() == 2);
  CHECK(r.den() == 3);

  Rational s(Integer(2), Integer(-4));
  CHECK(s.num() == -1);
  CHECK(s.den() == 2);

  Rational z(Integer(0), Integer(-9));
  CHECK(z.is_zero());
  CHECK(z.num() == 0);
  CHECK(z.den() == 1);

  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("rational arithmetic and comparisons") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK(a > b);
  CHECK(b < a);
  CHECK(a.sign() == 1);
  CHECK((-a).sign() == -1);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational string round trips") {
  CHECK(Rational::from_string("42").to_string() == "42");
  CHECK(Rational::from_string("-4/6").to_string() == "-2/3");
  CHECK(Rational::from_string("+3/9").to_string() == "1/3");
  CHECK(Rational(1, 2).to_string() == "1/2");
  CHECK(Rational(-7).to_string() == "-7");
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
}

TEST_CASE("parse_integer is strict") {
  CHECK(parse_integer("0") == 0);
  CHECK(parse_integer("-12") == -12);
  CHECK(parse_integer("+7") == 7);
  CHECK(parse_integer("123456789012345678901234567890") ==
        Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("12x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer(" 12"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("0x1f"), std::invalid_argument);
}

TEST_CASE("rational field axioms on random values") {
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<long> pick(-50, 50);
  auto draw = [&]() {
    long num = pick(rng);
    long den = 0;
    while (den == 0) den = pick(rng);
    return Rational(Integer(num), Integer(den));
  };
  for (int iter = 0; iter < 200; ++iter) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    if (!a.is_zero()) CHECK(a / a == Rational(1));
  }
}

}  // TEST_SUITE
