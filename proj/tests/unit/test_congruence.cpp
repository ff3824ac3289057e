#include <bilaguerre/congruence.hpp>

#include <doctest.h>

#include <random>

using namespace bilag;

TEST_SUITE("congruence") {

TEST_CASE("statement names round trip") {
  for (Statement s : {Statement::carlitz, Statement::pochhammer,
                      Statement::parameter_shift, Statement::alpha_periodicity,
                      Statement::binomial_pochhammer,
                      Statement::binomial_product, Statement::main_theorem})
    CHECK(statement_from_name(statement_name(s)) == s);
  CHECK(!statement_from_name("nope").has_value());
  CHECK(statement_from_name("main") == Statement::main_theorem);
}

TEST_CASE("one variable convolution instance, frozen sides") {
  PolyCongruence c = carlitz_instance(1, 2, 0);
  CHECK(c.modulus == 2);
  // 3! l_3 = 6 - 18x + 9x^2 - x^3
  CHECK(c.lhs.coeff(0, 0) == 6);
  CHECK(c.lhs.coeff(1, 0) == -18);
  CHECK(c.lhs.coeff(2, 0) == 9);
  CHECK(c.lhs.coeff(3, 0) == -1);
  // (1 - x)(2 - 4x + x^2) = 2 - 6x + 5x^2 - x^3
  CHECK(c.rhs.coeff(0, 0) == 2);
  CHECK(c.rhs.coeff(1, 0) == -6);
  CHECK(c.rhs.coeff(2, 0) == 5);
  CHECK(c.rhs.coeff(3, 0) == -1);
  CHECK(decide(c).holds);
}

TEST_CASE("one variable convolution holds on a grid") {
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = 1; m <= 4; ++m)
      for (unsigned alpha = 0; alpha <= 3; ++alpha) {
        CongruenceReport r = check_carlitz(n, m, alpha);
        CHECK(r.holds);
        CHECK(r.modulus == m);
        CHECK(!r.witness.has_value());
      }
}

TEST_CASE("rising factorial congruence, frozen scalar sides") {
  ScalarCongruence c = pochhammer_instance(2, 3, 1, 1, 4, 6);
  CHECK(c.lhs == 18);  // (-2)_2 * (9)_1
  CHECK(c.rhs == 18);  // (2)_2 * (3)_1
  CHECK(c.modulus == 2);
  CHECK(decide(c).holds);
}

TEST_CASE("rising factorial congruence on random tuples") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<unsigned> small(0, 6);
  std::uniform_int_distribution<long long> shift(-8, 8);
  for (int iter = 0; iter < 200; ++iter) {
    unsigned n = small(rng), m = small(rng);
    std::uniform_int_distribution<unsigned> pick_t(0, n), pick_l(0, m);
    unsigned t = pick_t(rng), l = pick_l(rng);
    long long p = 0, q = 0;
    while (p == 0) p = shift(rng);
    while (q == 0) q = shift(rng);
    CHECK(check_pochhammer_congruence(n, m, t, l, p, q).holds);
  }
}

TEST_CASE("index shift congruence, frozen") {
  PolyCongruence c = parameter_shift_instance(2, 2, 2, 3, 4);
  CHECK(c.modulus == 2);
  // (i-q+1-p)_(m-l) 2! l_2^3 with l = 1: (-2)_1 * (20 - 10x + x^2)
  CHECK(c.lhs.coeff(0, 0) == -40);
  CHECK(c.lhs.coeff(1, 0) == 20);
  CHECK(c.lhs.coeff(2, 0) == -2);
  // (2)_1 * 2! l_2^1 = 2 (6 - 6x + x^2)
  CHECK(c.rhs.coeff(0, 0) == 12);
  CHECK(c.rhs.coeff(1, 0) == -12);
  CHECK(c.rhs.coeff(2, 0) == 2);
  CHECK(decide(c).holds);
}

TEST_CASE("index shift congruence on a grid") {
  for (unsigned n = 0; n <= 3; ++n)
    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned q = 1; q <= 3; ++q)
        for (unsigned i = q; i <= m + q; ++i)
          for (long long p : {-3LL, -1LL, 1LL, 2LL, 3LL})
            CHECK(check_parameter_shift(n, m, q, i, p).holds);
}

TEST_CASE("translation invariance in the parameter, frozen") {
  PolyCongruence c = alpha_periodicity_instance(2, 0, 2);
  CHECK(c.modulus == 2);
  // 2! l_2^2 = 12 - 8x + x^2 against 2! l_2^0 = 2 - 4x + x^2
  CHECK(c.lhs.coeff(0, 0) == 12);
  CHECK(c.rhs.coeff(0, 0) == 2);
  CHECK(decide(c).holds);
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned m = 0; m <= 5; ++m)
      for (unsigned q = 1; q <= 5; ++q)
        CHECK(check_alpha_periodicity(n, m, q).holds);
}

TEST_CASE("binomial times rising factorial, frozen") {
  ScalarCongruence c = binomial_pochhammer_instance(3, 2, 2, 3, 4);
  CHECK(c.lhs == 216);  // C(3,2) (8)_2
  CHECK(c.rhs == 20);   // C(5,2) (-2)_2
  CHECK(c.modulus == 2);
  CHECK(decide(c).holds);
  for (unsigned m = 0; m <= 4; ++m)
    for (unsigned n = 0; n <= 4; ++n)
      for (unsigned q = 1; q <= 4; ++q)
        for (unsigned i = q; i <= m + q; ++i)
          for (long long p : {-4LL, -2LL, 1LL, 3LL, 4LL})
            CHECK(check_binomial_pochhammer(m, n, q, i, p).holds);
}

TEST_CASE("binomial product needs its factorial guard") {
  // Guarded form holds.
  CHECK(check_binomial_product(3, 5, 6, 6).holds);
  // Dropping the factorial breaks exactly this instance.
  CongruenceReport r = check_binomial_product(3, 5, 6, 6, false);
  CHECK(!r.holds);
  CHECK(r.modulus == 6);
  REQUIRE(r.witness.has_value());
  CHECK(!r.witness->monomial.has_value());  // scalar statement
  CHECK(r.witness->lhs_residue == 2);       // C(3,3) C(8,3) = 56
  CHECK(r.witness->rhs_residue == 0);       // C(9,3) C(14,3) = 30576
  for (unsigned m = 0; m <= 4; ++m)
    for (unsigned s = 0; s <= 4; ++s)
      for (unsigned q = 1; q <= 4; ++q)
        for (unsigned i = q; i <= m + q; ++i)
          CHECK(check_binomial_product(m, s, q, i).holds);
}

TEST_CASE("two variable product congruence holds") {
  CHECK(check_main_theorem(1, 1, 1, 1).holds);
  CHECK(check_main_theorem(2, 1, 2, 3).holds);
  CHECK(check_main_theorem(0, 0, 1, 1).holds);
  for (unsigned n = 0; n <= 2; ++n)
    for (unsigned m = 0; m <= 2; ++m)
      for (unsigned p = 1; p <= 3; ++p)
        for (unsigned q = 1; q <= 3; ++q) {
          CongruenceReport r = check_main_theorem(n, m, p, q);
          CHECK(r.holds);
          CHECK(r.modulus == gcd(Integer(p), Integer(q)));
        }
}

TEST_CASE("witness pins the first differing monomial") {
  IntBiPoly lhs, rhs;
  lhs.set_coeff({0, 0}, Integer(3));
  lhs.set_coeff({1, 0}, Integer(1));
  rhs.set_coeff({0, 0}, Integer(3));
  rhs.set_coeff({0, 1}, Integer(4));
  PolyCongruence c{Statement::carlitz, lhs, rhs, Integer(3)};
  CongruenceReport r = decide(c);
  CHECK(!r.holds);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->monomial.has_value());
  // After reduction mod 3 the sides are x and y; x comes first.
  CHECK((*r.witness->monomial == Monomial2{1, 0}));
  CHECK(r.witness->lhs_residue == 1);
  CHECK(r.witness->rhs_residue == 0);
}

TEST_CASE("builders validate their inputs") {
  CHECK_THROWS_AS(carlitz_instance(1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(pochhammer_instance(1, 1, 2, 0, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(pochhammer_instance(1, 1, 0, 2, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(pochhammer_instance(1, 1, 0, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(parameter_shift_instance(1, 1, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(parameter_shift_instance(1, 1, 2, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(parameter_shift_instance(1, 1, 2, 4, 1), std::out_of_range);
  CHECK_THROWS_AS(parameter_shift_instance(1, 1, 2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(alpha_periodicity_instance(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(binomial_pochhammer_instance(1, 1, 2, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(binomial_product_instance(1, 1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(binomial_product_instance(2, 1, 1, 4), std::out_of_range);
  CHECK_THROWS_AS(main_theorem_instance(1, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(main_theorem_instance(1, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("report serialization, frozen strings") {
  CHECK(report_to_json(check_carlitz(1, 2, 0)) ==
        R"({"statement":"carlitz","modulus":"2","holds":true})");
  CHECK(report_to_json(check_binomial_product(3, 5, 6, 6, false)) ==
        R"({"statement":"binomial_product","modulus":"6","holds":false,)"
        R"("witness":{"kind":"scalar","lhs":"2","rhs":"0"}})");
}

TEST_CASE("sweep counts the whole grid and stays deterministic") {
  SweepBounds b;
  b.max_n = 2;
  b.max_m = 2;
  b.max_p = 2;
  b.max_q = 2;
  b.max_alpha = 2;

  for (Statement st : {Statement::carlitz, Statement::pochhammer,
                       Statement::parameter_shift, Statement::alpha_periodicity,
                       Statement::binomial_pochhammer,
                       Statement::binomial_product, Statement::main_theorem}) {
    auto grid = sweep_grid(st, b);
    SweepSummary serial = sweep(st, b, 1);
    SweepSummary parallel = sweep(st, b, 4);
    CHECK(serial.checked == grid.size());
    CHECK(serial.checked == parallel.checked);
    CHECK(serial.failed == 0);
    CHECK(parallel.failed == 0);
    CHECK(serial.failures.empty());
    CHECK(parallel.failures.empty());
  }
}

TEST_CASE("sweep grid enumerations are in bounds") {
  SweepBounds b;
  b.max_n = 3;
  b.max_m = 3;
  b.max_p = 3;
  b.max_q = 3;
  b.max_alpha = 2;
  auto grid = sweep_grid(Statement::carlitz, b);
  CHECK(grid.size() == 4u * 3u * 3u);  // n 0..3, m 1..3, alpha 0..2
  for (const auto& t : grid) {
    CongruenceReport r = run_tuple(Statement::carlitz, t);
    CHECK(r.holds);
  }
  // signed shifts never include zero
  for (const auto& t : sweep_grid(Statement::pochhammer, b)) {
    CHECK(t[4] != 0);
    CHECK(t[5] != 0);
  }
}

TEST_CASE("summary serialization shape") {
  SweepBounds b;
  b.max_n = 1;
  b.max_m = 1;
  b.max_q = 1;
  SweepSummary s = sweep(Statement::alpha_periodicity, b, 1);
  std::string j = summary_to_json(s);
  CHECK(j.find("\"statement\":\"alpha_periodicity\"") != std::string::npos);
  CHECK(j.find("\"checked\":4") != std::string::npos);
  CHECK(j.find("\"failed\":0") != std::string::npos);
  CHECK(j.find("\"elapsed_ms\":") != std::string::npos);
}

}  // TEST_SUITE
