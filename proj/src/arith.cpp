#include <bilaguerre/arith.hpp>

#include <vector>

namespace bilag {

namespace {

const std::vector<Integer>& factorial_table() {
  static const std::vector<Integer> table = [] {
    std::vector<Integer> t(kFactorialMemoBound + 1);
    t[0] = 1;
    for (unsigned i = 1; i < t.size(); ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  // Division of two canonical mpq values canonicalizes the result.
  q_ = mpq_class(numerator) / mpq_class(denominator);
}

Rational Rational::from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Integer factorial(unsigned n) {
  const auto& table = factorial_table();
  if (n < table.size()) return table[n];
  Integer r = table.back();
  for (unsigned i = kFactorialMemoBound + 1; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(unsigned a, long long b) {
  if (b < 0 || static_cast<unsigned long long>(b) > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), a, static_cast<unsigned long>(b));
  return r;
}

Integer pochhammer(const Integer& x, unsigned n) {
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x + i;
  return r;
}

Rational pochhammer(const Rational& x, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x + Rational(static_cast<long>(i));
  return r;
}

Integer gcd(const Integer& p, const Integer& q) {
  if (p == 0 && q == 0) throw std::domain_error("gcd(0, 0) is undefined");
  Integer r;
  mpz_gcd(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return r;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty())
    throw std::invalid_argument("parse_integer: empty input");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw std::invalid_argument("parse_integer: not a decimal integer: \"" +
                                  std::string(s) + "\"");
  Integer v(std::string(digits), 10);
  return negative ? Integer(-v) : v;
}

}  // namespace bilag
