#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bilag {

// Arbitrary-precision signed integer. Every operation is exact.
using Integer = mpz_class;

// Exact rational number, canonical at all times: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}
  Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& numerator, const Integer& denominator);

  // Accepts an optionally signed decimal string, or a pair of them
  // separated by '/': "42", "-4/6" (stored as -2/3).
  static Rational from_string(std::string_view s);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // "num" when integral, "num/den" otherwise.
  std::string to_string() const;

  Rational operator-() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

// Factorials at or below this index come from a shared table built once.
inline constexpr unsigned kFactorialMemoBound = 256;

Integer factorial(unsigned n);

// C(a, b) with the zero-extension convention: 0 whenever b < 0 or b > a.
Integer binomial(unsigned a, long long b);

// Rising factorial x(x+1)...(x+n-1); empty product is 1.
Integer pochhammer(const Integer& x, unsigned n);
Rational pochhammer(const Rational& x, unsigned n);

// Nonnegative gcd with gcd(p, 0) = |p|. Rejects gcd(0, 0).
Integer gcd(const Integer& p, const Integer& q);

// Strict decimal parse: optional sign, digits, nothing else.
Integer parse_integer(std::string_view s);

}  // namespace bilag
