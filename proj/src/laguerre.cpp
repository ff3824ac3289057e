#include <bilaguerre/laguerre.hpp>

#include <vector>

namespace bilag {

namespace {

Rational signed_unit(unsigned k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

UniPoly laguerre_alpha(unsigned n, unsigned alpha) {
  UniPoly p;
  for (unsigned j = 0; j <= n; ++j) {
    Rational c = signed_unit(j) * Rational(binomial(n + alpha, static_cast<long long>(n) - j),
                                           factorial(j));
    p.add_coeff(j, c);
  }
  return p;
}

UniPoly laguerre_rodrigues_1d(unsigned n, unsigned alpha) {
  UniPoly p = UniPoly::monomial(n + alpha, Rational(1));
  for (unsigned k = 0; k < n; ++k) p = p.derivative() - p;
  p = p.divided_by_x_power(alpha);
  return p * Rational(Integer(1), factorial(n));
}

BiPoly bilaguerre(unsigned n, unsigned m) {
  BiPoly p;
  for (unsigned i = 0; i <= m; ++i) {
    Integer outer = binomial(m + n, static_cast<long long>(m) - i);
    for (unsigned s = 0; s <= n; ++s) {
      Rational c = signed_unit(i + s) *
                   Rational(outer * binomial(n + i, static_cast<long long>(n) - s),
                            factorial(i) * factorial(s));
      p.add_coeff(Monomial2{s, i}, c);
    }
  }
  return p;
}

BiPoly bilaguerre_via_x(unsigned n, unsigned m) {
  BiPoly p;
  for (unsigned i = 0; i <= m; ++i) {
    Rational outer = signed_unit(i) *
                     Rational(binomial(m + n, static_cast<long long>(m) - i), factorial(i));
    UniPoly l = laguerre_alpha(n, i);
    for (const auto& [e, c] : l.terms()) p.add_coeff(Monomial2{e, i}, c * outer);
  }
  return p;
}

BiPoly bilaguerre_via_y(unsigned n, unsigned m) {
  BiPoly p;
  for (unsigned s = 0; s <= n; ++s) {
    Rational outer = signed_unit(s) *
                     Rational(binomial(m + n, static_cast<long long>(n) - s), factorial(s));
    UniPoly l = laguerre_alpha(m, s);
    for (const auto& [e, c] : l.terms()) p.add_coeff(Monomial2{s, e}, c * outer);
  }
  return p;
}

BiPoly bilaguerre_rodrigues(unsigned n, unsigned m) {
  BiPoly q = BiPoly::monomial(Monomial2{n, m}, Rational(1));
  for (unsigned k = 0; k < n + m; ++k)
    q = q.partial_derivative(Var::x) + q.partial_derivative(Var::y) - q;
  return q * Rational(Integer(1), factorial(n) * factorial(m));
}

BiPoly d_partial_expansion(unsigned n, unsigned m, unsigned t) {
  // w_k: k-fold image of x^n under P -> P' - P.
  std::vector<UniPoly> w(t + 1);
  w[0] = UniPoly::monomial(n, Rational(1));
  for (unsigned k = 1; k <= t; ++k) w[k] = w[k - 1].derivative() - w[k - 1];

  BiPoly p;
  unsigned top = std::min(t, m);
  for (unsigned i = 0; i <= top; ++i) {
    // falling factorial m!/(m-i)!, exact by construction
    Integer falling = factorial(m) / factorial(m - i);
    Rational outer(binomial(t, i) * falling);
    for (const auto& [e, c] : w[t - i].terms())
      p.add_coeff(Monomial2{e, m - i}, c * outer);
  }
  return p;
}

BiPoly product_laguerre_2(unsigned n, unsigned alpha, unsigned m, unsigned beta) {
  return embed_x(laguerre_alpha(n, alpha)) * embed_y(laguerre_alpha(m, beta));
}

}  // namespace bilag
