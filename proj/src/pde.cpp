#include <bilaguerre/pde.hpp>

#include <bilaguerre/laguerre.hpp>

namespace bilag {

namespace {

const BiPoly& mono_x() {
  static const BiPoly p = BiPoly::monomial(Monomial2{1, 0}, Rational(1));
  return p;
}

const BiPoly& mono_y() {
  static const BiPoly p = BiPoly::monomial(Monomial2{0, 1}, Rational(1));
  return p;
}

}  // namespace

UniPoly ode_residual(unsigned n, unsigned alpha) {
  UniPoly u = laguerre_alpha(n, alpha);
  UniPoly du = u.derivative();
  UniPoly x = UniPoly::monomial(1, Rational(1));

  UniPoly r = x * du.derivative();
  UniPoly coeff = UniPoly::constant(Rational(static_cast<long>(alpha) + 1)) - x;
  r += coeff * du;
  r += u * Rational(static_cast<long>(n));
  return r;
}

ResidualPair pde_residuals(unsigned n, unsigned m) {
  BiPoly u = bilaguerre(n, m);
  BiPoly ux = u.partial_derivative(Var::x);
  BiPoly uy = u.partial_derivative(Var::y);
  BiPoly one = BiPoly::constant(Rational(1));

  ResidualPair out;
  out.row1 = mono_x() * ux.partial_derivative(Var::x) +
             mono_y() * ux.partial_derivative(Var::y) +
             (one - mono_x()) * ux + u * Rational(static_cast<long>(n));
  out.row2 = mono_x() * uy.partial_derivative(Var::x) +
             mono_y() * uy.partial_derivative(Var::y) +
             (one - mono_y()) * uy + u * Rational(static_cast<long>(m));
  return out;
}

BiPoly product_pde_residual(unsigned n, unsigned alpha, unsigned m,
                            unsigned beta) {
  BiPoly u = product_laguerre_2(n, alpha, m, beta);
  BiPoly ux = u.partial_derivative(Var::x);
  BiPoly uy = u.partial_derivative(Var::y);
  BiPoly one = BiPoly::constant(Rational(1));

  BiPoly r = mono_x() * ux.partial_derivative(Var::x) +
             mono_y() * uy.partial_derivative(Var::y);
  r += (one * Rational(static_cast<long>(alpha) + 1) - mono_x()) * ux;
  r += (one * Rational(static_cast<long>(beta) + 1) - mono_y()) * uy;
  r += u * Rational(static_cast<long>(n) + m);
  return r;
}

}  // namespace bilag
