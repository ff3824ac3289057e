#pragma once

#include <bilaguerre/poly.hpp>

namespace bilag {

// l_n^a(x) = sum_{j=0}^{n} (-1)^j / j! * C(n+a, n-j) * x^j.
// Exact rational coefficients; degree n, leading coefficient (-1)^n / n!.
UniPoly laguerre_alpha(unsigned n, unsigned alpha);

// Same polynomial built the long way round: start from x^(n+a), apply
// P -> P' - P a total of n times, then divide by x^a and by n!.
UniPoly laguerre_rodrigues_1d(unsigned n, unsigned alpha);

// Two-variable l_{n,m}(x, y) as an explicit double sum over x^s y^i.
BiPoly bilaguerre(unsigned n, unsigned m);

// l_{n,m} assembled as sum_i (-1)^i / i! * C(m+n, m-i) * l_n^i(x) * y^i.
BiPoly bilaguerre_via_x(unsigned n, unsigned m);

// Mirror expansion: sum_s (-1)^s / s! * C(m+n, n-s) * l_m^s(y) * x^s.
BiPoly bilaguerre_via_y(unsigned n, unsigned m);

// Operator route: start from x^n y^m, apply Q -> Q_x + Q_y - Q a total of
// n+m times, then divide by n! m!.
BiPoly bilaguerre_rodrigues(unsigned n, unsigned m);

// (d/dx + d/dy - 1)^t applied to x^n y^m, written as
// sum_{i=0}^{min(t,m)} C(t,i) * m!/(m-i)! * w_{t-i}(x) * y^(m-i)
// where w_k is the k-fold image of x^n under P -> P' - P.
BiPoly d_partial_expansion(unsigned n, unsigned m, unsigned t);

// Separable product l_n^a(x) * l_m^b(y).
BiPoly product_laguerre_2(unsigned n, unsigned alpha, unsigned m, unsigned beta);

}  // namespace bilag
