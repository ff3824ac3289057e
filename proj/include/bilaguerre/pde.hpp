#pragma once

#include <bilaguerre/poly.hpp>

namespace bilag {

// Residual of the classical second order equation at l_n^a:
// x u'' + (a + 1 - x) u' + n u. Identically zero when the solution is exact.
UniPoly ode_residual(unsigned n, unsigned alpha);

struct ResidualPair {
  BiPoly row1;  // x u_xx + y u_xy + (1 - x) u_x + n u
  BiPoly row2;  // x u_yx + y u_yy + (1 - y) u_y + m u
};

// Both rows of the coupled system evaluated at l_{n,m}(x, y).
ResidualPair pde_residuals(unsigned n, unsigned m);

// Residual of x u_xx + y u_yy + (a+1-x) u_x + (b+1-y) u_y + (n+m) u at the
// separable product l_n^a(x) l_m^b(y); the eigenvalue is the total degree.
BiPoly product_pde_residual(unsigned n, unsigned alpha, unsigned m,
                            unsigned beta);

}  // namespace bilag
