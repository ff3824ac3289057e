"""Exact two-variable Laguerre polynomials, congruence checks, and
combinatorial cross-checks.

All arithmetic is exact: integers are python ints, rational values are
fractions.Fraction. Nothing here ever goes through floating point.
"""

from ._core import (
    BiPoly,
    BoundExceededError,
    Certificate,
    CongruenceReport,
    DegreeTooLargeError,
    IntBiPoly,
    NonIntegralError,
    PolyParseError,
    RookVector,
    SweepBounds,
    SweepSummary,
    UniPoly,
    bilaguerre,
    bilaguerre_rodrigues,
    bilaguerre_rook_transform,
    bilaguerre_via_x,
    bilaguerre_via_y,
    check_alpha_periodicity,
    check_binomial_pochhammer,
    check_binomial_product,
    check_carlitz,
    check_main_theorem,
    check_parameter_shift,
    check_pochhammer_congruence,
    diagonal_identity_check,
    irreducibility_certificate,
    kronecker_irreducible,
    laguerre_alpha,
    ode_residual,
    parse_bipoly,
    pde_residuals,
    product_laguerre_2,
    product_pde_residual,
    rook_numbers_bruteforce,
    rook_polynomial_from_laguerre,
    serialize,
    substitute_diagonal,
    sweep,
    to_integer_poly,
)

__all__ = [
    "BiPoly",
    "BoundExceededError",
    "Certificate",
    "CongruenceReport",
    "DegreeTooLargeError",
    "IntBiPoly",
    "NonIntegralError",
    "PolyParseError",
    "RookVector",
    "SweepBounds",
    "SweepSummary",
    "UniPoly",
    "bilaguerre",
    "bilaguerre_rodrigues",
    "bilaguerre_rook_transform",
    "bilaguerre_via_x",
    "bilaguerre_via_y",
    "check_alpha_periodicity",
    "check_binomial_pochhammer",
    "check_binomial_product",
    "check_carlitz",
    "check_main_theorem",
    "check_parameter_shift",
    "check_pochhammer_congruence",
    "diagonal_identity_check",
    "irreducibility_certificate",
    "kronecker_irreducible",
    "laguerre_alpha",
    "ode_residual",
    "parse_bipoly",
    "pde_residuals",
    "product_laguerre_2",
    "product_pde_residual",
    "rook_numbers_bruteforce",
    "rook_polynomial_from_laguerre",
    "serialize",
    "substitute_diagonal",
    "sweep",
    "to_integer_poly",
]

__version__ = "0.1.0"
