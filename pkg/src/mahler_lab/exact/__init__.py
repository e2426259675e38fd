"""Exact arithmetic foundation: rationals, polynomials, quadratic fields,
recurrence detection, integer lattices and real-root isolation."""

from fractions import Fraction as BigRational

from .lattice import integer_kernel, lll_reduce, matrix_rank
from .polys import RationalPoly, cyclotomic, poly_eval_at_one, to_fraction
from .quadratic import QuadraticNumber, quadratic_from_poly, squarefree_split
from .recurrence import RecurrenceFit, berlekamp_massey
from .roots import (
    RealRoot,
    RootIsolation,
    exact_real_root,
    isolate_real_roots,
    roots_inside_radius,
    schur_stable,
)

__all__ = [
    "BigRational",
    "QuadraticNumber",
    "RationalPoly",
    "RealRoot",
    "RecurrenceFit",
    "RootIsolation",
    "berlekamp_massey",
    "cyclotomic",
    "exact_real_root",
    "integer_kernel",
    "isolate_real_roots",
    "lll_reduce",
    "matrix_rank",
    "poly_eval_at_one",
    "quadratic_from_poly",
    "roots_inside_radius",
    "schur_stable",
    "squarefree_split",
    "to_fraction",
]
