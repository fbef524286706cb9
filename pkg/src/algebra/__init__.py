"""
Exact arithmetic substrate: rationals, Laurent polynomials, dense matrices.
"""

from src.algebra.laurent import LaurentPoly
from src.algebra.matrix import ExactMatrix, solve_exact
from src.algebra.qseries import qpoch, qpoch_multi
from src.algebra.rational import format_rational, parse_rational

__all__ = [
    "ExactMatrix",
    "LaurentPoly",
    "format_rational",
    "parse_rational",
    "qpoch",
    "qpoch_multi",
    "solve_exact",
]
