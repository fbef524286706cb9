"""
Independent symbolic construction of P_λ for a single variable.

For l = 1 the operator is applied to x^j + x^{-j} as a univariate rational
function with sympy (the cancellation removes the denominators), and the
monic eigenvector is obtained from a sympy linear solve. Nothing here goes
through sampling or interpolation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence

import sympy as sp

from src.exceptions import DimensionError, InternalConsistencyError
from src.models import KoornwinderPoly, ParamSet
from src.weights.dominance import make_weight
from src.weights.orbits import SymmetricPoly

X = sp.Symbol("x")


def _to_sympy(value: Fraction) -> sp.Rational:
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def _to_fraction(value: sp.Expr) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _orbit_sum_1d(j: int) -> sp.Expr:
    return sp.Integer(1) if j == 0 else X**j + X ** (-j)


def image_of_orbit_sum(j: int, p: ParamSet) -> Dict[int, sp.Rational]:
    """D(x^j + x^{-j}) as {exponent: coefficient} after exact cancellation."""

    q, a, b, c, d = (_to_sympy(v) for v in (p.q, p.a, p.b, p.c, p.d))
    phi_plus = ((1 - a * X) * (1 - b * X) * (1 - c * X) * (1 - d * X)) / (
        (1 - X**2) * (1 - q * X**2)
    )
    phi_minus = ((X - a) * (X - b) * (X - c) * (X - d)) / (
        (X**2 - 1) * (X**2 - q)
    )
    f = _orbit_sum_1d(j)
    expr = sp.cancel(
        phi_plus * (f.subs(X, q * X) - f) + phi_minus * (f.subs(X, X / q) - f)
    )
    numerator, denominator = sp.fraction(expr)
    den = sp.Poly(denominator, X)
    if not den.is_monomial:
        raise InternalConsistencyError(
            f"D(m_{j}) did not cancel to a Laurent polynomial: {expr}"
        )
    shift = den.degree()
    lead = den.LC()
    terms: Dict[int, sp.Rational] = {}
    if numerator != 0:
        for (power,), coeff in sp.Poly(numerator, X).terms():
            terms[power - shift] = sp.Rational(coeff) / lead
    return terms


def one_var_oracle(lam: Sequence[int], p: ParamSet) -> KoornwinderPoly:
    """P_λ for l = 1 via symbolic cancellation and a sympy linear solve."""

    lam = make_weight(lam)
    if len(lam) != 1:
        raise DimensionError("the one-variable oracle needs l = 1")
    degree = lam[0]
    if degree == 0:
        return KoornwinderPoly(
            lam=lam, params=p, coeffs=SymmetricPoly(1, {(0,): 1})
        )
    images = [image_of_orbit_sum(j, p) for j in range(degree + 1)]
    unknowns: List[sp.Symbol] = list(sp.symbols(f"c0:{degree}"))
    coeffs: List[sp.Expr] = unknowns + [sp.Integer(1)]
    eigenvalue = images[degree].get(degree, sp.Integer(0))
    equations = []
    for k in range(degree + 1):
        lhs = sum(
            (coeffs[j] * images[j].get(k, 0) for j in range(degree + 1)),
            sp.Integer(0),
        )
        equations.append(sp.expand(lhs - eigenvalue * coeffs[k]))
    solutions = sp.linsolve(equations, unknowns)
    if not solutions:
        raise InternalConsistencyError(f"no eigenvector found for {lam}")
    (values,) = tuple(solutions)
    result = {(j,): _to_fraction(v) for j, v in enumerate(values)}
    result[(degree,)] = Fraction(1)
    return KoornwinderPoly(
        lam=lam, params=p, coeffs=SymmetricPoly(1, result)
    )
