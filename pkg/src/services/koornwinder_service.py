"""
Construction and verification of the monic Koornwinder polynomials P_λ.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Sequence

from src.exceptions import DegeneracyError
from src.logger import get_logger
from src.models import KoornwinderPoly, ParamSet
from src.services.qdifference_service import QDifferenceOperator, eigenvalue_c
from src.weights.dominance import DominantWeight, make_weight, weights_below
from src.weights.orbits import SymmetricPoly

logger = get_logger("koornwinder")


def check_separation(lam: DominantWeight, p: ParamSet) -> None:
    """
    Raise DegeneracyError if c_{λλ} = c_{μμ} for some μ < λ.
    """

    top = eigenvalue_c(lam, p)
    for mu in weights_below(lam)[:-1]:
        if eigenvalue_c(mu, p) == top:
            raise DegeneracyError(
                f"eigenvalues of {list(lam)} and {list(mu)} coincide "
                f"({top}) for {p.canonical()}"
            )


def koornwinder(
    lam: Sequence[int],
    p: ParamSet,
    operator: Optional[QDifferenceOperator] = None,
) -> KoornwinderPoly:
    """
    Monic eigenvector of D with leading orbit sum m_λ, by back-substitution
    through the dominance-triangular operator matrix.
    """

    lam = make_weight(lam)
    check_separation(lam, p)
    operator = operator or QDifferenceOperator(p)
    matrix = operator.matrix(lam)
    basis = matrix.basis
    top = eigenvalue_c(lam, p)
    coeffs: Dict[DominantWeight, Fraction] = {lam: Fraction(1)}
    # Basis is ascending, so walk it from λ downwards.
    for position in range(len(basis) - 2, -1, -1):
        mu = basis[position]
        acc = Fraction(0)
        for nu in basis[position + 1:]:
            c_nu = coeffs.get(nu)
            if c_nu:
                acc += c_nu * matrix.coefficient(nu, mu)
        if acc:
            coeffs[mu] = acc / (top - eigenvalue_c(mu, p))
    logger.debug(
        "Built P_%s on %s basis weights for %s",
        list(lam),
        len(basis),
        p.canonical(),
    )
    return KoornwinderPoly(
        lam=lam, params=p, coeffs=SymmetricPoly(len(lam), coeffs)
    )


def verify_eigen(
    poly: KoornwinderPoly, operator: Optional[QDifferenceOperator] = None
) -> SymmetricPoly:
    """Residual D P - c_{λλ} P; exactly zero for a correct polynomial."""

    operator = operator or QDifferenceOperator(poly.params)
    image = operator.apply(poly.coeffs)
    return image - poly.coeffs.scale(eigenvalue_c(poly.lam, poly.params))
