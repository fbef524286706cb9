"""
Spectral bridge between the quantum Grassmannian and BC_l polynomials.

Spherical weights, Casimir eigenvalues, the parameter map to (a, b, c, d; q², t)
and the check that Casimir differences are one fixed multiple of the
q-difference eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from src.exceptions import DimensionError, InsufficientDataError
from src.logger import get_logger
from src.models import GrassmannSetup, KoornwinderPoly, ParamSet, SignedWeight
from src.services.koornwinder_service import koornwinder
from src.services.qdifference_service import eigenvalue_c
from src.weights.dominance import DominantWeight, make_weight


def spherical_embed(mu: Sequence[int], setup: GrassmannSetup) -> SignedWeight:
    """(μ_1, …, μ_l, 0, …, 0, -μ_l, …, -μ_1) of length n."""

    mu = make_weight(mu)
    if len(mu) != setup.l:
        raise DimensionError(f"weight {mu} has length {len(mu)}, expected {setup.l}")
    middle = (0,) * (setup.n - 2 * setup.l)
    return SignedWeight(mu + middle + tuple(-m for m in reversed(mu)))


def casimir_eigenvalue(lam: SignedWeight, n: int, q: object) -> Fraction:
    """sum_k q^{2(λ_k + n - k)}."""

    q = Fraction(q)
    if len(lam) != n:
        raise DimensionError(f"weight of length {len(lam)} for n = {n}")
    return sum(
        (q ** (2 * (part + n - k)) for k, part in enumerate(lam.parts, start=1)),
        Fraction(0),
    )


def param_map(setup: GrassmannSetup) -> ParamSet:
    """Koornwinder parameters with base q² attached to (n, l, s, u)."""

    q, s, u = setup.q, setup.s, setup.u
    return ParamSet(
        q=q * q,
        t=q * q,
        a=-q * s * u,
        b=-q / (s * u),
        c=q * s / u,
        d=q ** (2 * (setup.n - 2 * setup.l) + 1) * u / s,
    )


def spherical_restriction(
    mu: Sequence[int], setup: GrassmannSetup
) -> KoornwinderPoly:
    """Monic torus restriction of the zonal spherical function of weight μ."""

    return koornwinder(mu, param_map(setup))


@dataclass
class RadialRow:
    mu: DominantWeight
    eigenvalue: Fraction
    casimir_shift: Fraction
    matches: bool


@dataclass
class RadialReport:
    """Casimir shifts χ(μ) - χ(0) against κ · e(μ) for one setup."""

    setup: GrassmannSetup
    params: ParamSet
    kappa: Optional[Fraction]
    rows: List[RadialRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.kappa is not None and all(row.matches for row in self.rows)

    @property
    def unit_kappa(self) -> bool:
        """χ(μ) - χ(0) equals e(μ) itself for every μ."""

        return all(row.casimir_shift == row.eigenvalue for row in self.rows)


class GrassmannService:
    def __init__(self) -> None:
        self.logger = get_logger(self.__class__.__name__)

    def radial_consistency(
        self, mus: Sequence[Sequence[int]], setup: GrassmannSetup
    ) -> RadialReport:
        """
        Fit κ from the first μ with e(μ) ≠ 0 and check χ(μ) - χ(0) = κ e(μ)
        exactly for all others.

        Raises:
            InsufficientDataError: if every μ is zero.
        """

        weights = [make_weight(mu) for mu in mus]
        if not any(any(mu) for mu in weights):
            raise InsufficientDataError(
                "radial consistency needs at least one nonzero weight"
            )
        params = param_map(setup)
        base = casimir_eigenvalue(
            spherical_embed((0,) * setup.l, setup), setup.n, setup.q
        )
        pairs = []
        for mu in weights:
            shift = (
                casimir_eigenvalue(spherical_embed(mu, setup), setup.n, setup.q)
                - base
            )
            pairs.append((mu, eigenvalue_c(mu, params), shift))
        kappa = next((shift / e for _, e, shift in pairs if e), None)
        report = RadialReport(setup=setup, params=params, kappa=kappa)
        for mu, e, shift in pairs:
            expected = kappa * e if kappa is not None else None
            report.rows.append(
                RadialRow(
                    mu=mu,
                    eigenvalue=e,
                    casimir_shift=shift,
                    matches=expected is not None and shift == expected,
                )
            )
        if report.passed:
            self.logger.debug(
                "Single κ = %s fits %s weight(s) for n=%s l=%s",
                kappa,
                len(weights),
                setup.n,
                setup.l,
            )
        else:
            self.logger.warning(
                "No single κ fits the Casimir shifts for n=%s l=%s (fitted %s)",
                setup.n,
                setup.l,
                kappa,
            )
        return report


def radial_consistency(
    mus: Sequence[Sequence[int]], setup: GrassmannSetup
) -> RadialReport:
    return GrassmannService().radial_consistency(mus, setup)
