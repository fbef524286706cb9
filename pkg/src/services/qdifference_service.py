"""
Koornwinder's q-difference operator D on the span of BC_l orbit sums.

The operator is realized exactly by evaluation-interpolation: the image of a
symmetric polynomial is evaluated at rational sample points and the
coefficients in the orbit-sum basis are recovered with an exact solve.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from src.algebra.matrix import ExactMatrix, solve_exact
from src.config import get_settings
from src.exceptions import (
    InterpolationError,
    InternalConsistencyError,
    ParameterError,
    PoleError,
    SingularMatrixError,
)
from src.logger import get_logger
from src.models import OperatorMatrix, ParamSet
from src.weights.dominance import DominantWeight, basis_key, weights_below
from src.weights.orbits import SymmetricPoly, orbit_sum

Point = Tuple[Fraction, ...]

VALIDATION_POINTS = 2


def _ratio(numerator: Fraction, denominator: Fraction) -> Fraction:
    if denominator == 0:
        raise PoleError("coefficient function has a pole at this point")
    return numerator / denominator


def phi_plus_at(k: int, x: Sequence[Fraction], p: ParamSet) -> Fraction:
    """Φ_k^+(x) for the 0-based coordinate index k."""

    xk = Fraction(x[k])
    value = _ratio(
        (1 - p.a * xk) * (1 - p.b * xk) * (1 - p.c * xk) * (1 - p.d * xk),
        (1 - xk * xk) * (1 - p.q * xk * xk),
    )
    for i, xi in enumerate(x):
        if i == k:
            continue
        value *= _ratio(
            (p.t * xk - xi) * (p.t * xk * xi - 1),
            (xk - xi) * (xk * xi - 1),
        )
    return value


def phi_minus_at(k: int, x: Sequence[Fraction], p: ParamSet) -> Fraction:
    """Φ_k^-(x) for the 0-based coordinate index k."""

    xk = Fraction(x[k])
    value = _ratio(
        (xk - p.a) * (xk - p.b) * (xk - p.c) * (xk - p.d),
        (xk * xk - 1) * (xk * xk - p.q),
    )
    for i, xi in enumerate(x):
        if i == k:
            continue
        value *= _ratio(
            (xk - p.t * xi) * (xk * xi - p.t),
            (xk - xi) * (xk * xi - 1),
        )
    return value


def eigenvalue_c(lam: Sequence[int], p: ParamSet) -> Fraction:
    """Diagonal entry c_{λλ} of the operator at λ."""

    size = len(lam)
    total = Fraction(0)
    for k, part in enumerate(lam, start=1):
        total += (
            p.abcd / p.q * p.t ** (2 * size - k - 1) * (p.q**part - 1)
            + p.t ** (k - 1) * (p.q ** (-part) - 1)
        )
    return total


def _shift(x: Point, k: int, factor: Fraction) -> Point:
    return x[:k] + (x[k] * factor,) + x[k + 1:]


class QDifferenceOperator:
    """Exact realization of D for a fixed parameter set."""

    def __init__(
        self,
        params: ParamSet,
        *,
        sample_base: Optional[Fraction] = None,
        retries: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> None:
        self.logger = get_logger(self.__class__.__name__)
        if not params.is_valid():
            raise ParameterError("; ".join(params.violations()))
        settings = get_settings()
        self.params = params
        self.sample_base = Fraction(sample_base or settings.sample_base)
        self.retries = retries or settings.sample_retries
        self.seed = settings.sample_seed if seed is None else seed
        if params.is_boundary():
            self.logger.warning(
                "Parameters sit on the abcd = -q edge; eigenvalue separation "
                "is not asserted there (%s)",
                params.canonical(),
            )

    # ------------------------------------------------------------------ #
    # Pointwise evaluation
    # ------------------------------------------------------------------ #
    def apply_at(self, f: SymmetricPoly, x: Sequence[Fraction]) -> Fraction:
        """
        (D f)(x) in the regrouped form
        sum_k Φ_k^+ (f(q x_k) - f) + Φ_k^- (f(x_k / q) - f).
        """

        point = tuple(Fraction(v) for v in x)
        q = self.params.q
        base = f.evaluate(point)
        total = Fraction(0)
        for k in range(len(point)):
            up = f.evaluate(_shift(point, k, q)) - base
            down = f.evaluate(_shift(point, k, 1 / q)) - base
            if up:
                total += phi_plus_at(k, point, self.params) * up
            if down:
                total += phi_minus_at(k, point, self.params) * down
        return total

    def apply_literal_at(
        self, f: SymmetricPoly, x: Sequence[Fraction]
    ) -> Fraction:
        """(D f)(x) term by term, subtracting Φ^0 f explicitly."""

        point = tuple(Fraction(v) for v in x)
        q = self.params.q
        shifted = Fraction(0)
        phi_zero = Fraction(0)
        for k in range(len(point)):
            plus = phi_plus_at(k, point, self.params)
            minus = phi_minus_at(k, point, self.params)
            shifted += plus * f.evaluate(_shift(point, k, q))
            shifted += minus * f.evaluate(_shift(point, k, 1 / q))
            phi_zero += plus + minus
        return shifted - phi_zero * f.evaluate(point)

    # ------------------------------------------------------------------ #
    # Interpolation
    # ------------------------------------------------------------------ #
    def _sample_points(
        self, count: int, nvars: int, rng: random.Random
    ) -> List[Point]:
        points: List[Point] = []
        seen = set()
        while len(points) < count:
            point = tuple(
                self.sample_base ** (k + 1)
                * (1 + Fraction(rng.randint(1, 96), 97))
                for k in range(nvars)
            )
            if point not in seen:
                seen.add(point)
                points.append(point)
        return points

    def _usable(self, x: Point) -> bool:
        try:
            for k in range(len(x)):
                phi_plus_at(k, x, self.params)
                phi_minus_at(k, x, self.params)
        except PoleError:
            return False
        return True

    def apply(self, f: SymmetricPoly) -> SymmetricPoly:
        """
        Image D f in the orbit-sum basis.

        Raises:
            InterpolationError: if every sample system within the retry cap
                hits a pole or is singular.
            InternalConsistencyError: if held-out points disagree.
        """

        nvars = f.nvars
        if f.is_zero():
            return SymmetricPoly(nvars)
        basis = closure(f.support())
        size = len(basis)
        for attempt in range(self.retries):
            rng = random.Random(self.seed + attempt)
            points = self._sample_points(size + VALIDATION_POINTS, nvars, rng)
            if not all(self._usable(x) for x in points):
                self.logger.debug(
                    "Sample set %s hit a pole; resampling", attempt
                )
                continue
            fit, held_out = points[:size], points[size:]
            matrix = ExactMatrix.from_rows(
                [[orbit_sum(nu).evaluate(x) for nu in basis] for x in fit]
            )
            rhs = [self.apply_at(f, x) for x in fit]
            try:
                solution = solve_exact(matrix, rhs)
            except SingularMatrixError:
                self.logger.debug(
                    "Sample system %s is singular; resampling", attempt
                )
                continue
            image = SymmetricPoly(nvars, dict(zip(basis, solution)))
            for x in held_out:
                if image.evaluate(x) != self.apply_at(f, x):
                    raise InternalConsistencyError(
                        f"interpolated image disagrees at held-out point {x}"
                    )
            self.logger.debug(
                "Interpolated D on a basis of %s weights (attempt %s)",
                size,
                attempt,
            )
            return image
        raise InterpolationError(
            f"no usable sample system after {self.retries} attempts"
        )

    def matrix(self, lam: Sequence[int]) -> OperatorMatrix:
        """Operator matrix on weights_below(lam); column ν is D(m_ν)."""

        basis = tuple(weights_below(lam))
        size = len(basis)
        columns = []
        for nu in basis:
            image = self.apply(SymmetricPoly.basis_element(nu))
            columns.append([image.coefficient(mu) for mu in basis])
        entries = ExactMatrix(
            size,
            size,
            [columns[j][i] for i in range(size) for j in range(size)],
        )
        return OperatorMatrix(basis=basis, entries=entries)


def closure(weights: Iterable[DominantWeight]) -> List[DominantWeight]:
    """Union of weights_below over the given weights, in basis order."""

    found = set()
    for weight in weights:
        found.update(weights_below(weight))
    return sorted(found, key=basis_key)


def apply_D(f: SymmetricPoly, p: ParamSet) -> SymmetricPoly:
    return QDifferenceOperator(p).apply(f)


def operator_matrix(lam: Sequence[int], p: ParamSet) -> OperatorMatrix:
    return QDifferenceOperator(p).matrix(lam)
