"""
R-matrix, its variants and constant solutions of the reflection equation.

Everything is exact; tensor pair (i, j) of 1-based labels maps to the flat
index (i-1)*n + (j-1), which is also what ExactMatrix.kron produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from src.algebra.matrix import ExactMatrix
from src.exceptions import DimensionError, ParameterError, SingularMatrixError
from src.logger import get_logger
from src.models import ReflectionPoint, RMatrix


def _index(n: int, i: int, j: int) -> int:
    return RMatrix.pair_index(n, i, j)


def build_R(n: int, q: object) -> RMatrix:
    """
    R = sum_ij q^δij e_ii ⊗ e_jj + (q - q^-1) sum_{i>j} e_ij ⊗ e_ji.
    """

    q = Fraction(q)
    if n < 2:
        raise ParameterError(f"n must be >= 2 (n = {n})")
    if q == 0:
        raise ParameterError("q must be nonzero")
    size = n * n
    entries = [Fraction(0)] * (size * size)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            pos = _index(n, i, j)
            entries[pos * size + pos] = q if i == j else Fraction(1)
            if i > j:
                entries[pos * size + _index(n, j, i)] = q - 1 / q
    return RMatrix(n=n, q=q, entries=ExactMatrix(size, size, entries))


@lru_cache(maxsize=16)
def flip_operator(n: int) -> ExactMatrix:
    """P(e_i ⊗ e_j) = e_j ⊗ e_i."""

    size = n * n
    entries = [Fraction(0)] * (size * size)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            entries[_index(n, j, i) * size + _index(n, i, j)] = Fraction(1)
    return ExactMatrix(size, size, entries)


@lru_cache(maxsize=32)
def _inverse(matrix: ExactMatrix) -> ExactMatrix:
    return matrix.inverse()


def build_variants(r: RMatrix) -> Tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """(R+, R-, P) with R+ = P R P and R- = R^-1."""

    flip = flip_operator(r.n)
    try:
        minus = _inverse(r.entries)
    except SingularMatrixError as exc:
        raise SingularMatrixError(f"R-matrix for n={r.n} is singular") from exc
    return flip @ r.entries @ flip, minus, flip


def build_J(n: int, l: int, s: object) -> ReflectionPoint:  # noqa: E741
    """
    J with 1 - s² at k <= l, 1 for l < k < n+1-l and -s on the
    anti-diagonal pairs (k, n+1-k), k <= l.
    """

    s = Fraction(s)
    if n < 2 or not 1 <= l <= n // 2:
        raise ParameterError(
            f"1 <= l <= floor(n/2) violated (n = {n}, l = {l})"
        )
    if s <= 0:
        raise ParameterError(f"s must be positive (s = {s})")
    rows = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        mirror = n + 1 - k
        if k <= l:
            rows[k - 1][k - 1] = 1 - s * s
            rows[k - 1][mirror - 1] = -s
            rows[mirror - 1][k - 1] = -s
        elif k < n + 1 - l:
            rows[k - 1][k - 1] = Fraction(1)
    return ReflectionPoint(n=n, l=l, s=s, entries=ExactMatrix.from_rows(rows))


def _legs(x: ExactMatrix, n: int) -> Tuple[ExactMatrix, ExactMatrix]:
    if x.shape != (n, n):
        raise DimensionError(f"X has shape {x.shape}, expected ({n}, {n})")
    ident = ExactMatrix.identity(n)
    return x.kron(ident), ident.kron(x)


def reflection_residual(x: ExactMatrix, r: RMatrix) -> ExactMatrix:
    """R12 X1 R12^-1 X2 - X2 R21^-1 X1 R21, zero iff X solves the equation."""

    x1, x2 = _legs(x, r.n)
    r21, r_inv, flip = build_variants(r)
    r21_inv = flip @ r_inv @ flip
    lhs = r.entries @ x1 @ r_inv @ x2
    rhs = x2 @ r21_inv @ x1 @ r21
    return lhs - rhs


def yang_baxter_residual(r: RMatrix) -> ExactMatrix:
    """R12 R13 R23 - R23 R13 R12 on the triple tensor space."""

    ident = ExactMatrix.identity(r.n)
    r12 = r.entries.kron(ident)
    r23 = ident.kron(r.entries)
    swap23 = ident.kron(flip_operator(r.n))
    r13 = swap23 @ r12 @ swap23
    return r12 @ r13 @ r23 - r23 @ r13 @ r12


def hecke_residual(r: RMatrix) -> ExactMatrix:
    """(R̂ - q)(R̂ + q^-1) with R̂ = P R."""

    braid = flip_operator(r.n) @ r.entries
    ident = ExactMatrix.identity(r.n * r.n)
    return (braid - ident.scale(r.q)) @ (braid + ident.scale(1 / r.q))


def is_symmetric(x: ExactMatrix) -> bool:
    return x.is_symmetric()


# ---------------------------------------------------------------------- #
# Reports
# ---------------------------------------------------------------------- #
@dataclass
class ReflectionCheck:
    """Outcome of the reflection, braid and Hecke checks at one point."""

    n: int
    l: int  # noqa: E741
    q: Fraction
    s: Fraction
    residual_max: Fraction
    yang_baxter_max: Fraction
    hecke_max: Fraction
    symmetric: bool
    j_matrix: Optional[ExactMatrix] = None

    @property
    def passed(self) -> bool:
        return (
            self.symmetric
            and self.residual_max == 0
            and self.yang_baxter_max == 0
            and self.hecke_max == 0
        )


class ReflectionService:
    """Runs the exact R-matrix and reflection-equation checks."""

    def __init__(self) -> None:
        self.logger = get_logger(self.__class__.__name__)

    def check(
        self, n: int, l: int, s: object, q: object  # noqa: E741
    ) -> ReflectionCheck:
        r = build_R(n, q)
        point = build_J(n, l, s)
        residual = reflection_residual(point.entries, r)
        braid = yang_baxter_residual(r)
        hecke = hecke_residual(r)
        result = ReflectionCheck(
            n=n,
            l=l,
            q=r.q,
            s=point.s,
            residual_max=residual.max_abs_entry(),
            yang_baxter_max=braid.max_abs_entry(),
            hecke_max=hecke.max_abs_entry(),
            symmetric=point.is_symmetric(),
            j_matrix=point.entries,
        )
        if result.passed:
            self.logger.debug("Reflection checks pass for n=%s l=%s", n, l)
        else:
            self.logger.warning(
                "Reflection checks fail for n=%s l=%s s=%s q=%s "
                "(residual %s, braid %s, hecke %s)",
                n,
                l,
                point.s,
                r.q,
                result.residual_max,
                result.yang_baxter_max,
                result.hecke_max,
            )
        return result

    def sweep(
        self, ns: List[int], ss: List[object], qs: List[object]
    ) -> List[ReflectionCheck]:
        checks = []
        for n in ns:
            for l in range(1, n // 2 + 1):  # noqa: E741
                for q in qs:
                    for s in ss:
                        checks.append(self.check(n, l, s, q))
        return checks
