"""
Domain models for the Koornwinder toolkit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from src.algebra.matrix import ExactMatrix
from src.algebra.rational import format_rational
from src.exceptions import ParameterError
from src.weights.dominance import DominantWeight
from src.weights.orbits import SymmetricPoly

PARAM_NAMES = ("q", "t", "a", "b", "c", "d")


@dataclass(frozen=True)
class ParamSet:
    """
    Exact parameters (q, t, a, b, c, d) of the q-difference operator.

    Construction enforces 0 < q < 1, 0 < t < 1 and -q <= abcd < 1 unless
    ``checked=False`` is passed (used to build degenerate configurations).
    """

    q: Fraction
    t: Fraction
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    checked: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        for name in PARAM_NAMES:
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.checked:
            problems = self.violations()
            if problems:
                raise ParameterError("; ".join(problems))

    @property
    def abcd(self) -> Fraction:
        return self.a * self.b * self.c * self.d

    def violations(self) -> List[str]:
        """Names of the violated validity conditions, empty when valid."""

        problems = []
        if not 0 < self.q < 1:
            problems.append(f"0 < q < 1 violated (q = {self.q})")
        if not 0 < self.t < 1:
            problems.append(f"0 < t < 1 violated (t = {self.t})")
        if not -self.q <= self.abcd < 1:
            problems.append(f"-q <= abcd < 1 violated (abcd = {self.abcd})")
        return problems

    def is_valid(self) -> bool:
        return not self.violations()

    def is_boundary(self) -> bool:
        """abcd = -q, the closed edge of the admissible range."""

        return self.abcd == -self.q

    def is_orthogonality_grade(self) -> bool:
        return self.is_valid() and all(
            abs(v) < 1 for v in (self.a, self.b, self.c, self.d)
        )

    def with_abcd(self, values: Sequence[object]) -> "ParamSet":
        a, b, c, d = values
        return ParamSet(self.q, self.t, a, b, c, d, checked=self.checked)

    def as_dict(self) -> Dict[str, Fraction]:
        return {name: getattr(self, name) for name in PARAM_NAMES}

    def canonical(self) -> str:
        """Stable text form used in cache keys."""

        return ";".join(
            f"{name}={format_rational(getattr(self, name))}"
            for name in PARAM_NAMES
        )

    def to_numeric(self) -> "NumericParams":
        return NumericParams(
            **{name: float(getattr(self, name)) for name in PARAM_NAMES}
        )


@dataclass(frozen=True)
class NumericParams:
    """Floating-point parameters for quadrature, orthogonality grade."""

    q: float
    t: float
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        if not 0 < self.q < 1:
            raise ParameterError(f"0 < q < 1 violated (q = {self.q})")
        if not 0 < self.t < 1:
            raise ParameterError(f"0 < t < 1 violated (t = {self.t})")
        for name in ("a", "b", "c", "d"):
            if not abs(getattr(self, name)) < 1:
                raise ParameterError(
                    f"|{name}| < 1 violated ({name} = {getattr(self, name)})"
                )


PRECISIONS = ("double", "extended")


@dataclass(frozen=True)
class QuadratureConfig:
    """
    Truncation N of every (.;q)_inf and grid size M per torus dimension.

    N = 0 replaces the weight by 1.
    """

    truncation: int = 40
    grid: int = 64
    precision: str = "double"

    def __post_init__(self) -> None:
        if self.truncation < 0:
            raise ParameterError("truncation N must be >= 0")
        if self.grid < 4:
            raise ParameterError("grid M must be >= 4")
        if self.precision not in PRECISIONS:
            raise ParameterError(
                f"precision must be one of {PRECISIONS}, got {self.precision}"
            )

    def doubled(self) -> "QuadratureConfig":
        return QuadratureConfig(
            max(1, 2 * self.truncation), 2 * self.grid, self.precision
        )


@dataclass(frozen=True)
class GrassmannSetup:
    """Rank l Grassmannian in dimension n with s = q^σ and u = q^τ."""

    n: int
    l: int  # noqa: E741
    q: Fraction
    s: Fraction
    u: Fraction

    def __post_init__(self) -> None:
        for name in ("q", "s", "u"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.n < 2:
            raise ParameterError(f"n must be >= 2 (n = {self.n})")
        if not 1 <= self.l <= self.n // 2:
            raise ParameterError(
                f"1 <= l <= floor(n/2) violated (n = {self.n}, l = {self.l})"
            )
        if not 0 < self.q < 1:
            raise ParameterError(f"0 < q < 1 violated (q = {self.q})")
        if self.s <= 0 or self.u <= 0:
            raise ParameterError("s = q^σ and u = q^τ must be positive")


@dataclass(frozen=True)
class OperatorMatrix:
    """
    Matrix of the q-difference operator on span{m_ν : ν in basis}.

    ``entries[i, j]`` is the coefficient of m_{basis[i]} in D(m_{basis[j]}),
    so column j holds the image of the j-th basis element.
    """

    basis: Tuple[DominantWeight, ...]
    entries: ExactMatrix

    def index(self, weight: Sequence[int]) -> int:
        return self.basis.index(tuple(weight))

    def coefficient(
        self, source: Sequence[int], target: Sequence[int]
    ) -> Fraction:
        """Coefficient of m_target in D(m_source)."""

        return self.entries[self.index(target), self.index(source)]

    def diagonal(self) -> List[Fraction]:
        return [self.entries[i, i] for i in range(len(self.basis))]


@dataclass(frozen=True)
class KoornwinderPoly:
    """Monic eigenfunction P_λ = m_λ + sum_{μ<λ} c_{λμ} m_μ."""

    lam: DominantWeight
    params: ParamSet
    coeffs: SymmetricPoly

    @property
    def nvars(self) -> int:
        return len(self.lam)

    def coefficient(self, mu: Sequence[int]) -> Fraction:
        return self.coeffs.coefficient(mu)

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return self.coeffs.evaluate(point)


@dataclass(frozen=True)
class RMatrix:
    """
    The n²×n² R-matrix of the vector representation.

    Pair (i, j) of 1-based labels sits at flat index (i-1)*n + (j-1).
    """

    n: int
    q: Fraction
    entries: ExactMatrix

    @staticmethod
    def pair_index(n: int, i: int, j: int) -> int:
        return (i - 1) * n + (j - 1)


@dataclass(frozen=True)
class ReflectionPoint:
    """A constant symmetric solution J of the reflection equation."""

    n: int
    l: int  # noqa: E741
    s: Fraction
    entries: ExactMatrix

    def is_symmetric(self) -> bool:
        """J* = J, which for rational entries is plain symmetry."""

        return self.entries.is_symmetric()


@dataclass(frozen=True)
class SignedWeight:
    """Dominant gl_n weight λ_1 ≥ … ≥ λ_n, entries of any sign."""

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ParameterError(f"{parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)
