"""
Weyl group orbits of BC_l, orbit sums and the orbit-sum basis.

W = (Z/2)^l ⋊ S_l acts on exponents by permutations and sign changes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Dict, Iterator, Mapping, Sequence, Tuple

from src.algebra.laurent import Exponent, LaurentPoly
from src.exceptions import DimensionError, InvarianceError
from src.weights.dominance import DominantWeight, basis_key, make_weight


def weyl_group_order(length: int) -> int:
    return 2**length * factorial(length)


def weyl_orbit(exponent: Sequence[int]) -> Tuple[Exponent, ...]:
    """Distinct images of an exponent under signed permutations, sorted."""

    return _weyl_orbit(tuple(int(e) for e in exponent))


@lru_cache(maxsize=4096)
def _weyl_orbit(exponent: Tuple[int, ...]) -> Tuple[Exponent, ...]:
    images = set()
    for perm in set(permutations(exponent)):
        for signs in product((1, -1), repeat=len(perm)):
            images.add(tuple(s * e for s, e in zip(signs, perm)))
    return tuple(sorted(images))


def dominant_representative(exponent: Sequence[int]) -> DominantWeight:
    return tuple(sorted((abs(e) for e in exponent), reverse=True))


def orbit_sum(lam: Sequence[int]) -> LaurentPoly:
    """m_λ: each distinct monomial of the orbit W·λ with coefficient 1."""

    return _orbit_sum(make_weight(lam))


@lru_cache(maxsize=1024)
def _orbit_sum(lam: DominantWeight) -> LaurentPoly:
    return LaurentPoly(len(lam), {e: 1 for e in weyl_orbit(lam)})


def _generators(nvars: int):
    for i in range(nvars - 1):
        def swap(e, i=i):
            e = list(e)
            e[i], e[i + 1] = e[i + 1], e[i]
            return e
        yield swap

    def flip(e):
        return [-e[0]] + list(e[1:])

    yield flip


def is_W_invariant(f: LaurentPoly) -> bool:
    """Check invariance under adjacent transpositions and one sign change."""

    return all(f.substitute_exponents(g) == f for g in _generators(f.nvars))


class SymmetricPoly:
    """A W-invariant polynomial written as sum_μ c_μ m_μ."""

    __slots__ = ("_coeffs", "_nvars")

    def __init__(
        self, nvars: int, coeffs: Mapping[Sequence[int], object] | None = None
    ) -> None:
        if nvars < 1:
            raise DimensionError("nvars must be positive")
        normalized: Dict[DominantWeight, Fraction] = {}
        for weight, value in (coeffs or {}).items():
            key = make_weight(weight)
            if len(key) != nvars:
                raise DimensionError(
                    f"weight {key} has length {len(key)}, expected {nvars}"
                )
            total = normalized.get(key, Fraction(0)) + Fraction(value)
            if total:
                normalized[key] = total
            else:
                normalized.pop(key, None)
        self._coeffs = normalized
        self._nvars = nvars

    @classmethod
    def basis_element(cls, lam: Sequence[int]) -> "SymmetricPoly":
        lam = make_weight(lam)
        return cls(len(lam), {lam: 1})

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def coeffs(self) -> Dict[DominantWeight, Fraction]:
        return dict(self._coeffs)

    def coefficient(self, weight: Sequence[int]) -> Fraction:
        return self._coeffs.get(tuple(weight), Fraction(0))

    def support(self) -> Tuple[DominantWeight, ...]:
        return tuple(sorted(self._coeffs, key=basis_key))

    def items(self) -> Iterator[Tuple[DominantWeight, Fraction]]:
        for weight in self.support():
            yield weight, self._coeffs[weight]

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check(self, other: "SymmetricPoly") -> None:
        if self._nvars != other._nvars:
            raise DimensionError(
                f"nvars mismatch: {self._nvars} vs {other._nvars}"
            )

    def __add__(self, other: "SymmetricPoly") -> "SymmetricPoly":
        self._check(other)
        merged = dict(self._coeffs)
        for weight, value in other._coeffs.items():
            merged[weight] = merged.get(weight, Fraction(0)) + value
        return SymmetricPoly(self._nvars, merged)

    def __neg__(self) -> "SymmetricPoly":
        return self.scale(-1)

    def __sub__(self, other: "SymmetricPoly") -> "SymmetricPoly":
        return self + (-other)

    def scale(self, factor: object) -> "SymmetricPoly":
        factor = Fraction(factor)
        return SymmetricPoly(
            self._nvars, {w: c * factor for w, c in self._coeffs.items()}
        )

    def to_laurent(self) -> LaurentPoly:
        """Expand sum_μ c_μ m_μ into monomials."""

        terms: Dict[Exponent, Fraction] = {}
        for weight, value in self._coeffs.items():
            for exponent in weyl_orbit(weight):
                terms[exponent] = value
        return LaurentPoly(self._nvars, terms)

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != self._nvars:
            raise DimensionError(
                f"point has {len(point)} coordinates, expected {self._nvars}"
            )
        return sum(
            (c * orbit_sum(w).evaluate(point) for w, c in self._coeffs.items()),
            Fraction(0),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymmetricPoly):
            return NotImplemented
        return self._nvars == other._nvars and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*m{list(w)}" for w, c in self.items()) or "0"
        return f"SymmetricPoly({self._nvars}, {body})"


def to_orbit_basis(f: LaurentPoly) -> SymmetricPoly:
    """
    Express a W-invariant Laurent polynomial in the m_μ basis by repeatedly
    peeling off the largest dominant exponent of the support.

    Raises:
        InvarianceError: if f is not W-invariant.
    """

    if not is_W_invariant(f):
        raise InvarianceError("input is not invariant under the Weyl group")
    remainder = f
    coeffs: Dict[DominantWeight, Fraction] = {}
    while not remainder.is_zero():
        top = max(
            (e for e in remainder.support() if _is_dominant_exponent(e)),
            key=basis_key,
        )
        value = remainder.coefficient(top)
        coeffs[top] = value
        remainder = remainder - orbit_sum(top).scale(value)
    return SymmetricPoly(f.nvars, coeffs)


def _is_dominant_exponent(exponent: Sequence[int]) -> bool:
    return exponent[-1] >= 0 and all(
        a >= b for a, b in zip(exponent, exponent[1:])
    )


def from_orbit_basis(f: SymmetricPoly) -> LaurentPoly:
    return f.to_laurent()
