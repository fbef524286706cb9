"""
Multivariate Laurent polynomials with exact rational coefficients.

A polynomial is a finite map from integer exponent tuples of a fixed length
``nvars`` to nonzero Fractions. Instances are immutable; every operation
returns a new normalized polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from src.exceptions import DimensionError, DomainError

Exponent = Tuple[int, ...]


def grlex_key(exponent: Exponent) -> Tuple[int, Exponent]:
    """Graded lexicographic sort key (total degree first, then entries)."""

    return (sum(exponent), exponent)


class LaurentPoly:
    """Element of Q[x_1^{±1}, ..., x_l^{±1}]."""

    __slots__ = ("_terms", "_nvars", "_hash")

    def __init__(
        self, nvars: int, terms: Mapping[Sequence[int], object] | None = None
    ) -> None:
        if nvars < 1:
            raise DimensionError("nvars must be positive")
        normalized: Dict[Exponent, Fraction] = {}
        for exponent, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exponent)
            if len(key) != nvars:
                raise DimensionError(
                    f"exponent {key} has length {len(key)}, expected {nvars}"
                )
            value = normalized.get(key, Fraction(0)) + Fraction(coeff)
            if value:
                normalized[key] = value
            else:
                normalized.pop(key, None)
        self._terms = normalized
        self._nvars = nvars
        self._hash = None

    # ------------------------------------------------------------------ #
    # Constructors
    # ------------------------------------------------------------------ #
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: object) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(
        cls, exponent: Sequence[int], coeff: object = 1
    ) -> "LaurentPoly":
        return cls(len(exponent), {tuple(exponent): coeff})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "LaurentPoly":
        """The coordinate function x_{index+1}."""

        exponent = [0] * nvars
        exponent[index] = 1
        return cls.monomial(exponent)

    # ------------------------------------------------------------------ #
    # Accessors
    # ------------------------------------------------------------------ #
    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def support(self) -> Iterable[Exponent]:
        return self._terms.keys()

    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in graded lexicographic order."""

        for exponent in sorted(self._terms, key=grlex_key):
            yield exponent, self._terms[exponent]

    def __len__(self) -> int:
        return len(self._terms)

    # ------------------------------------------------------------------ #
    # Ring operations
    # ------------------------------------------------------------------ #
    def _check(self, other: "LaurentPoly") -> None:
        if self._nvars != other._nvars:
            raise DimensionError(
                f"nvars mismatch: {self._nvars} vs {other._nvars}"
            )

    def _coerce(self, other: object) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self._nvars, other)
        return NotImplemented

    def __add__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged: Dict[Exponent, Fraction] = dict(self._terms)
        for exponent, coeff in other._terms.items():
            merged[exponent] = merged.get(exponent, Fraction(0)) + coeff
        return LaurentPoly(self._nvars, merged)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(
            self._nvars, {e: -c for e, c in self._terms.items()}
        )

    def __sub__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: object) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: object) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                product[key] = product.get(key, Fraction(0)) + c1 * c2
        return LaurentPoly(self._nvars, product)

    __rmul__ = __mul__

    def scale(self, factor: object) -> "LaurentPoly":
        factor = Fraction(factor)
        if not factor:
            return LaurentPoly.zero(self._nvars)
        return LaurentPoly(
            self._nvars, {e: c * factor for e, c in self._terms.items()}
        )

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((key, coeff),) = self._terms.items()
            return LaurentPoly(
                self._nvars,
                {tuple(-e for e in key): Fraction(1) / coeff},
            ) ** (-exponent)
        result = LaurentPoly.constant(self._nvars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------ #
    # Substitutions
    # ------------------------------------------------------------------ #
    def substitute_exponents(self, transform) -> "LaurentPoly":
        """Apply an exponent map (e.g. a signed permutation) to every term."""

        return LaurentPoly(
            self._nvars,
            {tuple(transform(e)): c for e, c in self._terms.items()},
        )

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        """
        Evaluate at a point with nonzero rational coordinates.

        Raises:
            DimensionError: if the point has the wrong length.
            DomainError: if a coordinate is zero.
        """

        if len(point) != self._nvars:
            raise DimensionError(
                f"point has {len(point)} coordinates, expected {self._nvars}"
            )
        coords = [Fraction(x) for x in point]
        if any(x == 0 for x in coords):
            raise DomainError("Laurent polynomials need nonzero coordinates")
        total = Fraction(0)
        for exponent, coeff in self._terms.items():
            term = coeff
            for x, e in zip(coords, exponent):
                if e:
                    term *= x**e
            total += term
        return total

    # ------------------------------------------------------------------ #
    # Dunder plumbing
    # ------------------------------------------------------------------ #
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self._nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self._nvars}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exponent, coeff in self.items():
            factors = []
            for idx, e in enumerate(exponent, start=1):
                if e == 1:
                    factors.append(f"x{idx}")
                elif e:
                    factors.append(f"x{idx}^{e}")
            monomial = "*".join(factors)
            if not monomial:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(monomial)
            elif coeff == -1:
                pieces.append(f"-{monomial}")
            else:
                pieces.append(f"{coeff}*{monomial}")
        return " + ".join(pieces).replace("+ -", "- ")


def laurent_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def laurent_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def laurent_scale(f: LaurentPoly, c: object) -> LaurentPoly:
    return f.scale(c)


def laurent_eval(f: LaurentPoly, point: Sequence[Fraction]) -> Fraction:
    return f.evaluate(point)
