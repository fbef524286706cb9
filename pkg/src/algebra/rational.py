"""
Helpers around ``fractions.Fraction``, the coefficient field of every exact
computation in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, str, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse "p/q", an integer or a finite decimal string into a Fraction.

    Floats are rejected: "0.6" means 3/5, while the float 0.6 does not.
    """

    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid rational literal: {value!r}") from exc
    raise ValueError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(value: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is one."""

    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def height(value: Fraction) -> int:
    """Canonical integer height max(|p|, q) used for pivot selection."""

    return max(abs(value.numerator), value.denominator)
