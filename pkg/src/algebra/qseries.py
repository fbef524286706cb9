"""
q-shifted factorials, exact and truncated-numeric.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np


def qpoch(a: object, q: object, n: int) -> Fraction:
    """(a; q)_n = prod_{k=0}^{n-1} (1 - a q^k); the empty product for n = 0."""

    if n < 0:
        raise ValueError("n must be nonnegative")
    a = Fraction(a)
    q = Fraction(q)
    result = Fraction(1)
    power = Fraction(1)
    for _ in range(n):
        result *= 1 - a * power
        power *= q
    return result


def qpoch_multi(values: Sequence[object], q: object, n: int) -> Fraction:
    """(a_1, ..., a_s; q)_n as the product of the single factorials."""

    result = Fraction(1)
    for a in values:
        result *= qpoch(a, q, n)
    return result


def qpoch_truncated(
    z: np.ndarray, q: float, terms: int, dtype=np.complex128
) -> np.ndarray:
    """
    Elementwise (z; q)_N for complex arrays, truncating (z; q)_inf to N factors.

    N = 0 yields ones, matching the empty-product convention.
    """

    z = np.asarray(z, dtype=dtype)
    result = np.ones_like(z)
    power = dtype(1).real
    for _ in range(terms):
        result *= 1.0 - z * power
        power *= q
    return result
