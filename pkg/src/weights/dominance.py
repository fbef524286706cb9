"""
Dominant weights of BC_l and the dominance order.

A dominant weight is a weakly decreasing tuple of nonnegative integers.
The basis order used project-wide is graded lexicographic ascending, which
is a linear extension of dominance.
"""

from __future__ import annotations

from itertools import accumulate
from typing import List, Sequence, Tuple

from src.exceptions import DimensionError

DominantWeight = Tuple[int, ...]


def make_weight(parts: Sequence[int]) -> DominantWeight:
    """Validate and freeze a dominant weight."""

    weight = tuple(int(p) for p in parts)
    if not weight:
        raise ValueError("a dominant weight needs at least one part")
    if weight[-1] < 0 or any(a < b for a, b in zip(weight, weight[1:])):
        raise ValueError(
            f"{weight} is not dominant (need λ_1 ≥ … ≥ λ_l ≥ 0)"
        )
    return weight


def is_dominant(parts: Sequence[int]) -> bool:
    try:
        make_weight(parts)
    except ValueError:
        return False
    return True


def basis_key(weight: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    return (sum(weight), tuple(weight))


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff every partial sum of mu is at most that of lam."""

    if len(mu) != len(lam):
        raise DimensionError(
            f"weights of different length: {len(mu)} vs {len(lam)}"
        )
    return all(a <= b for a, b in zip(accumulate(mu), accumulate(lam)))


def weights_below(lam: Sequence[int]) -> List[DominantWeight]:
    """
    All dominant mu with mu <= lam, in graded lexicographic ascending order.

    Depth-first over weakly decreasing vectors, pruning on partial sums.
    """

    lam = make_weight(lam)
    bounds = list(accumulate(lam))
    length = len(lam)
    found: List[DominantWeight] = []

    def extend(prefix: List[int], running: int) -> None:
        position = len(prefix)
        if position == length:
            found.append(tuple(prefix))
            return
        cap = prefix[-1] if prefix else lam[0]
        for part in range(min(cap, bounds[position] - running) + 1):
            prefix.append(part)
            extend(prefix, running + part)
            prefix.pop()

    extend([], 0)
    found.sort(key=basis_key)
    return found


def dominant_weights_of_size(length: int, max_size: int) -> List[DominantWeight]:
    """Every dominant weight of the given length with |λ| <= max_size."""

    found: List[DominantWeight] = []

    def extend(prefix: List[int], remaining: int) -> None:
        if len(prefix) == length:
            found.append(tuple(prefix))
            return
        cap = prefix[-1] if prefix else max_size
        for part in range(min(cap, remaining) + 1):
            prefix.append(part)
            extend(prefix, remaining - part)
            prefix.pop()

    extend([], max_size)
    found.sort(key=basis_key)
    return found
