"""
Tests for dominant weights, Weyl orbits and the orbit-sum basis.
"""

from __future__ import annotations

import random
from fractions import Fraction as F
from itertools import product

import pytest

from src.algebra import LaurentPoly
from src.exceptions import DimensionError, InvarianceError
from src.weights import (
    SymmetricPoly,
    dominance_leq,
    is_W_invariant,
    make_weight,
    orbit_sum,
    to_orbit_basis,
    weights_below,
    weyl_orbit,
)
from src.weights.dominance import dominant_weights_of_size, is_dominant
from src.weights.orbits import from_orbit_basis, weyl_group_order


def test_dominance_examples():
    assert dominance_leq((1, 1), (2, 0))
    assert dominance_leq((2, 1), (2, 1))
    assert not dominance_leq((2, 2), (3, 0))
    with pytest.raises(DimensionError):
        dominance_leq((1,), (1, 0))


def test_make_weight_rejects_non_dominant():
    with pytest.raises(ValueError):
        make_weight((0, 1))
    with pytest.raises(ValueError):
        make_weight((1, -1))
    assert not is_dominant(())


def test_dominance_is_a_partial_order():
    for l in (1, 2, 3):  # noqa: E741
        weights = dominant_weights_of_size(l, 4)
        for a, b in product(weights, repeat=2):
            if dominance_leq(a, b) and dominance_leq(b, a):
                assert a == b
        rng = random.Random(l)
        for _ in range(50):
            a, b, c = (rng.choice(weights) for _ in range(3))
            if dominance_leq(a, b) and dominance_leq(b, c):
                assert dominance_leq(a, c)


def test_weights_below_examples():
    assert weights_below((0, 0)) == [(0, 0)]
    assert weights_below((2,)) == [(0,), (1,), (2,)]
    assert weights_below((1, 1)) == [(0, 0), (1, 0), (1, 1)]


def test_weights_below_matches_brute_force():
    for l in (1, 2, 3):  # noqa: E741
        for lam in dominant_weights_of_size(l, 4):
            below = weights_below(lam)
            assert below[-1] == lam
            candidates = [
                w
                for w in product(range(lam[0] + 1), repeat=l)
                if is_dominant(w)
            ]
            expected = {w for w in candidates if dominance_leq(w, lam)}
            assert set(below) == expected
            keys = [(sum(w), w) for w in below]
            assert keys == sorted(keys)


def test_orbit_sum_examples():
    assert orbit_sum((0, 0)) == LaurentPoly.constant(2, 1)
    assert orbit_sum((1, 0)) == LaurentPoly(
        2, {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1}
    )
    assert orbit_sum((1, 1)) == LaurentPoly(
        2, {(1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1}
    )


def test_orbit_sizes_divide_group_order():
    assert weyl_group_order(3) == 48
    for l in (1, 2, 3):  # noqa: E741
        for lam in dominant_weights_of_size(l, 4):
            size = len(weyl_orbit(lam))
            assert weyl_group_order(l) % size == 0
            assert len(orbit_sum(lam)) == size
            assert is_W_invariant(orbit_sum(lam))


def test_invariance_examples():
    assert is_W_invariant(orbit_sum((1, 0)))
    assert not is_W_invariant(LaurentPoly.variable(1, 0))
    assert not is_W_invariant(LaurentPoly(2, {(1, 1): 1, (-1, -1): 1}))


def test_to_orbit_basis_examples():
    assert to_orbit_basis(LaurentPoly.constant(2, 1)).coeffs == {(0, 0): 1}
    f = orbit_sum((1, 0)) + 3
    assert to_orbit_basis(f).coeffs == {(1, 0): 1, (0, 0): 3}
    x1, x2 = LaurentPoly.variable(2, 0), LaurentPoly.variable(2, 1)
    product_ = (x1 + x1**-1) * (x2 + x2**-1)
    assert to_orbit_basis(product_).coeffs == {(1, 1): 1}


def test_to_orbit_basis_rejects_non_invariant():
    with pytest.raises(InvarianceError):
        to_orbit_basis(LaurentPoly.variable(2, 0))


def test_basis_round_trip_on_random_combinations():
    rng = random.Random(3)
    for l in (1, 2, 3):  # noqa: E741
        weights = dominant_weights_of_size(l, 4)
        for _ in range(10):
            chosen = rng.sample(weights, min(3, len(weights)))
            sym = SymmetricPoly(
                l, {w: F(rng.randint(-6, 6), rng.randint(1, 3)) for w in chosen}
            )
            expanded = from_orbit_basis(sym)
            assert to_orbit_basis(expanded) == sym


def test_symmetric_poly_evaluation_matches_expansion():
    sym = SymmetricPoly(2, {(1, 0): 2, (1, 1): F(-1, 3), (0, 0): 5})
    point = [F(3, 2), F(-2, 5)]
    assert sym.evaluate(point) == sym.to_laurent().evaluate(point)
    assert sym.support() == ((0, 0), (1, 0), (1, 1))
