"""
Tests for the R-matrix and the constant solutions J of the reflection equation.
"""

from __future__ import annotations

import logging
from fractions import Fraction as F

import pytest

from src.algebra import ExactMatrix
from src.exceptions import DimensionError, ParameterError
from src.models import RMatrix
from src.services.reflection_service import (
    ReflectionService,
    build_J,
    build_R,
    build_variants,
    hecke_residual,
    reflection_residual,
    yang_baxter_residual,
)

HALF = F(1, 2)


def test_two_dimensional_R_matrix():
    r = build_R(2, HALF)
    assert [r.entries[i, i] for i in range(4)] == [HALF, 1, 1, HALF]
    # row (2, 1), column (1, 2)
    assert r.entries[2, 1] == HALF - 2
    off_diagonal = [
        (i, j) for i in range(4) for j in range(4) if i != j and r.entries[i, j]
    ]
    assert off_diagonal == [(2, 1)]


def test_R_matrix_at_q_one_is_identity():
    assert build_R(3, 1).entries == ExactMatrix.identity(9)


def test_three_dimensional_R_has_one_entry_per_pair():
    r = build_R(3, F(2, 3))
    off_diagonal = [
        (i, j) for i in range(9) for j in range(9) if i != j and r.entries[i, j]
    ]
    assert len(off_diagonal) == 3
    assert (RMatrix.pair_index(3, 3, 1), RMatrix.pair_index(3, 1, 3)) in off_diagonal


def test_R_matrix_rejects_bad_input():
    with pytest.raises(ParameterError):
        build_R(1, HALF)
    with pytest.raises(ParameterError):
        build_R(2, 0)


def test_variants_invert_and_flip():
    r = build_R(3, F(3, 4))
    flipped, inverse, flip = build_variants(r)
    size = 9
    assert flip @ flip == ExactMatrix.identity(size)
    assert r.entries @ inverse == ExactMatrix.identity(size)
    assert flip @ flipped @ flip == r.entries


def test_J_examples():
    s = HALF
    assert build_J(2, 1, s).entries == ExactMatrix.from_rows(
        [[F(3, 4), -s], [-s, 0]]
    )
    four = build_J(4, 1, s).entries
    assert four == ExactMatrix.from_rows(
        [
            [F(3, 4), 0, 0, -s],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [-s, 0, 0, 0],
        ]
    )
    assert build_J(2, 1, 1).entries == ExactMatrix.from_rows([[0, -1], [-1, 0]])


def test_J_is_symmetric_and_validated():
    for n in range(2, 7):
        for l in range(1, n // 2 + 1):  # noqa: E741
            assert build_J(n, l, F(2, 3)).is_symmetric()
    with pytest.raises(ParameterError):
        build_J(4, 3, HALF)
    with pytest.raises(ParameterError):
        build_J(4, 0, HALF)
    with pytest.raises(ParameterError):
        build_J(4, 1, 0)


def test_identity_solves_reflection_equation():
    for n in (2, 3):
        residual = reflection_residual(ExactMatrix.identity(n), build_R(n, HALF))
        assert residual.is_zero()


SWEEP_Q = (F(1, 3), HALF, F(2, 3))
SWEEP_S = (F(1, 3), HALF, 1, F(3, 2), 2)


@pytest.mark.parametrize("q", SWEEP_Q)
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_J_solves_reflection_equation(n, q):
    r = build_R(n, q)
    for l in range(1, n // 2 + 1):  # noqa: E741
        for s in SWEEP_S:
            point = build_J(n, l, s)
            assert reflection_residual(point.entries, r).is_zero()


def test_generic_symmetric_matrix_fails():
    x = ExactMatrix.from_rows([[1, 2], [2, 3]])
    assert not reflection_residual(x, build_R(2, HALF)).is_zero()


def test_residual_scales_quadratically():
    r = build_R(2, HALF)
    x = ExactMatrix.from_rows([[1, 2], [2, 3]])
    base = reflection_residual(x, r)
    assert reflection_residual(x.scale(3), r) == base.scale(9)


def test_residual_needs_matching_shape():
    with pytest.raises(DimensionError):
        reflection_residual(ExactMatrix.identity(3), build_R(2, HALF))


@pytest.mark.parametrize("q", SWEEP_Q)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_yang_baxter_and_hecke(n, q):
    r = build_R(n, q)
    assert yang_baxter_residual(r).is_zero()
    assert hecke_residual(r).is_zero()


def test_yang_baxter_fails_for_generic_matrix():
    generic = ExactMatrix.from_rows(
        [[1, 2, 0, 1], [0, 1, 3, 0], [2, 0, 1, 1], [1, 1, 0, 2]]
    )
    fake = RMatrix(n=2, q=HALF, entries=generic)
    assert not yang_baxter_residual(fake).is_zero()


def test_service_check_reports_pass():
    result = ReflectionService().check(2, 1, HALF, HALF)
    assert result.passed
    assert result.residual_max == 0
    assert result.j_matrix == build_J(2, 1, HALF).entries


def test_service_sweep_covers_every_rank(caplog):
    with caplog.at_level(logging.WARNING):
        checks = ReflectionService().sweep([2, 3], [HALF, 2], [F(1, 3)])
    assert [(c.n, c.l) for c in checks] == [(2, 1), (2, 1), (3, 1), (3, 1)]
    assert all(c.passed for c in checks)
    assert "fail" not in caplog.text
