"""
Tests for rationals, Laurent polynomials, exact matrices and q-shifted factorials.
"""

from __future__ import annotations

import random
from fractions import Fraction as F

import numpy as np
import pytest

from src.algebra import (
    ExactMatrix,
    LaurentPoly,
    format_rational,
    parse_rational,
    qpoch,
    qpoch_multi,
    solve_exact,
)
from src.algebra.laurent import laurent_add, laurent_eval, laurent_mul, laurent_scale
from src.algebra.qseries import qpoch_truncated
from src.exceptions import DimensionError, DomainError, SingularMatrixError


def _random_poly(rng: random.Random, nvars: int, terms: int = 4) -> LaurentPoly:
    return LaurentPoly(
        nvars,
        {
            tuple(rng.randint(-2, 2) for _ in range(nvars)): F(
                rng.randint(-5, 5), rng.randint(1, 4)
            )
            for _ in range(terms)
        },
    )


def test_parse_and_format_rationals():
    assert parse_rational("3/6") == F(1, 2)
    assert parse_rational("0.6") == F(3, 5)
    assert parse_rational(-4) == F(-4)
    assert format_rational(F(6, 3)) == "2"
    assert format_rational(F(-2, 4)) == "-1/2"
    with pytest.raises(ValueError):
        parse_rational(0.5)
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_difference_of_squares():
    x1 = LaurentPoly.variable(1, 0)
    assert laurent_mul(x1 + 1, x1 - 1) == x1**2 - 1


def test_inverse_monomials_multiply_to_one():
    f = LaurentPoly.monomial((1, -1))
    g = LaurentPoly.monomial((-1, 1))
    assert f * g == LaurentPoly.constant(2, 1)
    assert f**-1 == g


def test_adding_zero_and_normalization():
    f = LaurentPoly(2, {(1, 0): 2, (0, 1): -1})
    assert laurent_add(f, LaurentPoly.zero(2)) == f
    assert (f - f).is_zero()
    assert len(LaurentPoly(1, {(1,): 1, (2,): 0})) == 1
    assert laurent_scale(f, F(1, 2)) == LaurentPoly(2, {(1, 0): 1, (0, 1): F(-1, 2)})
    assert laurent_scale(f, 0).is_zero()


def test_mismatched_nvars_raise():
    with pytest.raises(DimensionError):
        LaurentPoly.variable(1, 0) + LaurentPoly.variable(2, 0)


def test_laurent_evaluation_examples():
    x1 = LaurentPoly.variable(1, 0)
    assert laurent_eval(x1 + x1**-1, [2]) == F(5, 2)
    assert LaurentPoly.constant(3, 1).evaluate([F(7), F(-2), F(1, 9)]) == 1
    f = LaurentPoly(2, {(1, 1): 1, (0, 1): -1})
    assert f.evaluate([3, F(1, 3)]) == F(2, 3)


def test_evaluation_rejects_zero_coordinate():
    x1 = LaurentPoly.variable(1, 0)
    with pytest.raises(DomainError):
        (x1**-1).evaluate([0])


def test_ring_axioms_and_evaluation_homomorphism():
    rng = random.Random(7)
    for _ in range(20):
        f, g, h = (_random_poly(rng, 2) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        point = [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(2)]
        assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)
        assert (f + g).evaluate(point) == f.evaluate(point) + g.evaluate(point)


def test_terms_print_in_graded_lex_order():
    f = LaurentPoly(1, {(2,): 1, (0,): 3, (1,): -1})
    assert [e for e, _ in f.items()] == [(0,), (1,), (2,)]
    assert str(f).startswith("3")


def test_solve_identity_and_diagonal():
    assert solve_exact(ExactMatrix.identity(3), [1, F(2, 3), -5]) == [
        1,
        F(2, 3),
        -5,
    ]
    diagonal = ExactMatrix.from_rows([[2, 0], [0, 4]])
    assert solve_exact(diagonal, [1, 1]) == [F(1, 2), F(1, 4)]


def test_solve_random_systems_exactly():
    rng = random.Random(11)
    solved = 0
    for _ in range(10):
        rows = [
            [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(5)]
            for _ in range(5)
        ]
        rhs = [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(5)]
        matrix = ExactMatrix.from_rows(rows)
        try:
            x = solve_exact(matrix, rhs)
        except SingularMatrixError:
            continue
        assert matrix.apply(x) == rhs
        solved += 1
    assert solved > 0


def test_singular_matrix_detected():
    with pytest.raises(SingularMatrixError):
        solve_exact(ExactMatrix.from_rows([[1, 2], [2, 4]]), [1, 1])


def test_solve_requires_square_matrix():
    with pytest.raises(DimensionError):
        solve_exact(ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]]), [1, 1])


def test_inverse_kron_and_transpose():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    assert a @ a.inverse() == ExactMatrix.identity(2)
    assert a.transpose().transpose() == a
    k = a.kron(ExactMatrix.identity(2))
    assert k.shape == (4, 4)
    assert k[2, 0] == 3 and k[3, 1] == 3 and k[2, 1] == 0
    assert k.max_abs_entry() == 4


def test_qpoch_examples_and_recurrence():
    assert qpoch(F(3, 7), F(1, 2), 0) == 1
    assert qpoch(F(3, 7), F(1, 2), 1) == F(4, 7)
    assert qpoch(F(1, 2), F(1, 2), 2) == F(3, 8)
    a, q = F(2, 5), F(1, 3)
    for n in range(6):
        assert qpoch(a, q, n + 1) == qpoch(a, q, n) * (1 - a * q**n)
    assert qpoch_multi([a, F(1, 2)], q, 3) == qpoch(a, q, 3) * qpoch(F(1, 2), q, 3)


def test_qpoch_truncated_matches_exact_value():
    value = qpoch_truncated(np.array([0.5 + 0j]), 0.5, 2)
    assert value[0] == pytest.approx(0.375)
    assert qpoch_truncated(np.array([0j]), 0.3, 40)[0] == 1
    assert np.all(qpoch_truncated(np.array([0.9j, 2.0]), 0.5, 0) == 1)
