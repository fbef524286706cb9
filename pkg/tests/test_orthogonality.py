"""
Tests for the truncated weight and torus quadrature.
"""

from __future__ import annotations

from fractions import Fraction as F

import numpy as np
import pytest

from src.exceptions import DegeneratePointError, ParameterError
from src.models import GrassmannSetup, NumericParams, QuadratureConfig
from src.services.grassmann_service import param_map
from src.services.koornwinder_service import koornwinder
from src.services.orthogonality_service import (
    OrthogonalityService,
    _numeric,
    default_config,
    evaluate_numeric,
    gram,
    grid_weight,
    torus_grid,
    torus_inner,
    weight,
    weight_plus,
)
from src.services.qdifference_service import QDifferenceOperator
from src.weights import SymmetricPoly
from src.weights.dominance import dominant_weights_of_size


def _trivial(q: float = 0.5, t: float = 0.3) -> NumericParams:
    return NumericParams(q=q, t=t, a=0.0, b=0.0, c=0.0, d=0.0)


def _grassmann_params(n: int, l: int):  # noqa: E741
    return param_map(GrassmannSetup(n=n, l=l, q=F(3, 5), s=1, u=1))


def test_weight_plus_with_trivial_denominator():
    x = np.exp(0.7j)
    q = 0.5
    expected = (1 - x**2) * (1 - q * x**2)
    assert weight_plus([x], _trivial(q), 2) == pytest.approx(expected, abs=1e-15)


def test_weight_at_i_with_single_factor():
    assert weight([1j], _trivial(), 1) == pytest.approx(4.0)


def test_two_variable_weight_matches_independent_product():
    p = NumericParams(q=0.4, t=0.3, a=0.5, b=-0.2, c=0.1, d=0.3)
    x = np.exp(1j * np.array([0.4, 2.1]))
    terms = 40

    def poch(z):
        return np.prod([1 - z * p.q**k for k in range(terms)])

    num = poch(x[0] ** 2) * poch(x[1] ** 2)
    num *= poch(x[0] / x[1]) * poch(x[0] * x[1])
    den = poch(p.t * x[0] / x[1]) * poch(p.t * x[0] * x[1])
    for xi in x:
        for param in (p.a, p.b, p.c, p.d):
            den *= poch(param * xi)
    assert weight_plus(x, p, terms) == pytest.approx(num / den, rel=1e-13)


def test_weight_is_positive_on_grid():
    params = _grassmann_params(4, 2)
    points = torus_grid(2, 8, offset=0.5)
    # Δ vanishes where x_1 = x_2 or x_1 x_2 = 1.
    generic = (np.abs(points[:, 0] - points[:, 1]) > 1e-9) & (
        np.abs(points[:, 0] * points[:, 1] - 1) > 1e-9
    )
    values = [weight(x, params, 40) for x in points[generic]]
    assert len(values) == 48
    assert min(values) > 0


def test_numeric_params_require_orthogonality_grade():
    with pytest.raises(ParameterError):
        NumericParams(q=0.5, t=0.5, a=1.2, b=0, c=0, d=0)


def test_quadrature_config_validation():
    with pytest.raises(ParameterError):
        QuadratureConfig(truncation=-1)
    with pytest.raises(ParameterError):
        QuadratureConfig(grid=2)
    with pytest.raises(ParameterError):
        QuadratureConfig(precision="quad")
    assert QuadratureConfig(truncation=0).doubled().truncation == 1


def test_haar_normalization_and_grid_exactness():
    cfg = QuadratureConfig(truncation=0, grid=16)
    one = SymmetricPoly.basis_element((0,))
    m1 = SymmetricPoly.basis_element((1,))
    assert torus_inner(one, one, _trivial(), cfg) == pytest.approx(1.0)
    assert abs(torus_inner(m1, one, _trivial(), cfg)) < 1e-13
    assert torus_inner(m1, m1, _trivial(), cfg) == pytest.approx(2.0)


def test_evaluate_numeric_matches_exact_evaluation():
    sym = SymmetricPoly(2, {(1, 0): 2, (1, 1): F(-1, 3)})
    point = np.array([[1.5 + 0j, -0.4 + 0j]])
    exact = float(sym.evaluate([F(3, 2), F(-2, 5)]))
    assert evaluate_numeric(sym, point)[0].real == pytest.approx(exact)


def test_first_two_variable_pair_is_orthogonal():
    params = _grassmann_params(4, 2)
    cfg = default_config(2)
    p10 = koornwinder((1, 0), params)
    p00 = koornwinder((0, 0), params)
    assert abs(torus_inner(p10.coeffs, p00.coeffs, params, cfg)) < 1e-8


def test_single_zero_weight_gram_is_positive():
    params = _grassmann_params(4, 1)
    matrix = gram([(0,)], params, QuadratureConfig(truncation=40, grid=64))
    assert matrix.shape == (1, 1)
    assert matrix[0, 0] > 0


ACCEPTANCE_CASES = [(4, 1), (5, 1), (4, 2), (5, 2)]


@pytest.mark.parametrize("n, l", ACCEPTANCE_CASES)
def test_gram_is_diagonal_and_self_converged(n, l):  # noqa: E741
    params = _grassmann_params(n, l)
    service = OrthogonalityService(default_config(l))
    polys = [koornwinder(lam, params) for lam in dominant_weights_of_size(l, 3)]
    result, report = service.convergence_report(polys, params)
    assert result.max_offdiag() < 1e-8
    assert np.all(np.diag(result.matrix) > 0)
    assert report.final_delta < 1e-10
    assert [step.grid for step in report.steps] == [64, 128]
    assert result.skipped_points == 0


def test_offdiagonal_decay_over_three_doublings():
    params = _grassmann_params(4, 1)
    service = OrthogonalityService(QuadratureConfig(truncation=8, grid=16))
    polys = [koornwinder((k,), params) for k in range(4)]
    _, report = service.convergence_report(polys, params, doublings=3)
    decay = [step.max_offdiag for step in report.steps]
    assert [step.truncation for step in report.steps] == [8, 16, 32, 64]
    assert [step.grid for step in report.steps] == [16, 32, 64, 128]
    # Below 1e-12 the entries are rounding noise.
    for coarse, fine in zip(decay, decay[1:]):
        assert fine <= coarse or fine < 1e-12
    assert decay[0] > decay[-1]
    assert decay[-1] < 1e-8
    deltas = [step.max_delta for step in report.steps[1:]]
    assert deltas[-1] < deltas[0]


@pytest.mark.parametrize(
    "n, l, f_lam, g_lam",
    [(4, 1, (1,), (2,)), (4, 1, (0,), (3,)), (5, 2, (1, 0), (2, 1))],
)
def test_operator_is_symmetric_for_the_weight(n, l, f_lam, g_lam):  # noqa: E741
    params = _grassmann_params(n, l)
    cfg = default_config(l)
    operator = QDifferenceOperator(params)
    f = SymmetricPoly.basis_element(f_lam)
    g = SymmetricPoly.basis_element(g_lam)
    left = torus_inner(operator.apply(f), g, params, cfg)
    right = torus_inner(f, operator.apply(g), params, cfg)
    assert abs(left - right) < 1e-6


def test_extended_precision_agrees_with_double():
    params = _grassmann_params(4, 1)
    polys = [koornwinder((k,), params) for k in range(3)]
    double = OrthogonalityService(QuadratureConfig(40, 64)).gram_of_polys(polys)
    extended = OrthogonalityService(
        QuadratureConfig(40, 64, precision="extended")
    ).gram_of_polys(polys)
    assert np.allclose(double.matrix, extended.matrix, atol=1e-12)


def test_grid_weight_with_zero_truncation_is_one():
    points, values, mask = grid_weight(1, _trivial(), QuadratureConfig(0, 8))
    assert points.shape == (8, 1)
    assert np.all(values == 1)
    assert mask.all()


def test_weight_plus_reports_pole_off_the_torus():
    p = NumericParams(q=0.5, t=0.3, a=0.5, b=0.0, c=0.0, d=0.0)
    with pytest.raises(DegeneratePointError):
        weight_plus([2.0], p, 5)


def test_extended_precision_builds_long_double_nodes_and_params():
    points = torus_grid(1, 8, dtype=np.clongdouble)
    assert points.dtype == np.clongdouble
    assert np.max(np.abs(points[:, 0] ** 8 - 1)) < 1e-14
    params = _grassmann_params(4, 1)
    assert isinstance(_numeric(params, np.clongdouble).a, np.longdouble)
    assert isinstance(_numeric(params).a, float)
    cfg = QuadratureConfig(truncation=40, grid=16, precision="extended")
    points, values, mask = grid_weight(1, params, cfg)
    assert points.dtype == np.clongdouble
    assert values.dtype == np.clongdouble
    assert mask.all()
