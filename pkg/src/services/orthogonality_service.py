"""
Numeric orthogonality checks on the compact torus.

The weight is the truncated infinite product Δ(x) = Δ+(x) Δ+(1/x); integrals
against normalized Haar measure are approximated by the average over the
product grid of M-th roots of unity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.algebra.qseries import qpoch_truncated
from src.exceptions import DegeneratePointError, DimensionError
from src.logger import get_logger
from src.models import (
    PARAM_NAMES,
    KoornwinderPoly,
    NumericParams,
    ParamSet,
    QuadratureConfig,
)
from src.services.koornwinder_service import koornwinder
from src.weights.orbits import SymmetricPoly

ParamsLike = Union[NumericParams, ParamSet]

DEGENERATE_TOL = np.finfo(np.float64).eps


def _as_real(value, dtype=np.complex128):
    real = np.finfo(dtype).dtype.type
    if isinstance(value, Fraction):
        return real(value.numerator) / real(value.denominator)
    return real(value)


def _numeric(p: ParamsLike, dtype=np.complex128) -> NumericParams:
    if not isinstance(p, ParamSet):
        return p
    if dtype == np.complex128:
        return p.to_numeric()
    return NumericParams(
        **{name: _as_real(getattr(p, name), dtype) for name in PARAM_NAMES}
    )


def _dtype(cfg: Optional[QuadratureConfig]):
    if cfg is not None and cfg.precision == "extended":
        return np.clongdouble
    return np.complex128


def _weight_plus_parts(
    x: np.ndarray, p: NumericParams, terms: int, dtype
) -> Tuple[np.ndarray, np.ndarray]:
    """Numerator and denominator of the truncated Δ+ at points x[..., l]."""

    x = np.asarray(x, dtype=dtype)
    num = np.ones(x.shape[:-1], dtype=dtype)
    den = np.ones(x.shape[:-1], dtype=dtype)
    size = x.shape[-1]
    for i in range(size):
        xi = x[..., i]
        num *= qpoch_truncated(xi * xi, p.q, terms, dtype)
        for param in (p.a, p.b, p.c, p.d):
            den *= qpoch_truncated(param * xi, p.q, terms, dtype)
        for j in range(i + 1, size):
            xj = x[..., j]
            num *= qpoch_truncated(xi / xj, p.q, terms, dtype)
            num *= qpoch_truncated(xi * xj, p.q, terms, dtype)
            den *= qpoch_truncated(p.t * xi / xj, p.q, terms, dtype)
            den *= qpoch_truncated(p.t * xi * xj, p.q, terms, dtype)
    return num, den


def weight_plus(
    x: Sequence[complex], p: ParamsLike, terms: int, dtype=np.complex128
) -> complex:
    """
    Truncated Δ+ at a single torus point.

    Raises:
        DegeneratePointError: if a truncated denominator is numerically zero.
    """

    point = np.asarray(x, dtype=dtype)[np.newaxis, :]
    num, den = _weight_plus_parts(point, _numeric(p, dtype), terms, dtype)
    if abs(den[0]) <= DEGENERATE_TOL:
        raise DegeneratePointError(f"truncated weight has a pole at {x}")
    return complex(num[0] / den[0])


def weight(
    x: Sequence[complex], p: ParamsLike, terms: int, dtype=np.complex128
) -> float:
    """Δ(x) = Δ+(x) Δ+(1/x); real and nonnegative on the torus."""

    point = np.asarray(x, dtype=dtype)
    value = weight_plus(point, p, terms, dtype) * weight_plus(
        1 / point, p, terms, dtype
    )
    return float(value.real)


def torus_grid(
    nvars: int, grid: int, offset: float = 0.0, dtype=np.complex128
) -> np.ndarray:
    """Product grid of M-th roots of unity, shape (M**l, l)."""

    real = np.finfo(dtype).dtype.type
    angles = 8 * np.arctan(real(1)) * (np.arange(grid, dtype=real) + real(offset))
    angles /= grid
    roots = np.empty(grid, dtype=dtype)
    roots.real = np.cos(angles)
    roots.imag = np.sin(angles)
    mesh = np.meshgrid(*([roots] * nvars), indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=-1)


def evaluate_numeric(f: SymmetricPoly, points: np.ndarray) -> np.ndarray:
    """Evaluate a symmetric polynomial at complex points[..., l]."""

    if points.shape[-1] != f.nvars:
        raise DimensionError(
            f"points have {points.shape[-1]} coordinates, expected {f.nvars}"
        )
    values = np.zeros(points.shape[:-1], dtype=points.dtype)
    for exponent, coeff in f.to_laurent().items():
        values += _as_real(coeff, points.dtype) * np.prod(
            points ** np.asarray(exponent), axis=-1
        )
    return values


def grid_weight(
    nvars: int, p: ParamsLike, cfg: QuadratureConfig
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Grid points, weight values and a mask of usable points.
    """

    dtype = _dtype(cfg)
    points = torus_grid(nvars, cfg.grid, dtype=dtype)
    if cfg.truncation == 0:
        ones = np.ones(points.shape[0], dtype=dtype)
        return points, ones, np.ones(points.shape[0], dtype=bool)
    p = _numeric(p, dtype)
    num_x, den_x = _weight_plus_parts(points, p, cfg.truncation, dtype)
    num_inv, den_inv = _weight_plus_parts(1 / points, p, cfg.truncation, dtype)
    mask = (np.abs(den_x) > DEGENERATE_TOL) & (np.abs(den_inv) > DEGENERATE_TOL)
    values = np.zeros(points.shape[0], dtype=dtype)
    values[mask] = (num_x[mask] / den_x[mask]) * (num_inv[mask] / den_inv[mask])
    return points, values, mask


def _average(values: np.ndarray, mask: np.ndarray) -> complex:
    # np.sum reduces pairwise, so the result is reproducible for a fixed grid.
    return complex(np.sum(values[mask]) / np.count_nonzero(mask))


@dataclass
class GramResult:
    weights: List[Tuple[int, ...]]
    matrix: np.ndarray
    skipped_points: int
    config: QuadratureConfig

    def max_offdiag(self) -> float:
        """Largest |G_λμ| / sqrt(G_λλ G_μμ) over λ ≠ μ."""

        size = len(self.weights)
        if size < 2:
            return 0.0
        diag = np.sqrt(np.abs(np.diag(self.matrix)))
        scaled = np.abs(self.matrix) / np.outer(diag, diag)
        np.fill_diagonal(scaled, 0.0)
        return float(scaled.max())


@dataclass
class ConvergenceStep:
    truncation: int
    grid: int
    max_offdiag: float
    skipped_points: int
    max_delta: Optional[float] = None


@dataclass
class ConvergenceReport:
    steps: List[ConvergenceStep] = field(default_factory=list)

    @property
    def final_delta(self) -> Optional[float]:
        return self.steps[-1].max_delta if self.steps else None


class OrthogonalityService:
    """Quadrature of inner products and Gram matrices against Δ."""

    def __init__(self, config: Optional[QuadratureConfig] = None) -> None:
        self.config = config or QuadratureConfig()
        self.logger = get_logger(self.__class__.__name__)

    def torus_inner(
        self,
        f: SymmetricPoly,
        g: SymmetricPoly,
        p: ParamsLike,
        cfg: Optional[QuadratureConfig] = None,
    ) -> float:
        """∫ f(x) g(1/x) Δ(x) dx with Haar measure of total mass one."""

        cfg = cfg or self.config
        if f.nvars != g.nvars:
            raise DimensionError("inner product of different variable counts")
        points, w, mask = grid_weight(f.nvars, p, cfg)
        skipped = int(mask.size - np.count_nonzero(mask))
        if skipped:
            self.logger.warning(
                "Skipped %s degenerate grid point(s) of %s", skipped, mask.size
            )
        values = evaluate_numeric(f, points) * evaluate_numeric(g, 1 / points) * w
        return _average(values, mask).real

    def gram_of_polys(
        self,
        polys: Sequence[KoornwinderPoly],
        p: Optional[ParamsLike] = None,
        cfg: Optional[QuadratureConfig] = None,
    ) -> GramResult:
        """Matrix of torus inner products of the given polynomials."""

        cfg = cfg or self.config
        if not polys:
            raise DimensionError("gram needs at least one polynomial")
        nvars = polys[0].nvars
        if any(poly.nvars != nvars for poly in polys):
            raise DimensionError("all polynomials must share the same l")
        p = p or polys[0].params
        points, w, mask = grid_weight(nvars, p, cfg)
        skipped = int(mask.size - np.count_nonzero(mask))
        if skipped:
            self.logger.warning(
                "Skipped %s degenerate grid point(s) of %s", skipped, mask.size
            )
        direct = [evaluate_numeric(poly.coeffs, points) * w for poly in polys]
        inverse = [evaluate_numeric(poly.coeffs, 1 / points) for poly in polys]
        size = len(polys)
        matrix = np.zeros((size, size), dtype=np.float64)
        for i in range(size):
            for j in range(size):
                matrix[i, j] = _average(direct[i] * inverse[j], mask).real
        self.logger.debug(
            "Gram matrix of size %s at N=%s M=%s", size, cfg.truncation, cfg.grid
        )
        return GramResult(
            weights=[poly.lam for poly in polys],
            matrix=matrix,
            skipped_points=skipped,
            config=cfg,
        )

    def gram(
        self,
        lams: Sequence[Sequence[int]],
        p: ParamSet,
        cfg: Optional[QuadratureConfig] = None,
        builder: Callable[[Sequence[int], ParamSet], KoornwinderPoly] = koornwinder,
    ) -> GramResult:
        """Build P_λ exactly for each weight, then integrate numerically."""

        polys = [builder(lam, p) for lam in lams]
        return self.gram_of_polys(polys, p, cfg)

    def convergence_report(
        self,
        polys: Sequence[KoornwinderPoly],
        p: Optional[ParamsLike] = None,
        cfg: Optional[QuadratureConfig] = None,
        doublings: int = 1,
    ) -> Tuple[GramResult, ConvergenceReport]:
        """
        Gram matrices at cfg and after each doubling of N and M.

        Returns the Gram matrix at cfg and the per-level report; max_delta is
        the largest entrywise change against the previous level.
        """

        cfg = cfg or self.config
        report = ConvergenceReport()
        first: Optional[GramResult] = None
        previous: Optional[np.ndarray] = None
        level = cfg
        for _ in range(doublings + 1):
            result = self.gram_of_polys(polys, p, level)
            delta = None
            if previous is not None:
                delta = float(np.max(np.abs(result.matrix - previous)))
            report.steps.append(
                ConvergenceStep(
                    truncation=level.truncation,
                    grid=level.grid,
                    max_offdiag=result.max_offdiag(),
                    skipped_points=result.skipped_points,
                    max_delta=delta,
                )
            )
            first = first or result
            previous = result.matrix
            level = level.doubled()
        return first, report


def torus_inner(
    f: SymmetricPoly,
    g: SymmetricPoly,
    p: ParamsLike,
    cfg: Optional[QuadratureConfig] = None,
) -> float:
    return OrthogonalityService(cfg).torus_inner(f, g, p)


def gram(
    lams: Sequence[Sequence[int]],
    p: ParamSet,
    cfg: Optional[QuadratureConfig] = None,
) -> np.ndarray:
    return OrthogonalityService(cfg).gram(lams, p).matrix


def default_config(nvars: int, truncation: int = 40) -> QuadratureConfig:
    """N = 40 with M = 64 per dimension for l <= 2 and M = 32 for l = 3."""

    return QuadratureConfig(truncation=truncation, grid=64 if nvars <= 2 else 32)

