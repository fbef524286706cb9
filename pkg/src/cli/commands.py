"""
Subcommand handlers. Each returns a report model and its exit status.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from src.algebra.rational import format_rational
from src.config import get_settings
from src.exceptions import CacheError, DimensionError, ParameterError, UsageError
from src.logger import get_logger
from src.models import GrassmannSetup, KoornwinderPoly, ParamSet, QuadratureConfig
from src.repository.poly_cache_repo import PolynomialCacheRepository
from src.schemas import (
    TAG_CASIMIR,
    TAG_DIAGONAL,
    TAG_EIGEN,
    TAG_HECKE,
    TAG_ORTHOGONALITY,
    TAG_PARAM_MAP,
    TAG_REFLECTION,
    TAG_YANG_BAXTER,
    ConvergenceStepModel,
    GramReport,
    GrassmannReport,
    JobConfig,
    ParamSetModel,
    PolyEntry,
    PolynomialModel,
    PolyReport,
    RadialRowModel,
    ReflectionReport,
    SpectrumReport,
    SpectrumRow,
)
from src.services.grassmann_service import GrassmannService, param_map
from src.services.koornwinder_service import koornwinder, verify_eigen
from src.services.orthogonality_service import OrthogonalityService, default_config
from src.services.qdifference_service import QDifferenceOperator, eigenvalue_c
from src.services.reflection_service import ReflectionService
from src.weights.dominance import (
    DominantWeight,
    dominant_weights_of_size,
    make_weight,
)
from src.weights.orbits import SymmetricPoly

logger = get_logger("cli")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

OFFDIAG_TOL = 1e-8
DELTA_TOL = 1e-10


# ---------------------------------------------------------------------- #
# Job resolution
# ---------------------------------------------------------------------- #
def _require(job: JobConfig, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(job, name) is None]
    if missing:
        raise UsageError(f"{job.command} needs {', '.join(missing)}")


def grassmann_setup(job: JobConfig) -> GrassmannSetup:
    _require(job, "n", "l", "q")
    try:
        return GrassmannSetup(
            n=job.n,
            l=job.l,
            q=job.rational("q"),
            s=Fraction(1) if job.s is None else job.rational("s"),
            u=Fraction(1) if job.u is None else job.rational("u"),
        )
    except ParameterError as exc:
        raise UsageError(str(exc)) from exc


def resolve_params(job: JobConfig) -> ParamSet:
    """
    Explicit (q, t, a, b, c, d), or the Grassmannian parameter map when --n
    is given and a, b, c, d are not.
    """

    explicit = ("q", "t", "a", "b", "c", "d")
    if job.n is not None and all(getattr(job, k) is None for k in "abcd"):
        return param_map(grassmann_setup(job))
    _require(job, *explicit)
    try:
        return ParamSet(*(job.rational(name) for name in explicit))
    except ParameterError as exc:
        raise UsageError(f"invalid parameters: {exc}") from exc


def resolve_weights(job: JobConfig) -> List[DominantWeight]:
    if job.lambdas:
        return [make_weight(lam) for lam in job.lambdas]
    if job.l is not None and job.max_size is not None:
        return dominant_weights_of_size(job.l, job.max_size)
    raise UsageError(f"{job.command} needs --lambda or both --l and --max-size")


def cache_repository(job: JobConfig) -> Optional[PolynomialCacheRepository]:
    """KOORN_CACHE wins over --cache."""

    root = get_settings().cache_dir or job.cache
    return PolynomialCacheRepository(Path(root)) if root else None


def quadrature_config(job: JobConfig, nvars: int) -> QuadratureConfig:
    """Flags, then KOORN_TRUNCATION / KOORN_GRID, then the per-rank default."""

    settings = get_settings()
    grid = job.grid if job.grid is not None else settings.grid
    try:
        return QuadratureConfig(
            truncation=settings.truncation if job.trunc is None else job.trunc,
            grid=default_config(nvars).grid if grid is None else grid,
            precision=job.precision,
        )
    except ParameterError as exc:
        raise UsageError(str(exc)) from exc


class PolynomialProvider:
    """Builds P_λ once per run, reading and filling the cache."""

    def __init__(
        self, params: ParamSet, repo: Optional[PolynomialCacheRepository]
    ) -> None:
        self.params = params
        self.repo = repo
        self.operator = QDifferenceOperator(params)
        self.logger = get_logger(self.__class__.__name__)

    def residual_is_zero(self, poly: KoornwinderPoly) -> bool:
        return verify_eigen(poly, self.operator).is_zero()

    def __call__(self, lam: Sequence[int], params: ParamSet) -> KoornwinderPoly:
        lam = make_weight(lam)
        if self.repo is not None:
            cached = self.repo.get(lam, params)
            if cached is not None:
                if self.residual_is_zero(cached):
                    return cached
                self.logger.warning(
                    "Cached P_%s fails the eigen check; recomputing", list(lam)
                )
        poly = koornwinder(lam, params, self.operator)
        if self.repo is not None:
            try:
                self.repo.put(poly)
            except CacheError as exc:
                self.logger.warning(
                    "Disabling cache at %s for this run: %s", self.repo.root, exc
                )
                self.repo = None
        return poly


# ---------------------------------------------------------------------- #
# Subcommands
# ---------------------------------------------------------------------- #
def cmd_poly(job: JobConfig) -> Tuple[PolyReport, int]:
    params = resolve_params(job)
    weights = resolve_weights(job)
    provider = PolynomialProvider(params, cache_repository(job))
    entries = []
    for lam in weights:
        poly = provider(lam, params)
        zero = provider.residual_is_zero(poly)
        if not zero:
            logger.error("P_%s does not satisfy the eigen-equation", list(lam))
        entries.append(
            PolyEntry(
                polynomial=PolynomialModel.from_poly(poly),
                eigenvalue=format_rational(eigenvalue_c(lam, params)),
                residual_zero=zero,
            )
        )
    passed = all(entry.residual_zero for entry in entries)
    report = PolyReport(equations=[TAG_EIGEN], passed=passed, entries=entries)
    return report, EXIT_PASS if passed else EXIT_FAIL


def cmd_spectrum(job: JobConfig) -> Tuple[SpectrumReport, int]:
    params = resolve_params(job)
    weights = resolve_weights(job)
    operator = QDifferenceOperator(params)
    rows = []
    for lam in weights:
        image = operator.apply(SymmetricPoly.basis_element(lam))
        diagonal = image.coefficient(lam)
        expected = eigenvalue_c(lam, params)
        rows.append(
            SpectrumRow(
                lam=list(lam),
                diagonal=format_rational(diagonal),
                eigenvalue=format_rational(expected),
                matches=diagonal == expected,
            )
        )
    passed = all(row.matches for row in rows)
    report = SpectrumReport(
        equations=[TAG_DIAGONAL],
        passed=passed,
        params=ParamSetModel.from_params(params),
        boundary=params.is_boundary(),
        rows=rows,
    )
    return report, EXIT_PASS if passed else EXIT_FAIL


def cmd_gram(job: JobConfig) -> Tuple[GramReport, int]:
    params = resolve_params(job)
    if not params.is_orthogonality_grade():
        raise UsageError("gram needs |a|, |b|, |c|, |d| < 1")
    weights = resolve_weights(job)
    if len({len(lam) for lam in weights}) != 1:
        raise UsageError("all weights must have the same length l")
    cfg = quadrature_config(job, len(weights[0]))
    service = OrthogonalityService(cfg)
    provider = PolynomialProvider(params, cache_repository(job))
    polys = [provider(lam, params) for lam in weights]
    try:
        result, convergence = service.convergence_report(
            polys, params, cfg, doublings=job.doublings
        )
    except DimensionError as exc:
        raise UsageError(str(exc)) from exc
    max_offdiag = result.max_offdiag()
    delta = convergence.final_delta
    passed = max_offdiag < OFFDIAG_TOL and (delta is None or delta < DELTA_TOL)
    report = GramReport(
        equations=[TAG_ORTHOGONALITY],
        passed=passed,
        weights=[list(lam) for lam in weights],
        params=ParamSetModel.from_params(params),
        N=cfg.truncation,
        M=cfg.grid,
        matrix=result.matrix.tolist(),
        max_offdiag=max_offdiag,
        skipped_points=result.skipped_points,
        convergence=[
            ConvergenceStepModel(
                N=step.truncation,
                M=step.grid,
                max_offdiag=step.max_offdiag,
                skipped_points=step.skipped_points,
                max_delta=step.max_delta,
            )
            for step in convergence.steps
        ],
    )
    return report, EXIT_PASS if passed else EXIT_FAIL


def cmd_reflect(job: JobConfig) -> Tuple[ReflectionReport, int]:
    _require(job, "n", "l", "s", "q")
    try:
        check = ReflectionService().check(
            job.n, job.l, job.rational("s"), job.rational("q")
        )
    except ParameterError as exc:
        raise UsageError(str(exc)) from exc
    report = ReflectionReport(
        equations=[TAG_REFLECTION, TAG_YANG_BAXTER, TAG_HECKE],
        passed=check.passed,
        n=check.n,
        l=check.l,
        q=format_rational(check.q),
        s=format_rational(check.s),
        residual_max=format_rational(check.residual_max),
        yang_baxter_max=format_rational(check.yang_baxter_max),
        hecke_max=format_rational(check.hecke_max),
        symmetric=check.symmetric,
        J=[[format_rational(v) for v in row] for row in check.j_matrix.to_rows()],
    )
    return report, EXIT_PASS if check.passed else EXIT_FAIL


def cmd_grassmann(job: JobConfig) -> Tuple[GrassmannReport, int]:
    setup = grassmann_setup(job)
    if job.lambdas:
        mus = resolve_weights(job)
    else:
        mus = dominant_weights_of_size(
            setup.l, 3 if job.max_size is None else job.max_size
        )
    radial = GrassmannService().radial_consistency(mus, setup)
    params = radial.params
    expected_abcd = setup.q ** (4 + 2 * (setup.n - 2 * setup.l))
    params_valid = params.is_valid() and params.abcd == expected_abcd
    polynomials = []
    if job.restrict:
        provider = PolynomialProvider(params, cache_repository(job))
        polynomials = [
            PolynomialModel.from_poly(provider(mu, params)) for mu in mus
        ]
    passed = radial.passed and params_valid
    report = GrassmannReport(
        equations=[TAG_PARAM_MAP, TAG_CASIMIR],
        passed=passed,
        n=setup.n,
        l=setup.l,
        q=format_rational(setup.q),
        s=format_rational(setup.s),
        u=format_rational(setup.u),
        params=ParamSetModel.from_params(params),
        base=format_rational(params.q),
        abcd=format_rational(params.abcd),
        params_valid=params_valid,
        kappa=None if radial.kappa is None else format_rational(radial.kappa),
        unit_kappa=radial.unit_kappa,
        rows=[
            RadialRowModel(
                mu=list(row.mu),
                eigenvalue=format_rational(row.eigenvalue),
                casimir_shift=format_rational(row.casimir_shift),
                matches=row.matches,
            )
            for row in radial.rows
        ],
        polynomials=polynomials,
    )
    return report, EXIT_PASS if passed else EXIT_FAIL


COMMAND_HANDLERS = {
    "poly": cmd_poly,
    "spectrum": cmd_spectrum,
    "gram": cmd_gram,
    "reflect": cmd_reflect,
    "grassmann": cmd_grassmann,
}
