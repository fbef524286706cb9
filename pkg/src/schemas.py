"""
Pydantic schemas for every JSON surface: polynomials, cache entries, reports
and the validated job configuration.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.algebra.rational import format_rational, parse_rational
from src.models import PARAM_NAMES, KoornwinderPoly, ParamSet
from src.weights.dominance import make_weight
from src.weights.orbits import SymmetricPoly

CACHE_VERSION = "1"

# Check tags carried by every report.
TAG_EIGEN = "koornwinder:eigenfunction"
TAG_DIAGONAL = "koornwinder:diagonal"
TAG_ORTHOGONALITY = "koornwinder:orthogonality"
TAG_REFLECTION = "reflection:equation"
TAG_YANG_BAXTER = "reflection:yang-baxter"
TAG_HECKE = "reflection:hecke"
TAG_PARAM_MAP = "grassmann:parameter-map"
TAG_CASIMIR = "grassmann:casimir"


class APIModel(BaseModel):
    class Config:
        from_attributes = True
        populate_by_name = True


def _rational_text(value: object) -> str:
    # Config files may carry decimals as floats; read them by their shortest repr.
    if isinstance(value, float):
        value = repr(value)
    return format_rational(parse_rational(value))


# Polynomial Schemas
class ParamSetModel(APIModel):
    q: str
    t: str
    a: str
    b: str
    c: str
    d: str

    @field_validator("q", "t", "a", "b", "c", "d", mode="before")
    @classmethod
    def _canonical(cls, value: object) -> str:
        return _rational_text(value)

    @classmethod
    def from_params(cls, params: ParamSet) -> "ParamSetModel":
        return cls(**{k: format_rational(v) for k, v in params.as_dict().items()})

    def to_params(self, checked: bool = True) -> ParamSet:
        return ParamSet(
            *(parse_rational(getattr(self, name)) for name in PARAM_NAMES),
            checked=checked,
        )


class CoefficientModel(APIModel):
    mu: List[int]
    c: str

    @field_validator("c", mode="before")
    @classmethod
    def _canonical(cls, value: object) -> str:
        return _rational_text(value)


class PolynomialModel(APIModel):
    lam: List[int] = Field(alias="lambda")
    params: ParamSetModel
    coeffs: List[CoefficientModel]

    @classmethod
    def from_poly(cls, poly: KoornwinderPoly) -> "PolynomialModel":
        return cls(
            lam=list(poly.lam),
            params=ParamSetModel.from_params(poly.params),
            coeffs=[
                CoefficientModel(mu=list(mu), c=format_rational(c))
                for mu, c in poly.coeffs.items()
            ],
        )

    def to_poly(self) -> KoornwinderPoly:
        lam = make_weight(self.lam)
        coeffs = {
            make_weight(entry.mu): parse_rational(entry.c) for entry in self.coeffs
        }
        return KoornwinderPoly(
            lam=lam,
            params=self.params.to_params(checked=False),
            coeffs=SymmetricPoly(len(lam), coeffs),
        )


class CacheEntryModel(APIModel):
    version: str = CACHE_VERSION
    key: str
    polynomial: PolynomialModel


# Report Schemas
class ReportModel(APIModel):
    equations: List[str]
    passed: bool


class PolyEntry(APIModel):
    polynomial: PolynomialModel
    eigenvalue: str
    residual_zero: bool


class PolyReport(ReportModel):
    entries: List[PolyEntry]


class SpectrumRow(APIModel):
    lam: List[int] = Field(alias="lambda")
    diagonal: str
    eigenvalue: str
    matches: bool


class SpectrumReport(ReportModel):
    params: ParamSetModel
    boundary: bool
    rows: List[SpectrumRow]


class ConvergenceStepModel(APIModel):
    N: int
    M: int
    max_offdiag: float
    skipped_points: int
    max_delta: Optional[float] = None


class GramReport(ReportModel):
    weights: List[List[int]]
    params: ParamSetModel
    N: int
    M: int
    matrix: List[List[float]]
    max_offdiag: float
    skipped_points: int
    convergence: List[ConvergenceStepModel]


class ReflectionReport(ReportModel):
    n: int
    l: int  # noqa: E741
    q: str
    s: str
    residual_max: str
    yang_baxter_max: str
    hecke_max: str
    symmetric: bool
    J: List[List[str]]


class RadialRowModel(APIModel):
    mu: List[int]
    eigenvalue: str
    casimir_shift: str
    matches: bool


class GrassmannReport(ReportModel):
    n: int
    l: int  # noqa: E741
    q: str
    s: str
    u: str
    params: ParamSetModel
    base: str
    abcd: str
    params_valid: bool
    kappa: Optional[str] = None
    unit_kappa: bool
    rows: List[RadialRowModel]
    polynomials: List[PolynomialModel] = Field(default_factory=list)


# Job configuration
FORMATS = ("json", "csv", "pretty")


class JobConfig(APIModel):
    """Merged command-line and config-file options for one subcommand."""

    command: str
    l: Optional[int] = Field(default=None, ge=1)  # noqa: E741
    lambdas: List[List[int]] = Field(default_factory=list)
    q: Optional[str] = None
    t: Optional[str] = None
    a: Optional[str] = None
    b: Optional[str] = None
    c: Optional[str] = None
    d: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=2)
    s: Optional[str] = None
    u: Optional[str] = None
    trunc: Optional[int] = Field(default=None, ge=0)
    grid: Optional[int] = Field(default=None, ge=4)
    precision: str = "double"
    doublings: int = Field(default=1, ge=0)
    max_size: Optional[int] = Field(default=None, ge=0)
    out: Optional[Path] = None
    cache: Optional[Path] = None
    format: str = "json"
    restrict: bool = False

    @field_validator("q", "t", "a", "b", "c", "d", "s", "u", mode="before")
    @classmethod
    def _rational(cls, value: object) -> Optional[str]:
        if value is None:
            return None
        return _rational_text(value)

    @field_validator("format")
    @classmethod
    def _format(cls, value: str) -> str:
        if value not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        return value

    @field_validator("lambdas")
    @classmethod
    def _dominant(cls, value: List[List[int]]) -> List[List[int]]:
        return [list(make_weight(lam)) for lam in value]

    @model_validator(mode="after")
    def _consistent_lengths(self) -> "JobConfig":
        lengths = {len(lam) for lam in self.lambdas}
        if len(lengths) > 1:
            raise ValueError(f"weights of mixed length {sorted(lengths)}")
        if self.l is not None and lengths and lengths != {self.l}:
            raise ValueError(f"weights do not have length l = {self.l}")
        return self

    def rational(self, name: str) -> Optional[Fraction]:
        value = getattr(self, name)
        return None if value is None else parse_rational(value)
