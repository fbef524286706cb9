"""
Argument parsing and job-configuration loading for the command line.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from src.exceptions import UsageError
from src.schemas import FORMATS, JobConfig

# Flags whose value is None when absent, so config-file values survive.
_OPTIONAL_FLAGS = (
    "l",
    "q",
    "t",
    "a",
    "b",
    "c",
    "d",
    "n",
    "s",
    "u",
    "trunc",
    "grid",
    "precision",
    "doublings",
    "max_size",
    "out",
    "cache",
    "format",
)


_RATIONAL_FLAGS = frozenset(f"--{name}" for name in "qtabcdsu")
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+|\.\d+)?$")


def attach_negative_values(argv: Sequence[str]) -> List[str]:
    """
    Rewrite `--b -1/7` as `--b=-1/7`; argparse reads a leading minus
    followed by a slash as an option.
    """

    tokens = list(argv)
    joined: List[str] = []
    i = 0
    while i < len(tokens):
        token = tokens[i]
        following = tokens[i + 1] if i + 1 < len(tokens) else None
        if (
            token in _RATIONAL_FLAGS
            and following is not None
            and _NEGATIVE_RATIONAL.match(following)
        ):
            joined.append(f"{token}={following}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


def parse_weight(text: str) -> List[int]:
    """'2,1,0' -> [2, 1, 0]."""

    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"weights are comma-separated integers, got {text!r}"
        ) from exc


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="TOML or JSON job file")
    common.add_argument("--l", dest="l", type=int, help="number of variables")
    common.add_argument(
        "--lambda",
        dest="lambdas",
        type=parse_weight,
        action="append",
        help="dominant weight as a comma list; repeatable",
    )
    common.add_argument(
        "--max-size",
        dest="max_size",
        type=int,
        help="use every dominant weight with |λ| up to this size",
    )
    for name in ("q", "t", "a", "b", "c", "d"):
        common.add_argument(f"--{name}", help=f"parameter {name} as p/q")
    common.add_argument("--n", type=int, help="dimension n of the Grassmannian")
    common.add_argument("--s", help="s = q^σ as p/q")
    common.add_argument("--u", help="u = q^τ as p/q")
    common.add_argument("--trunc", type=int, help="q-product truncation N")
    common.add_argument("--grid", type=int, help="grid points M per dimension")
    common.add_argument("--precision", choices=("double", "extended"))
    common.add_argument(
        "--doublings", type=int, help="self-convergence doublings of N and M"
    )
    common.add_argument("--out", type=Path, help="write the report here")
    common.add_argument("--cache", type=Path, help="polynomial cache directory")
    common.add_argument("--format", choices=FORMATS)
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="koornwinder",
        description="Exact Koornwinder polynomials and their verification checks.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()
    subparsers.add_parser(
        "poly", parents=[common], help="build P_λ and verify the eigen-equation"
    )
    subparsers.add_parser(
        "spectrum", parents=[common], help="compare operator diagonals"
    )
    subparsers.add_parser(
        "gram", parents=[common], help="numeric Gram matrix on the torus"
    )
    subparsers.add_parser(
        "reflect", parents=[common], help="reflection-equation checks"
    )
    grassmann = subparsers.add_parser(
        "grassmann", parents=[common], help="Grassmannian spectral bridge"
    )
    grassmann.add_argument(
        "--restrict",
        action="store_true",
        default=None,
        help="also emit the restricted spherical polynomials",
    )
    return parser


def read_config_file(path: Path) -> Dict[str, Any]:
    """Load a TOML or JSON job file into a flat dict."""

    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    try:
        if path.suffix.lower() == ".json":
            data = json.loads(raw.decode("utf-8"))
        else:
            data = tomllib.loads(raw.decode("utf-8"))
    except (ValueError, UnicodeDecodeError) as exc:
        raise UsageError(f"invalid config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"config file {path} must hold a table/object")
    if "lambda" in data:
        data["lambdas"] = data.pop("lambda")
    return data


def load_job(argv: Optional[Sequence[str]] = None) -> JobConfig:
    """
    Parse argv, layer flags over an optional config file and validate.

    Raises:
        UsageError: for unreadable config files or invalid values.
    """

    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(attach_negative_values(argv))
    merged: Dict[str, Any] = {}
    if args.config is not None:
        merged.update(read_config_file(args.config))
    for name in _OPTIONAL_FLAGS + ("restrict",):
        value = getattr(args, name, None)
        if value is not None:
            merged[name] = value
    if args.lambdas:
        merged["lambdas"] = args.lambdas
    merged["command"] = args.command
    try:
        return JobConfig(**merged)
    except ValidationError as exc:
        raise UsageError(f"invalid job configuration: {exc}") from exc
