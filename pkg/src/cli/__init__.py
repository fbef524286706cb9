"""
Command-line surface: parse a job, run its subcommand, emit the report.
"""

from __future__ import annotations

import sys
from typing import Optional, Sequence, TextIO

from src.cli.commands import COMMAND_HANDLERS, EXIT_FAIL, EXIT_USAGE
from src.cli.output import emit
from src.cli.parser import load_job
from src.config import ConfigError
from src.exceptions import (
    CacheError,
    DegeneracyError,
    DegeneratePointError,
    DimensionError,
    DomainError,
    InsufficientDataError,
    InternalConsistencyError,
    InterpolationError,
    InvarianceError,
    ParameterError,
    PoleError,
    SingularMatrixError,
    UsageError,
)
from src.logger import get_logger

logger = get_logger("cli")

USAGE_ERRORS = (
    UsageError,
    ParameterError,
    ConfigError,
    DimensionError,
    DomainError,
    InsufficientDataError,
    ValueError,
)
VERIFICATION_ERRORS = (
    DegeneracyError,
    DegeneratePointError,
    InterpolationError,
    InternalConsistencyError,
    InvarianceError,
    PoleError,
    SingularMatrixError,
)


def run(
    argv: Optional[Sequence[str]] = None, stream: Optional[TextIO] = None
) -> int:
    """Exit status: 0 pass, 1 verification failure, 2 usage error."""

    stream = stream or sys.stdout
    try:
        job = load_job(argv)
        report, status = COMMAND_HANDLERS[job.command](job)
        emit(report, job.format, job.out, stream)
    except USAGE_ERRORS as exc:
        logger.error("Usage error: %s", exc)
        return EXIT_USAGE
    except VERIFICATION_ERRORS as exc:
        logger.error("Verification failed: %s", exc)
        return EXIT_FAIL
    except CacheError as exc:
        logger.error("Cache failure: %s", exc)
        return EXIT_FAIL
    verdict = "PASS" if status == 0 else "FAIL"
    logger.info("%s finished: %s", job.command, verdict)
    return status


__all__ = ["run"]
