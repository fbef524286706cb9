"""Main entry point for the Koornwinder toolkit."""

from __future__ import annotations

import sys

from src.cli import run
from src.logger import setup_logging


def main() -> int:
    setup_logging()
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
