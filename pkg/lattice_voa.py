#!/usr/bin/env python3
"""Exact checks on lattice vertex algebras and their automorphism groups."""

import logging
import sys

from dotenv import load_dotenv

from cli import EXIT_INPUT_ERROR, EXIT_RESOURCE_CAP, ReportWriter, load_run_config, run
from lattices import ResourceCapExceeded

logger = logging.getLogger(__name__)


def main(argv: list[str] | None = None) -> int:
    load_dotenv(override=False)
    try:
        config = load_run_config(argv)
    except SystemExit as error:
        return EXIT_INPUT_ERROR if error.code else 0
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    logging.basicConfig(
        level=logging.DEBUG if config.verbose else logging.INFO,
        format="%(asctime)s - %(levelname)s - %(message)s",
    )
    try:
        report, exit_code = run(config)
    except (ValueError, FileNotFoundError) as error:
        logger.error("Invalid input: %s", error)
        return EXIT_INPUT_ERROR
    except ResourceCapExceeded as error:
        logger.error("Resource cap exceeded: %s", error)
        return EXIT_RESOURCE_CAP
    ReportWriter(config.output, format=config.format).write(report)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
