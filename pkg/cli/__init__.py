"""Command-line surface: run configuration, dispatch and reports."""

from cli.config import COMMANDS, FORMATS, RunConfig, build_parser, load_run_config
from cli.report import ARTIFACT_VERSION, SCHEMA_VERSION, CheckRecord, Report, ReportWriter, render_structured, render_text
from cli.runner import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK, EXIT_RESOURCE_CAP, run

__all__ = [
    "ARTIFACT_VERSION",
    "COMMANDS",
    "EXIT_CHECK_FAILED",
    "EXIT_INPUT_ERROR",
    "EXIT_OK",
    "EXIT_RESOURCE_CAP",
    "FORMATS",
    "SCHEMA_VERSION",
    "CheckRecord",
    "Report",
    "ReportWriter",
    "RunConfig",
    "build_parser",
    "load_run_config",
    "render_structured",
    "render_text",
    "run",
]
