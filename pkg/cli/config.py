"""Command-line flags and environment settings for a single run."""

from __future__ import annotations

import argparse
import os
from dataclasses import asdict, dataclass
from pathlib import Path

from coefficients import Ring, parse_ring
from lattices.groups import DEFAULT_GROUP_CAP
from vertex.suite import DEFAULT_EXHAUSTIVE_LIMIT

COMMANDS = ("analyze", "verify-axioms", "graded-dims", "aut-report", "conformal")
FORMATS = ("text", "structured")

_COMMAND_DEFAULTS = {
    "analyze": {"max_weight": 0, "max_mode": 0, "truncation": 0},
    "verify-axioms": {"max_weight": 3, "max_mode": 2, "truncation": 0},
    "graded-dims": {"max_weight": 6, "max_mode": 0, "truncation": 0},
    "aut-report": {"max_weight": 0, "max_mode": 0, "truncation": 1},
    "conformal": {"max_weight": 3, "max_mode": 2, "truncation": 0},
}


@dataclass(slots=True)
class RunConfig:
    command: str
    lattice_source: str | None
    ring_token: str
    max_weight: int
    max_mode: int
    truncation: int
    samples: int
    seed: int
    output: Path | None
    format: str
    verbose: bool
    group_cap: int
    exhaustive_limit: int
    report_timing: bool

    @property
    def ring(self) -> Ring:
        return parse_ring(self.ring_token)

    def echo(self) -> dict[str, object]:
        """Config as it appears in reports; environment-only knobs that do not change results are left out."""
        payload = asdict(self)
        payload["output"] = str(self.output) if self.output else None
        for key in ("verbose", "report_timing"):
            payload.pop(key)
        return payload


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice_voa",
        description="Exact computations on lattice vertex algebras and their automorphism groups",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        sub = subparsers.add_parser(command)
        sub.add_argument("--lattice", help="Preset name (A1, A2, A1A1, D4, E8) or path to a TOML lattice file")
        sub.add_argument("--ring", default="Q", help="Q, Z, Fp:<p> or Zn:<n>")
        sub.add_argument("--seed", type=int, default=None, help="Sampling seed (default LATTICE_VOA_SEED or 0)")
        sub.add_argument("--samples", type=int, default=0, help="0 means exhaustive below the configured limit")
        sub.add_argument("--output", help="Write the report here instead of standard output")
        sub.add_argument("--format", choices=FORMATS, default="text")
        sub.add_argument("--verbose", action="store_true")
        sub.add_argument("--max-weight", type=int, default=None)
        sub.add_argument("--max-mode", type=int, default=None)
        sub.add_argument("--truncation", type=int, default=None)
    return parser


def load_run_config(argv: list[str] | None = None, *, env: dict[str, str] | None = None) -> RunConfig:
    resolved_env = env if env is not None else os.environ
    args = build_parser().parse_args(argv)
    defaults = _COMMAND_DEFAULTS[args.command]
    seed = args.seed if args.seed is not None else int(resolved_env.get("LATTICE_VOA_SEED", "0"))
    config = RunConfig(
        command=args.command,
        lattice_source=args.lattice or resolved_env.get("LATTICE_PATH") or None,
        ring_token=args.ring.strip(),
        max_weight=args.max_weight if args.max_weight is not None else defaults["max_weight"],
        max_mode=args.max_mode if args.max_mode is not None else defaults["max_mode"],
        truncation=args.truncation if args.truncation is not None else defaults["truncation"],
        samples=args.samples,
        seed=seed,
        output=Path(args.output) if args.output else None,
        format=args.format,
        verbose=args.verbose,
        group_cap=int(resolved_env.get("LATTICE_VOA_GROUP_CAP", str(DEFAULT_GROUP_CAP))),
        exhaustive_limit=int(resolved_env.get("LATTICE_VOA_EXHAUSTIVE_LIMIT", str(DEFAULT_EXHAUSTIVE_LIMIT))),
        report_timing=resolved_env.get("LATTICE_VOA_REPORT_TIMING", "false").strip().lower() == "true",
    )
    _validate(config)
    return config


def _validate(config: RunConfig) -> None:
    parse_ring(config.ring_token)
    for name in ("max_weight", "max_mode", "truncation", "samples", "seed"):
        if getattr(config, name) < 0:
            raise ValueError(f"--{name.replace('_', '-')} must be non-negative, got {getattr(config, name)}")
    if config.command == "aut-report" and config.truncation < 1:
        raise ValueError(f"--truncation must be at least 1, got {config.truncation}")
    if config.group_cap < 1:
        raise ValueError(f"LATTICE_VOA_GROUP_CAP must be positive, got {config.group_cap}")
    if config.exhaustive_limit < 0:
        raise ValueError(f"LATTICE_VOA_EXHAUSTIVE_LIMIT must be non-negative, got {config.exhaustive_limit}")


__all__ = ["COMMANDS", "FORMATS", "RunConfig", "build_parser", "load_run_config"]
