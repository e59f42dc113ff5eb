"""Lattice file loading and preset resolution."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from lattices.models import Lattice


PRESETS_DIR = Path(__file__).resolve().parent / "presets"
DEFAULT_LATTICE = "A2"


def load_lattice(source: str | Path | None = None, *, env: dict[str, str] | None = None) -> Lattice:
    """Resolves a preset name or a file path (falling back to LATTICE_PATH) and validates it."""
    resolved_env = env if env is not None else dict(os.environ)
    lattice_path = _resolve_lattice_path(source, resolved_env)
    return parse_lattice_file(lattice_path)


def parse_lattice_file(path: str | Path) -> Lattice:
    lattice_path = Path(path)
    data = _load_toml_file(lattice_path)
    return _build_lattice(data, lattice_path)


def preset_names() -> tuple[str, ...]:
    return tuple(sorted(path.stem for path in PRESETS_DIR.glob("*.toml")))


def _resolve_lattice_path(source: str | Path | None, env: dict[str, str]) -> Path:
    configured = str(source) if source else env.get("LATTICE_PATH", DEFAULT_LATTICE)
    configured = configured.strip()
    if configured in preset_names():
        return PRESETS_DIR / f"{configured}.toml"
    return Path(configured).expanduser().resolve()


def _load_toml_file(path: Path) -> dict[str, Any]:
    if not path.exists():
        raise FileNotFoundError(f"Lattice file not found: {path}")
    with path.open("rb") as handle:
        try:
            return tomllib.load(handle)
        except tomllib.TOMLDecodeError as error:
            raise ValueError(f"Malformed lattice file {path}: {error}") from error


def _build_lattice(data: dict[str, Any], path: Path) -> Lattice:
    missing_fields = [field for field in ("name", "gram") if field not in data]
    if missing_fields:
        joined = ", ".join(missing_fields)
        raise ValueError(f"Lattice file {path} is missing fields: {joined}")
    gram = data["gram"]
    if not isinstance(gram, list) or not all(isinstance(row, list) for row in gram):
        raise ValueError(f"Lattice file {path}: gram must be an array of arrays of integers")
    try:
        return Lattice.from_gram(str(data["name"]), gram)
    except ValueError as error:
        raise ValueError(f"Lattice file {path}: {error}") from error


__all__ = ["DEFAULT_LATTICE", "PRESETS_DIR", "load_lattice", "parse_lattice_file", "preset_names"]
