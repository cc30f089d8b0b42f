"""Bundled example data: the data-modelling-tools comparison context."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .context import FormalContext, parse_context


def kdm_path() -> Path:
    """Filesystem path of the bundled data-modelling tools CSV."""
    return Path(str(resources.files("galex").joinpath("data/k_dm.csv")))


def load_kdm() -> FormalContext:
    """5 data-modelling tools × 7 attributes (operating systems and data models)."""
    return parse_context(kdm_path().read_text(encoding="utf-8"), "csv")
