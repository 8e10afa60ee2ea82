"""Exact characteristic polynomials and eigenvalue displacement for graphs with twin vertices."""

import os
from pathlib import Path

from ._twinspec import (
    Graph,
    TwinspecError,
    charpoly,
    cofactor,
    eigenvalues,
    estimate,
    find_twins,
    main_polynomial,
    polynomial_string,
    spectrum,
    twin_deleted_charpoly,
    verify,
)
from . import _twinspec

TABLES = ("A1", "A2", "A3", "B1", "B2")


def data_dir():
    """Reference data: $TWINSPEC_DATA_DIR, then data bundled with the wheel, then the source tree."""
    env = os.environ.get("TWINSPEC_DATA_DIR")
    if env:
        return env
    bundled = Path(__file__).with_name("data")
    if (bundled / "reference").is_dir():
        return str(bundled)
    return _twinspec.default_data_dir()


def reproduce(table, data_dir_override=None, as_text=False):
    return _twinspec.reproduce(table, data_dir_override or data_dir(), as_text)


def load_g8(data_dir_override=None):
    return _twinspec.load_g8(data_dir_override or data_dir())


__all__ = [
    "Graph",
    "TABLES",
    "TwinspecError",
    "charpoly",
    "cofactor",
    "data_dir",
    "eigenvalues",
    "estimate",
    "find_twins",
    "load_g8",
    "main_polynomial",
    "polynomial_string",
    "reproduce",
    "spectrum",
    "twin_deleted_charpoly",
    "verify",
]
