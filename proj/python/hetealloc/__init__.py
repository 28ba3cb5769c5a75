"""Expertise allocation over author-paper-category networks."""

import json as _json

from ._core import (
    DataError,
    InvalidQuery,
    Network,
    UsageError,
    histogram,
    max_min_ratio,
    normalized_max,
    run,
)
from ._core import ingest as _ingest

__all__ = [
    "DataError",
    "InvalidQuery",
    "Network",
    "UsageError",
    "histogram",
    "ingest",
    "max_min_ratio",
    "normalized_max",
    "run",
]


def ingest(links, mesh, taxonomy=None):
    """Return the dataset manifest as a dict."""
    return _json.loads(_ingest(links, mesh, taxonomy))
