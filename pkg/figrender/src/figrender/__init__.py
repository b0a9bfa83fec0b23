"""Figure rendering for walsh-loader benchmark CSVs."""

from .errors import DomainError, SchemaError
from .render import FLOOR_MARKER_GID, build_figure, render
from .series import EXPECTED_HEADER, KINDS, PlotSeries, load_series

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "EXPECTED_HEADER",
    "FLOOR_MARKER_GID",
    "KINDS",
    "PlotSeries",
    "SchemaError",
    "build_figure",
    "load_series",
    "render",
]
