"""Load plottable series from benchmark CSVs.

Expected schema (exact header, as written by the ``wsl`` sweep commands):

    function,n,eps0,eps1,M,mode,infidelity,success_probability,wall_time_ms,float_floor

One series per (function, mode) pair. The only numeric transformation
applied anywhere is log10; everything else is carried through verbatim.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

from .errors import DomainError, SchemaError

EXPECTED_HEADER = [
    "function",
    "n",
    "eps0",
    "eps1",
    "M",
    "mode",
    "infidelity",
    "success_probability",
    "wall_time_ms",
    "float_floor",
]

KINDS = ("qubits", "epsilon")


@dataclass(frozen=True)
class PlotSeries:
    function: str
    mode: str
    x: tuple[float, ...]  # n for kind=qubits, log10(eps0) for kind=epsilon
    y: tuple[float, ...]  # log10(infidelity)
    floored: tuple[bool, ...]

    def __post_init__(self) -> None:
        if not all(b > a for a, b in zip(self.x, self.x[1:])):
            raise SchemaError(
                f"series {self.function}/{self.mode} has non-increasing x values; "
                "was the right --kind chosen for this CSV?"
            )
        if not all(math.isfinite(v) for v in self.y):
            raise SchemaError(f"series {self.function}/{self.mode} has non-finite y values")


def _parse_row(row: dict[str, str], lineno: int) -> dict:
    try:
        infidelity = float(row["infidelity"])
        if infidelity <= 0.0:
            raise ValueError("infidelity must be positive (the harness floors at 1e-15)")
        return {
            "function": row["function"],
            "mode": row["mode"],
            "n": int(row["n"]),
            "eps0": float(row["eps0"]),
            "infidelity": infidelity,
            "floored": {"true": True, "false": False}[row["float_floor"]],
        }
    except (KeyError, ValueError) as exc:
        raise SchemaError(f"malformed CSV row {lineno}: {exc}") from exc


def load_series(csv_path, kind: str) -> list[PlotSeries]:
    """Parse a sweep CSV into one PlotSeries per (function, mode), sorted."""
    if kind not in KINDS:
        raise DomainError(f"kind must be one of {KINDS}, got {kind!r}")
    with open(csv_path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames != EXPECTED_HEADER:
            raise SchemaError(
                f"unexpected CSV header {reader.fieldnames}; want {EXPECTED_HEADER}"
            )
        rows = [_parse_row(row, lineno) for lineno, row in enumerate(reader, start=2)]
    if not rows:
        raise DomainError(f"{csv_path} holds no data rows; nothing to plot")
    groups: dict[tuple[str, str], list[dict]] = {}
    for row in rows:
        groups.setdefault((row["function"], row["mode"]), []).append(row)
    series = []
    for (function, mode), members in sorted(groups.items()):
        members.sort(key=lambda r: r["n"] if kind == "qubits" else r["eps0"])
        xs = tuple(
            float(r["n"]) if kind == "qubits" else math.log10(r["eps0"]) for r in members
        )
        ys = tuple(math.log10(r["infidelity"]) for r in members)
        series.append(
            PlotSeries(function, mode, xs, ys, tuple(r["floored"] for r in members))
        )
    return series
