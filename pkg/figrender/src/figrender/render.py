"""Draw infidelity-sweep panels: solid lines for correct mode, dashed for
incomplete, downward triangles where a value sat at the reporting floor."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .errors import DomainError
from .series import PlotSeries, load_series

# Pin everything that could vary between runs; output files must be
# byte-identical for identical inputs.
matplotlib.rcParams["svg.hashsalt"] = "figrender"

_AXIS_LABELS = {
    "qubits": ("register qubits n", "log10 infidelity"),
    "epsilon": ("log10 eps", "log10 infidelity"),
}

FLOOR_MARKER_GID = "floor-markers"


def _color_table(series: list[PlotSeries]) -> dict[str, str]:
    functions = sorted({s.function for s in series})
    cmap = plt.get_cmap("tab10")
    return {fid: matplotlib.colors.to_hex(cmap(i % 10)) for i, fid in enumerate(functions)}


def build_figure(series: list[PlotSeries], kind: str):
    """One line per (function, mode); returns the matplotlib Figure."""
    if not series:
        raise DomainError("no series to plot")
    colors = _color_table(series)
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for entry in series:
        ax.plot(
            entry.x,
            entry.y,
            linestyle="-" if entry.mode == "correct" else "--",
            marker="o",
            markersize=3,
            color=colors[entry.function],
            label=f"{entry.function} ({entry.mode})",
        )
        floored = [(x, y) for x, y, flag in zip(entry.x, entry.y, entry.floored) if flag]
        if floored:
            marks = ax.plot(
                [p[0] for p in floored],
                [p[1] for p in floored],
                linestyle="None",
                marker="v",
                markersize=8,
                color=colors[entry.function],
            )
            marks[0].set_gid(FLOOR_MARKER_GID)
    xlabel, ylabel = _AXIS_LABELS[kind]
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.legend(fontsize=7, ncol=2, loc="best")
    fig.tight_layout()
    return fig


def render(csv_path, kind: str, out_path) -> None:
    """Load the CSV and write one vector-graphics panel to out_path."""
    series = load_series(csv_path, kind)
    fig = build_figure(series, kind)
    try:
        fig.savefig(out_path, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
