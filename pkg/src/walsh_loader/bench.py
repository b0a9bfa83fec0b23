"""Experiment pipeline: discretize, transform, build, simulate, score, emit CSV.

Reported infidelities are floored at 1e-15 (flagged via ``float_floor``) so
downstream log plots never see zero; everything else is recorded raw. The
wall_time_ms column is the only nondeterministic field and is masked in
golden-file comparisons.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .circuit import build_wsl_circuit
from .errors import DomainError
from .functions import FunctionSpec, discretize
from .simulator import infidelity, postselect_ancilla_one, run
from .walsh import SampledFunction, truncation_order, walsh_transform_fast

FLOAT_FLOOR = 1e-15
DEFAULT_EPS = 2.0**-7
DEFAULT_QUBIT_RANGE = tuple(range(7, 14))
DEFAULT_EPS_GRID = tuple(2.0**-e for e in range(10, 2, -1))
MODES = ("correct", "incomplete")

CSV_HEADER = (
    "function,n,eps0,eps1,M,mode,infidelity,success_probability,wall_time_ms,float_floor"
)


@dataclass(frozen=True)
class ExperimentRecord:
    function: str
    n: int
    eps0: float
    eps1: float
    M: int
    mode: str
    infidelity: float
    success_probability: float
    wall_time_ms: float
    float_floor: bool


def catalog(spec: FunctionSpec, n: int) -> SampledFunction:
    """Discretized samples of the catalog function (see functions.py)."""
    return discretize(spec, n)


def run_experiment(
    spec: FunctionSpec, n: int, eps0: float, eps1: float, mode: str
) -> ExperimentRecord:
    """One benchmark point: prepare the state exactly and score its infidelity."""
    if n < 1:
        raise DomainError(f"qubit count must be >= 1, got {n}")
    if not 0.0 < eps0 < 1.0:
        raise DomainError(f"eps0 must lie in (0, 1), got {eps0}")
    start = time.perf_counter()
    target = catalog(spec, n)
    M = truncation_order(eps1, n)
    spectrum = walsh_transform_fast(target, M, eps1=eps1)
    circuit = build_wsl_circuit(spectrum, eps0, n, mode)
    result = postselect_ancilla_one(run(circuit))
    raw = infidelity(result.register_state, target)
    elapsed_ms = (time.perf_counter() - start) * 1e3
    floored = raw < FLOAT_FLOOR
    return ExperimentRecord(
        function=spec.id,
        n=n,
        eps0=eps0,
        eps1=eps1,
        M=M,
        mode=mode,
        infidelity=FLOAT_FLOOR if floored else raw,
        success_probability=result.success_probability,
        wall_time_ms=elapsed_ms,
        float_floor=floored,
    )


def _sorted_grid(specs, modes):
    specs = sorted(specs, key=lambda s: s.id)
    for mode in modes:
        if mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    return specs, sorted(modes)


def sweep_qubits(
    specs: list[FunctionSpec],
    n_list: tuple[int, ...] = DEFAULT_QUBIT_RANGE,
    eps: float = DEFAULT_EPS,
    modes: tuple[str, ...] = MODES,
) -> list[ExperimentRecord]:
    """Infidelity vs register size at fixed eps0 = eps1 = eps."""
    specs, modes = _sorted_grid(specs, modes)
    return [
        run_experiment(spec, n, eps, eps, mode)
        for spec in specs
        for mode in modes
        for n in sorted(n_list)
    ]


def sweep_epsilon(
    specs: list[FunctionSpec],
    n: int = 12,
    eps_list: tuple[float, ...] = DEFAULT_EPS_GRID,
    modes: tuple[str, ...] = MODES,
) -> list[ExperimentRecord]:
    """Infidelity vs eps0 = eps1 = eps at fixed register size."""
    specs, modes = _sorted_grid(specs, modes)
    return [
        run_experiment(spec, n, eps, eps, mode)
        for spec in specs
        for mode in modes
        for eps in sorted(eps_list)
    ]


def _row(record: ExperimentRecord) -> str:
    return ",".join(
        (
            record.function,
            str(record.n),
            repr(record.eps0),
            repr(record.eps1),
            str(record.M),
            record.mode,
            repr(record.infidelity),
            repr(record.success_probability),
            repr(record.wall_time_ms),
            "true" if record.float_floor else "false",
        )
    )


def render_csv(records: list[ExperimentRecord]) -> str:
    """CSV text for the records, sorted by (function, mode, n, eps0)."""
    ordered = sorted(records, key=lambda r: (r.function, r.mode, r.n, r.eps0))
    return "\n".join([CSV_HEADER, *map(_row, ordered)]) + "\n"


def emit_csv(records: list[ExperimentRecord], path) -> None:
    """Write render_csv(records) to path."""
    text = render_csv(records)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as exc:
        raise OSError(f"failed to write CSV to {path}: {exc}") from exc
