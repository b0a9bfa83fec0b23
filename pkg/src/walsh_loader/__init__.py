"""Walsh-series quantum state preparation at desk scale.

Compute truncated Walsh spectra of sampled functions, assemble the
ancilla-controlled loader circuit (with the order-zero phase correction),
simulate it exactly, and benchmark the infidelity of the prepared states.
"""

from .bench import (
    ExperimentRecord,
    catalog,
    emit_csv,
    render_csv,
    run_experiment,
    sweep_epsilon,
    sweep_qubits,
)
from .circuit import (
    Circuit,
    Gate,
    GateKind,
    build_wsl_circuit,
    controlled_walsh_term,
    from_text,
    staircase,
    to_text,
    walsh_term,
)
from .errors import DegenerateBranchError, DomainError, ResourceError
from .functions import DEFAULT_PARAMETERS, FUNCTION_IDS, FunctionSpec, discretize
from .simulator import (
    PostSelectionResult,
    Statevector,
    apply_gate,
    infidelity,
    postselect_ancilla_one,
    run,
    sample_ancilla,
    unitary_of,
)
from .walsh import (
    SampledFunction,
    WalshSpectrum,
    bit_reverse,
    reconstruct,
    series_eval,
    truncation_order,
    walsh_function,
    walsh_transform,
    walsh_transform_fast,
)

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "DEFAULT_PARAMETERS",
    "DegenerateBranchError",
    "DomainError",
    "ExperimentRecord",
    "FUNCTION_IDS",
    "FunctionSpec",
    "Gate",
    "GateKind",
    "PostSelectionResult",
    "ResourceError",
    "SampledFunction",
    "Statevector",
    "WalshSpectrum",
    "apply_gate",
    "bit_reverse",
    "build_wsl_circuit",
    "catalog",
    "controlled_walsh_term",
    "discretize",
    "emit_csv",
    "from_text",
    "infidelity",
    "postselect_ancilla_one",
    "reconstruct",
    "render_csv",
    "run",
    "run_experiment",
    "sample_ancilla",
    "series_eval",
    "staircase",
    "sweep_epsilon",
    "sweep_qubits",
    "to_text",
    "truncation_order",
    "unitary_of",
    "walsh_function",
    "walsh_term",
    "walsh_transform",
    "walsh_transform_fast",
]
