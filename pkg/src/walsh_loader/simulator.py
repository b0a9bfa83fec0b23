"""Exact statevector simulation, ancilla post-selection, and fidelity metrics.

Amplitude layout: flat array of 2^q complex values indexed by the basis
integer; qubit i owns bit i of the index, so the ancilla (qubit n) splits
the array into contiguous halves. Diagonal gates are amplitude-wise
multiplies, H is a butterfly pass, CNOT an index swap.

The API is functional (state in, new state out); each call works on a
private buffer, so independent runs are safe to execute in parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, Gate, GateKind
from .errors import DegenerateBranchError, DomainError, ResourceError
from .walsh import SampledFunction

_NORM_TOL = 1e-8
_BRANCH_FLOOR = 1e-300
_UNITARY_QUBIT_CAP = 12


@dataclass(frozen=True)
class Statevector:
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if self.num_qubits < 1 or amps.shape != (1 << self.num_qubits,):
            raise DomainError(
                f"expected {1 << self.num_qubits} amplitudes for {self.num_qubits} qubits, "
                f"got shape {amps.shape}"
            )
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > _NORM_TOL:
            raise DomainError(f"state is not normalized: |amps|^2 = {norm_sq}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @staticmethod
    def zero(num_qubits: int) -> "Statevector":
        return Statevector.basis(num_qubits, 0)

    @staticmethod
    def basis(num_qubits: int, k: int) -> "Statevector":
        if num_qubits < 1 or not 0 <= k < (1 << num_qubits):
            raise DomainError(f"basis index {k} out of range for {num_qubits} qubits")
        amps = np.zeros(1 << num_qubits, dtype=np.complex128)
        amps[k] = 1.0
        return Statevector(num_qubits, amps)


@dataclass(frozen=True)
class PostSelectionResult:
    """Renormalized register state given ancilla |1>, plus the branch weight."""

    register_state: Statevector
    success_probability: float


def _bit(indices: np.ndarray, q: int) -> np.ndarray:
    return (indices >> q) & 1


def _apply_inplace(amps: np.ndarray, gate: Gate, num_qubits: int) -> None:
    for q in gate.qubits:
        if q >= num_qubits:
            raise DomainError(f"gate qubit {q} out of range for {num_qubits}-qubit state")
    kind = gate.kind
    if kind is GateKind.H:
        view = amps.reshape(-1, 2, 1 << gate.targets[0])
        u = view[:, 0, :].copy()
        v = view[:, 1, :]
        inv_sqrt2 = 1.0 / math.sqrt(2.0)
        view[:, 0, :] = (u + v) * inv_sqrt2
        view[:, 1, :] = (u - v) * inv_sqrt2
        return
    if kind is GateKind.RZ:
        view = amps.reshape(-1, 2, 1 << gate.targets[0])
        view[:, 0, :] *= np.exp(-0.5j * gate.theta)
        view[:, 1, :] *= np.exp(+0.5j * gate.theta)
        return
    if kind is GateKind.P:
        view = amps.reshape(-1, 2, 1 << gate.targets[0])
        view[:, 1, :] *= np.exp(1j * gate.theta)
        return
    indices = np.arange(amps.size)
    control, target = gate.controls[0], gate.targets[0]
    on = _bit(indices, control) == 1
    if kind is GateKind.CNOT:
        # The fancy-index gather on the right completes before assignment.
        amps[indices[on]] = amps[indices[on] ^ (1 << target)]
        return
    tbit = _bit(indices, target) == 1
    if kind is GateKind.CRZ:
        amps[on & ~tbit] *= np.exp(-0.5j * gate.theta)
        amps[on & tbit] *= np.exp(+0.5j * gate.theta)
        return
    if kind is GateKind.CP:
        amps[on & tbit] *= np.exp(1j * gate.theta)
        return
    raise DomainError(f"unsupported gate kind {kind}")


def apply_gate(state: Statevector, gate: Gate) -> Statevector:
    """Apply one gate, returning the new state."""
    amps = state.amplitudes.copy()
    _apply_inplace(amps, gate, state.num_qubits)
    return Statevector(state.num_qubits, amps)


def run(circuit: Circuit, initial: Statevector | None = None) -> Statevector:
    """Left-to-right application of all gates, starting from |0...0> by default."""
    if initial is None:
        initial = Statevector.zero(circuit.num_qubits)
    if initial.num_qubits != circuit.num_qubits:
        raise DomainError(
            f"initial state has {initial.num_qubits} qubits, circuit has {circuit.num_qubits}"
        )
    amps = initial.amplitudes.copy()
    for gate in circuit.gates:
        _apply_inplace(amps, gate, circuit.num_qubits)
    return Statevector(circuit.num_qubits, amps)


def postselect_ancilla_one(state: Statevector) -> PostSelectionResult:
    """Project onto ancilla |1> (the highest-index qubit) and renormalize.

    Raises DegenerateBranchError when the branch weight underflows to zero,
    i.e. the repeat-until-success loop could never succeed.
    """
    if state.num_qubits < 2:
        raise DomainError("post-selection needs at least one register qubit plus the ancilla")
    half = state.amplitudes.size // 2
    branch = state.amplitudes[half:]
    probability = float(np.sum(np.abs(branch) ** 2))
    if probability < _BRANCH_FLOOR:
        raise DegenerateBranchError(
            f"ancilla |1> branch weight {probability} is numerically zero"
        )
    register = Statevector(state.num_qubits - 1, branch / math.sqrt(probability))
    return PostSelectionResult(register_state=register, success_probability=probability)


def infidelity(prepared: Statevector, target: SampledFunction) -> float:
    """1 - |<prepared|target>|^2 against the normalized target samples."""
    if prepared.num_qubits != target.n:
        raise DomainError(
            f"prepared state has {prepared.num_qubits} qubits, target has {target.n}"
        )
    norm = float(np.linalg.norm(target.values))
    if norm == 0.0:
        raise DomainError("target function has no nonzero samples")
    overlap = np.vdot(prepared.amplitudes, target.values / norm)
    value = 1.0 - float(abs(overlap)) ** 2
    return min(max(value, 0.0), 1.0)


def unitary_of(circuit: Circuit) -> np.ndarray:
    """Dense matrix of the circuit: column k is run(circuit, |k>). Capped at 12 qubits."""
    if circuit.num_qubits > _UNITARY_QUBIT_CAP:
        raise ResourceError(
            f"unitary extraction is capped at {_UNITARY_QUBIT_CAP} qubits, "
            f"got {circuit.num_qubits}"
        )
    dim = 1 << circuit.num_qubits
    matrix = np.empty((dim, dim), dtype=np.complex128)
    for k in range(dim):
        matrix[:, k] = run(circuit, Statevector.basis(circuit.num_qubits, k)).amplitudes
    return matrix


def sample_ancilla(state: Statevector, shots: int, seed: int) -> int:
    """Count of successful ancilla=|1> outcomes over seeded Bernoulli repetitions."""
    if shots < 1:
        raise DomainError(f"shots must be >= 1, got {shots}")
    half = state.amplitudes.size // 2
    probability = min(float(np.sum(np.abs(state.amplitudes[half:]) ** 2)), 1.0)
    rng = np.random.default_rng(seed)
    return int(rng.binomial(shots, probability))
