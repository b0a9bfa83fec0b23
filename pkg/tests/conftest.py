"""Shared dense-matrix oracles, built independently of the package kernels.

Every oracle here goes through explicit Kronecker products with qubit 0 as
the least significant index bit, so agreement with the package pins down
its bit-ordering conventions rather than assuming them.
"""

import re
from functools import reduce

import numpy as np

from walsh_loader import Circuit, Gate, GateKind


def mask_timing(csv_text: str) -> str:
    """Blank the wall_time_ms column (the only nondeterministic CSV field)."""
    return re.sub(r",[0-9.e+-]+,(true|false)$", ",<t>,\\1", csv_text, flags=re.MULTILINE)

I2 = np.eye(2, dtype=complex)
X_MAT = np.array([[0, 1], [1, 0]], dtype=complex)
Z_MAT = np.diag([1.0 + 0j, -1.0])
P0 = np.diag([1.0 + 0j, 0.0])
P1 = np.diag([0.0 + 0j, 1.0])


def rz_matrix(phi: float) -> np.ndarray:
    return np.diag([np.exp(-0.5j * phi), np.exp(+0.5j * phi)])


def phase_matrix(beta: float) -> np.ndarray:
    return np.diag([1.0 + 0j, np.exp(1j * beta)])


H_MAT = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0)


def embed_single(matrix: np.ndarray, qubit: int, num_qubits: int) -> np.ndarray:
    factors = [matrix if i == qubit else I2 for i in reversed(range(num_qubits))]
    return reduce(np.kron, factors)


def embed_controlled(base: np.ndarray, control: int, target: int, num_qubits: int) -> np.ndarray:
    idle = [P0 if i == control else I2 for i in reversed(range(num_qubits))]
    active = [
        P1 if i == control else (base if i == target else I2)
        for i in reversed(range(num_qubits))
    ]
    return reduce(np.kron, idle) + reduce(np.kron, active)


def dense_gate(gate: Gate, num_qubits: int) -> np.ndarray:
    target = gate.targets[0]
    if gate.kind is GateKind.H:
        return embed_single(H_MAT, target, num_qubits)
    if gate.kind is GateKind.RZ:
        return embed_single(rz_matrix(gate.theta), target, num_qubits)
    if gate.kind is GateKind.P:
        return embed_single(phase_matrix(gate.theta), target, num_qubits)
    control = gate.controls[0]
    if gate.kind is GateKind.CNOT:
        return embed_controlled(X_MAT, control, target, num_qubits)
    if gate.kind is GateKind.CRZ:
        return embed_controlled(rz_matrix(gate.theta), control, target, num_qubits)
    return embed_controlled(phase_matrix(gate.theta), control, target, num_qubits)


def dense_unitary(circuit: Circuit) -> np.ndarray:
    total = np.eye(1 << circuit.num_qubits, dtype=complex)
    for gate in circuit.gates:
        total = dense_gate(gate, circuit.num_qubits) @ total
    return total


def walsh_operator_matrix(h: int, n: int) -> np.ndarray:
    """Z^{h_0} (x) Z^{h_1} (x) ... with the leftmost factor on the most significant qubit."""
    factors = [Z_MAT if (h >> j) & 1 else I2 for j in range(n)]
    return reduce(np.kron, factors)


def walsh_sign_oracle(h: int, k: int, n: int) -> int:
    return int(round(walsh_operator_matrix(h, n)[k, k].real))


def random_circuit(num_qubits: int, num_gates: int, rng: np.random.Generator) -> Circuit:
    gates = []
    for _ in range(num_gates):
        kind = rng.choice(list(GateKind))
        theta = float(rng.uniform(-2 * np.pi, 2 * np.pi))
        qubits = rng.choice(num_qubits, size=2, replace=False)
        target, control = int(qubits[0]), int(qubits[1])
        if kind is GateKind.H:
            gates.append(Gate.h(target))
        elif kind is GateKind.RZ:
            gates.append(Gate.rz(theta, target))
        elif kind is GateKind.P:
            gates.append(Gate.phase(theta, target))
        elif kind is GateKind.CNOT:
            gates.append(Gate.cnot(control, target))
        elif kind is GateKind.CRZ:
            gates.append(Gate.crz(theta, control, target))
        else:
            gates.append(Gate.cphase(theta, control, target))
    return Circuit(register_qubits=num_qubits, has_ancilla=False, gates=tuple(gates))
