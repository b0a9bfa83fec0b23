"""Gate-level circuits and the Walsh-series loader construction.

Gate conventions (matrices in the computational basis, |0> first):

* H = [[1, 1], [1, -1]] / sqrt(2)
* RZ(phi) = diag(exp(-i phi/2), exp(+i phi/2)), so RZ(2a) = exp(-i a Z)
  with no global-phase slack. This matters: the rotations are used under
  ancilla control, where a global phase would turn into a relative one.
* P(beta) = diag(1, exp(i beta))
* CNOT, CRZ(phi), CP(beta): the controlled forms, identity on control |0>.

Qubit numbering: register qubits 0..n-1 carry bits 0..n-1 of the index k;
the ancilla, when present, is qubit n. The Walsh operator of order h acts
with Z on qubit i exactly when bit n-1-i of h is set (see walsh.py).

Text serialization (one gate per line, whitespace separated):

    circuit := header newline gate*
    header  := "CIRCUIT" "n=" INT "ancilla=" ("0"|"1") "mode=" ("correct"|"incomplete"|"none")
    gate    := KIND [THETA] CONTROL* ";" TARGET+

THETA is present exactly for the parametric kinds (RZ, P, CRZ, CP) and is
written in shortest round-trip decimal. Example:

    CIRCUIT n=2 ancilla=1 mode=correct
    H ; 2
    CRZ 0.001953125 2 ; 1
    P -1.5707963267948966 ; 2
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError
from .walsh import WalshSpectrum


class GateKind(enum.Enum):
    H = "H"
    RZ = "RZ"
    P = "P"
    CNOT = "CNOT"
    CRZ = "CRZ"
    CP = "CP"


_PARAMETRIC = {GateKind.RZ, GateKind.P, GateKind.CRZ, GateKind.CP}
_CONTROLLED = {GateKind.CNOT, GateKind.CRZ, GateKind.CP}


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    targets: tuple[int, ...]
    controls: tuple[int, ...] = ()
    theta: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(int(q) for q in self.targets))
        object.__setattr__(self, "controls", tuple(int(q) for q in self.controls))
        if len(self.targets) != 1:
            raise DomainError(f"{self.kind.value} takes exactly one target, got {self.targets}")
        want_controls = 1 if self.kind in _CONTROLLED else 0
        if len(self.controls) != want_controls:
            raise DomainError(
                f"{self.kind.value} takes {want_controls} control(s), got {self.controls}"
            )
        qubits = self.targets + self.controls
        if len(set(qubits)) != len(qubits) or min(qubits) < 0:
            raise DomainError(f"gate qubits must be distinct and non-negative, got {qubits}")
        if self.kind in _PARAMETRIC:
            if self.theta is None or not math.isfinite(self.theta):
                raise DomainError(f"{self.kind.value} requires a finite angle, got {self.theta}")
            object.__setattr__(self, "theta", float(self.theta))
        elif self.theta is not None:
            raise DomainError(f"{self.kind.value} takes no angle")

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.controls + self.targets

    @staticmethod
    def h(qubit: int) -> "Gate":
        return Gate(GateKind.H, (qubit,))

    @staticmethod
    def rz(theta: float, qubit: int) -> "Gate":
        return Gate(GateKind.RZ, (qubit,), theta=theta)

    @staticmethod
    def phase(beta: float, qubit: int) -> "Gate":
        return Gate(GateKind.P, (qubit,), theta=beta)

    @staticmethod
    def cnot(control: int, target: int) -> "Gate":
        return Gate(GateKind.CNOT, (target,), (control,))

    @staticmethod
    def crz(theta: float, control: int, target: int) -> "Gate":
        return Gate(GateKind.CRZ, (target,), (control,), theta=theta)

    @staticmethod
    def cphase(beta: float, control: int, target: int) -> "Gate":
        return Gate(GateKind.CP, (target,), (control,), theta=beta)


_MODES = ("correct", "incomplete")


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over n register qubits plus an optional ancilla (qubit n)."""

    register_qubits: int
    has_ancilla: bool
    gates: tuple[Gate, ...]
    mode: str | None = None

    def __post_init__(self) -> None:
        if self.register_qubits < 1:
            raise DomainError(f"register size must be >= 1, got {self.register_qubits}")
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.mode is not None:
            if self.mode not in _MODES:
                raise DomainError(f"mode must be one of {_MODES}, got {self.mode!r}")
            if not self.has_ancilla:
                raise DomainError("a loader circuit requires the ancilla qubit")
        total = self.num_qubits
        for gate in self.gates:
            if max(gate.qubits) >= total:
                raise DomainError(
                    f"gate {gate.kind.value} on qubits {gate.qubits} exceeds circuit size {total}"
                )

    @property
    def num_qubits(self) -> int:
        return self.register_qubits + (1 if self.has_ancilla else 0)

    @property
    def ancilla(self) -> int:
        if not self.has_ancilla:
            raise DomainError("circuit has no ancilla")
        return self.register_qubits


def _z_qubits(h: int, n: int) -> list[int]:
    """Register qubits on which the order-h Walsh operator applies Z."""
    if not 1 <= h < (1 << n):
        raise DomainError(f"order h={h} out of range for n={n} (h=0 has no Z qubit)")
    return [i for i in range(n) if (h >> (n - 1 - i)) & 1]


def staircase(h: int, n: int) -> tuple[Gate, ...]:
    """CNOT staircase conjugating a single Z on the pivot into the order-h Walsh operator.

    One CNOT per set bit of h except the pivot (the most significant qubit
    receiving a Z), each controlled by the other Z-qubit and targeting the
    pivot; empty when h has a single set bit.
    """
    zs = _z_qubits(h, n)
    pivot = zs[-1]
    return tuple(Gate.cnot(control=q, target=pivot) for q in zs[:-1])


def walsh_term(h: int, theta: float, n: int) -> tuple[Gate, ...]:
    """Gates realizing exp(-i theta w_h): staircase, RZ(2 theta) on the pivot, staircase undone."""
    zs = _z_qubits(h, n)
    stairs = staircase(h, n)
    return stairs + (Gate.rz(2.0 * theta, zs[-1]),) + tuple(reversed(stairs))


def controlled_walsh_term(h: int, theta: float, n: int) -> tuple[Gate, ...]:
    """Ancilla-controlled exp(-i theta w_h); only the central rotation is controlled.

    The staircases cancel on their own when the control is |0>, so
    controlling CNOTs would only triple the two-qubit gate count.
    """
    zs = _z_qubits(h, n)
    stairs = staircase(h, n)
    crz = Gate.crz(2.0 * theta, control=n, target=zs[-1])
    return stairs + (crz,) + tuple(reversed(stairs))


def build_wsl_circuit(
    spectrum: WalshSpectrum,
    eps0: float,
    n: int,
    mode: str = "correct",
    skip_zero_terms: bool = False,
) -> Circuit:
    """Assemble the Walsh-series loader circuit for the given spectrum.

    Layout: H on the ancilla and on every register qubit; the controlled
    term exp(-i eps0 a_h w_h) for h = 1..M-1 in ascending order (the terms
    all commute, so the order is a reproducibility choice only); in
    ``correct`` mode the single ancilla phase gate P(-eps0 a_0) carrying the
    order-zero term; finally H then P(-pi/2) on the ancilla. No measurement:
    post-selection on the ancilla is the simulator's job.

    ``incomplete`` mode drops exactly the P(-eps0 a_0) gate, reproducing a
    loader that ignores the order-zero term. ``skip_zero_terms`` elides
    rotations with a_h == 0 (off by default so gate counts depend only on
    n and M).
    """
    if spectrum.n != n:
        raise DomainError(f"spectrum is for n={spectrum.n}, circuit wants n={n}")
    if not (eps0 > 0.0 and math.isfinite(eps0)):
        raise DomainError(f"eps0 must be positive and finite, got {eps0}")
    if mode not in _MODES:
        raise DomainError(f"mode must be one of {_MODES}, got {mode!r}")
    ancilla = n
    gates: list[Gate] = [Gate.h(ancilla)]
    gates += [Gate.h(q) for q in range(n)]
    coeffs = spectrum.coefficients
    for h in range(1, spectrum.num_terms):
        if skip_zero_terms and coeffs[h] == 0.0:
            continue
        gates += controlled_walsh_term(h, eps0 * float(coeffs[h]), n)
    if mode == "correct":
        gates.append(Gate.phase(-eps0 * float(coeffs[0]), ancilla))
    gates.append(Gate.h(ancilla))
    gates.append(Gate.phase(-math.pi / 2.0, ancilla))
    return Circuit(register_qubits=n, has_ancilla=True, gates=tuple(gates), mode=mode)


def to_text(circuit: Circuit) -> str:
    """Serialize to the line-based gate format (see module docstring)."""
    lines = [
        f"CIRCUIT n={circuit.register_qubits} "
        f"ancilla={1 if circuit.has_ancilla else 0} mode={circuit.mode or 'none'}"
    ]
    for gate in circuit.gates:
        fields = [gate.kind.value]
        if gate.theta is not None:
            fields.append(repr(gate.theta))
        fields += [str(q) for q in gate.controls]
        fields.append(";")
        fields += [str(q) for q in gate.targets]
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Circuit:
    """Parse the line-based gate format back into a Circuit."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or not lines[0].startswith("CIRCUIT "):
        raise DomainError("missing CIRCUIT header line")
    header: dict[str, str] = {}
    for token in lines[0].split()[1:]:
        key, _, value = token.partition("=")
        header[key] = value
    try:
        n = int(header["n"])
        has_ancilla = {"0": False, "1": True}[header["ancilla"]]
        mode = None if header["mode"] == "none" else header["mode"]
    except (KeyError, ValueError) as exc:
        raise DomainError(f"malformed CIRCUIT header: {lines[0]!r}") from exc
    gates = []
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split()
        try:
            kind = GateKind(tokens[0])
            sep = tokens.index(";")
            theta = None
            rest = tokens[1:sep]
            if kind in _PARAMETRIC:
                theta = float(rest[0])
                rest = rest[1:]
            controls = tuple(int(t) for t in rest)
            targets = tuple(int(t) for t in tokens[sep + 1 :])
            gates.append(Gate(kind, targets, controls, theta))
        except (ValueError, IndexError, KeyError) as exc:
            raise DomainError(f"malformed gate on line {lineno}: {line!r}") from exc
    return Circuit(register_qubits=n, has_ancilla=has_ancilla, gates=tuple(gates), mode=mode)
