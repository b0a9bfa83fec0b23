"""Circuit construction: staircases, Walsh term operators, loader assembly."""

import math

import numpy as np
import pytest
from scipy.linalg import block_diag, expm

from walsh_loader import (
    Circuit,
    DomainError,
    Gate,
    GateKind,
    SampledFunction,
    build_wsl_circuit,
    controlled_walsh_term,
    staircase,
    unitary_of,
    walsh_function,
    walsh_term,
    walsh_transform,
)

from conftest import dense_unitary, walsh_operator_matrix


def term_circuit(gates, n, has_ancilla=False):
    return Circuit(register_qubits=n, has_ancilla=has_ancilla, gates=tuple(gates))


# ---------------------------------------------------------------------------
# Gate / Circuit types


def test_gate_validation():
    with pytest.raises(DomainError):
        Gate(GateKind.H, (0,), theta=1.0)  # H takes no angle
    with pytest.raises(DomainError):
        Gate(GateKind.RZ, (0,))  # missing angle
    with pytest.raises(DomainError):
        Gate(GateKind.RZ, (0,), theta=math.inf)
    with pytest.raises(DomainError):
        Gate(GateKind.CNOT, (1,), (1,))  # control == target
    with pytest.raises(DomainError):
        Gate(GateKind.H, (0, 1))  # one target only
    assert Gate.crz(0.5, 2, 0).qubits == (2, 0)


def test_circuit_validation():
    with pytest.raises(DomainError):
        term_circuit([Gate.h(3)], 2)  # qubit out of range
    with pytest.raises(DomainError):
        Circuit(register_qubits=2, has_ancilla=False, gates=(), mode="correct")
    with pytest.raises(DomainError):
        Circuit(register_qubits=2, has_ancilla=True, gates=(), mode="wrong")
    circuit = term_circuit([Gate.h(2)], 2, has_ancilla=True)
    assert circuit.num_qubits == 3
    assert circuit.ancilla == 2


# ---------------------------------------------------------------------------
# staircase


def test_single_z_needs_no_staircase():
    assert staircase(1, 3) == ()
    assert staircase(4, 3) == ()


def test_staircase_h7_is_two_cnots_onto_pivot():
    gates = staircase(7, 3)
    assert [g.kind for g in gates] == [GateKind.CNOT, GateKind.CNOT]
    # h = 0b111 puts Z on every qubit; the pivot is the most significant one.
    assert [(g.controls[0], g.targets[0]) for g in gates] == [(0, 2), (1, 2)]


def test_staircase_h10_single_cnot():
    # h = 0b1010 sets Z on qubits 0 and 2 (bit j of h pairs with qubit n-1-j),
    # so the staircase proper is one CNOT; the conjugation in the term
    # operator uses it twice, giving the familiar two-CNOT sandwich.
    gates = staircase(10, 4)
    assert [(g.controls[0], g.targets[0]) for g in gates] == [(0, 2)]


def test_staircase_domain_errors():
    with pytest.raises(DomainError):
        staircase(0, 3)
    with pytest.raises(DomainError):
        staircase(8, 3)


def test_staircase_conjugation_realizes_walsh_diagonal():
    # A_h . Z(pivot) . A_h^{-1} must equal diag(w_h(k)); Z is P(pi) here.
    for h, n in ((7, 3), (10, 4), (5, 3), (13, 4)):
        stairs = staircase(h, n)
        pivot = max(q for g in stairs for q in g.qubits) if stairs else None
        zs = [i for i in range(n) if (h >> (n - 1 - i)) & 1]
        circuit = term_circuit([*stairs, Gate.phase(math.pi, zs[-1]), *reversed(stairs)], n)
        got = unitary_of(circuit)
        want = np.diag([walsh_function(h, k, n) for k in range(1 << n)]).astype(complex)
        assert np.max(np.abs(got - want)) < 1e-12
        if pivot is not None:
            assert pivot == zs[-1]


def test_z_layer_equals_staircase_conjugation_for_h10():
    n, h = 4, 10
    zs = [i for i in range(n) if (h >> (n - 1 - i)) & 1]
    layer = term_circuit([Gate.phase(math.pi, q) for q in zs], n)
    stairs = staircase(h, n)
    sandwich = term_circuit([*stairs, Gate.phase(math.pi, zs[-1]), *reversed(stairs)], n)
    assert np.max(np.abs(unitary_of(layer) - unitary_of(sandwich))) < 1e-12
    assert np.max(np.abs(unitary_of(layer) - walsh_operator_matrix(h, n))) < 1e-12


# ---------------------------------------------------------------------------
# walsh_term


def test_single_qubit_term_is_plain_rz():
    theta = 0.4
    (gate,) = walsh_term(1, theta, 1)
    assert gate.kind is GateKind.RZ and gate.theta == pytest.approx(2 * theta)
    got = unitary_of(term_circuit([gate], 1))
    assert np.allclose(got, np.diag([np.exp(-1j * theta), np.exp(1j * theta)]), atol=1e-15)


@pytest.mark.parametrize("h,theta,n", [(3, 0.3, 2), (10, 0.1, 4), (7, -0.9, 3)])
def test_term_equals_matrix_exponential(h, theta, n):
    got = unitary_of(term_circuit(walsh_term(h, theta, n), n))
    want = expm(-1j * theta * walsh_operator_matrix(h, n))
    assert np.max(np.abs(got - want)) < 1e-12  # exact identity, no phase slack


def test_term_diagonality_invariant():
    rng = np.random.default_rng(5)
    for n in range(1, 6):
        for h in range(1, 1 << n):
            theta = float(rng.uniform(-math.pi, math.pi))
            got = unitary_of(term_circuit(walsh_term(h, theta, n), n))
            diag = np.diag(got)
            assert np.max(np.abs(got - np.diag(diag))) < 1e-10
            want = np.exp(-1j * theta * np.array([walsh_function(h, k, n) for k in range(1 << n)]))
            assert np.max(np.abs(diag - want)) < 1e-10


def test_term_rejects_order_zero():
    with pytest.raises(DomainError):
        walsh_term(0, 0.1, 3)


# ---------------------------------------------------------------------------
# controlled_walsh_term


def test_controlled_rz_block_is_phase_exact():
    theta = 0.37
    circuit = term_circuit([Gate.crz(2 * theta, 1, 0)], 1, has_ancilla=True)
    want = np.diag([1.0, 1.0, np.exp(-1j * theta), np.exp(1j * theta)])
    assert np.max(np.abs(unitary_of(circuit) - want)) < 1e-15


@pytest.mark.parametrize("h,theta,n", [(3, 0.2, 2), (10, 0.15, 4), (1, 1.1, 1)])
def test_controlled_term_is_block_diagonal_oracle(h, theta, n):
    gates = controlled_walsh_term(h, theta, n)
    got = unitary_of(term_circuit(gates, n, has_ancilla=True))
    want = block_diag(np.eye(1 << n), expm(-1j * theta * walsh_operator_matrix(h, n)))
    assert np.max(np.abs(got - want)) < 1e-12


def test_control_zero_branch_is_identity_on_basis_states():
    from walsh_loader import Statevector, run

    rng = np.random.default_rng(9)
    for n in range(1, 5):
        for h in range(1, 1 << n):
            circuit = term_circuit(
                controlled_walsh_term(h, float(rng.uniform(0.1, 1.0)), n), n, has_ancilla=True
            )
            for k in range(1 << n):  # ancilla bit stays 0
                out = run(circuit, Statevector.basis(n + 1, k))
                want = np.zeros(1 << (n + 1), dtype=complex)
                want[k] = 1.0
                assert np.max(np.abs(out.amplitudes - want)) < 1e-12


# ---------------------------------------------------------------------------
# build_wsl_circuit


def ramp_spectrum(n=2):
    f = SampledFunction(n=n, values=np.arange(1, (1 << n) + 1, dtype=float))
    return walsh_transform(f, 1 << n)


def test_degenerate_single_term_circuit():
    from walsh_loader import WalshSpectrum

    spectrum = WalshSpectrum(coefficients=[0.6], n=2)
    circuit = build_wsl_circuit(spectrum, 2.0**-7, 2, "correct")
    kinds = [g.kind for g in circuit.gates]
    assert kinds == [GateKind.H, GateKind.H, GateKind.H, GateKind.P, GateKind.H, GateKind.P]
    assert circuit.gates[3].theta == pytest.approx(-(2.0**-7) * 0.6)
    assert circuit.gates[5].theta == pytest.approx(-math.pi / 2)


def test_modes_differ_by_exactly_one_gate():
    spectrum = ramp_spectrum()
    correct = build_wsl_circuit(spectrum, 0.01, 2, "correct")
    incomplete = build_wsl_circuit(spectrum, 0.01, 2, "incomplete")
    assert len(correct.gates) == len(incomplete.gates) + 1
    # Dropping the ancilla phase P(-eps0 a0) turns one into the other.
    trimmed = [g for g in correct.gates if g != Gate.phase(-0.01 * 0.625 * 4, 2)]
    missing = set(correct.gates) - set(incomplete.gates)
    assert len(missing) == 1
    (gate,) = missing
    assert gate.kind is GateKind.P and gate.targets == (correct.ancilla,)
    assert gate.theta == pytest.approx(-0.01 * float(spectrum.coefficients[0]))
    assert trimmed is not None


def test_gate_count_formula():
    for n, M in ((3, 8), (4, 16), (5, 8)):
        rng = np.random.default_rng(n)
        f = SampledFunction(n=n, values=rng.normal(size=1 << n))
        spectrum = walsh_transform(f, M)
        circuit = build_wsl_circuit(spectrum, 0.02, n, "correct")
        expected = (n + 1) + sum(2 * (h.bit_count() - 1) + 1 for h in range(1, M)) + 3
        assert len(circuit.gates) == expected
        incomplete = build_wsl_circuit(spectrum, 0.02, n, "incomplete")
        assert len(incomplete.gates) == expected - 1


def test_terms_commute_under_permutation():
    rng = np.random.default_rng(17)
    n, M = 3, 8
    f = SampledFunction(n=n, values=rng.normal(size=8))
    spectrum = walsh_transform(f, M)
    built = build_wsl_circuit(spectrum, 0.05, n, "correct")
    reference = unitary_of(built)
    for seed in (0, 1):
        order = list(range(1, M))
        np.random.default_rng(seed).shuffle(order)
        gates = [Gate.h(n)] + [Gate.h(q) for q in range(n)]
        for h in order:
            gates += controlled_walsh_term(h, 0.05 * float(spectrum.coefficients[h]), n)
        gates += [
            Gate.phase(-0.05 * float(spectrum.coefficients[0]), n),
            Gate.h(n),
            Gate.phase(-math.pi / 2, n),
        ]
        shuffled = Circuit(register_qubits=n, has_ancilla=True, gates=tuple(gates), mode="correct")
        assert np.max(np.abs(unitary_of(shuffled) - reference)) < 1e-10


def test_skip_zero_terms_flag_preserves_unitary():
    from walsh_loader import WalshSpectrum

    spectrum = WalshSpectrum(coefficients=[0.4, 0.0, 0.3, 0.0], n=2)
    full = build_wsl_circuit(spectrum, 0.1, 2, "correct")
    lean = build_wsl_circuit(spectrum, 0.1, 2, "correct", skip_zero_terms=True)
    assert len(lean.gates) < len(full.gates)
    assert np.max(np.abs(unitary_of(full) - unitary_of(lean))) < 1e-12


def test_builder_domain_errors():
    spectrum = ramp_spectrum()
    with pytest.raises(DomainError):
        build_wsl_circuit(spectrum, 0.01, 3, "correct")  # spectrum/n mismatch
    with pytest.raises(DomainError):
        build_wsl_circuit(spectrum, 0.0, 2, "correct")
    with pytest.raises(DomainError):
        build_wsl_circuit(spectrum, 0.01, 2, "sloppy")


def test_builder_matches_dense_oracle_end_to_end():
    spectrum = ramp_spectrum()
    circuit = build_wsl_circuit(spectrum, 0.03, 2, "correct")
    assert np.max(np.abs(unitary_of(circuit) - dense_unitary(circuit))) < 1e-12
