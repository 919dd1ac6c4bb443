"""Tableau simulation, cross-backend agreement, and vector conjugation."""

from __future__ import annotations

import numpy as np
import pytest

import helpers
from stabent import (
    Circuit,
    SympVec,
    conjugate_vector,
    from_pauli_string,
    is_isotropic,
    random_clifford_circuit,
    simulate_circuit,
    simulate_clifford,
    symplectic_product,
    to_pauli_string,
    weyl_group_from_tableau,
    weyl_group_oracle,
)


def test_empty_circuit():
    tab = simulate_clifford(Circuit.from_ops(3))
    assert [to_pauli_string(v) for v in tab.rows] == ["ZII", "IZI", "IIZ"]
    assert tab.signs == (0, 0, 0)


def test_h_gate():
    tab = simulate_clifford(Circuit.from_ops(1, ("H", 1)))
    assert to_pauli_string(tab.rows[0]) == "X"
    assert tab.signs == (0,)


def test_epr():
    tab = simulate_clifford(Circuit.from_ops(2, ("H", 1), ("CNOT", 1, 2)))
    assert {to_pauli_string(v) for v in tab.rows} == {"XX", "ZZ"}
    assert tab.signs == (0, 0)


def test_rejects_non_clifford():
    with pytest.raises(ValueError):
        simulate_clifford(Circuit.from_ops(1, ("T", 1)))


def test_rows_isotropic_and_full_rank():
    rng = np.random.default_rng(20)
    for _ in range(20):
        n = int(rng.integers(1, 9))
        tab = simulate_clifford(random_clifford_circuit(n, rng))
        group = weyl_group_from_tableau(tab)
        assert group.provenance == "tableau"
        assert group.dim == n
        assert is_isotropic(group.subspace)


def test_rows_stay_valid_after_every_gate():
    # the Tableau constructor enforces commuting rank-n rows, so building
    # the tableau of every circuit prefix checks the invariant gate by gate
    rng = np.random.default_rng(25)
    circ = random_clifford_circuit(5, rng, n_gates=40)
    for cutoff in range(len(circ.gates) + 1):
        simulate_clifford(Circuit(5, circ.gates[:cutoff]))


def test_group_matches_dense_oracle():
    rng = np.random.default_rng(21)
    for _ in range(25):
        n = int(rng.integers(1, 7))
        circ = random_clifford_circuit(n, rng)
        from_tableau = weyl_group_from_tableau(simulate_clifford(circ))
        from_dense = weyl_group_oracle(simulate_circuit(circ))
        assert from_tableau.subspace == from_dense.subspace


def test_signed_generators_stabilize_dense_state():
    # (-1)^sign W_row |psi> = |psi> pins the tracked sign convention
    # (rows carry literal Y at a=b=1 positions, i.e. the i^(a.b) phase).
    rng = np.random.default_rng(22)
    for _ in range(15):
        n = int(rng.integers(1, 5))
        circ = random_clifford_circuit(n, rng)
        tab = simulate_clifford(circ)
        psi = simulate_circuit(circ)
        for row, sign in zip(tab.rows, tab.signs):
            applied = helpers.weyl_matrix(row) @ psi.amplitudes
            assert np.allclose((-1.0) ** sign * applied, psi.amplitudes, atol=1e-10)


def test_conjugate_examples():
    h = Circuit.from_ops(1, ("H", 1))
    assert conjugate_vector(h, from_pauli_string("X")) == from_pauli_string("Z")
    cnot = Circuit.from_ops(2, ("CNOT", 1, 2))
    assert conjugate_vector(cnot, from_pauli_string("XI")) == from_pauli_string("XX")


def test_conjugate_preserves_product_and_addition():
    rng = np.random.default_rng(23)
    for _ in range(30):
        n = int(rng.integers(1, 7))
        circ = random_clifford_circuit(n, rng)
        x = SympVec(n, helpers.rand_bits(rng, 2 * n))
        y = SympVec(n, helpers.rand_bits(rng, 2 * n))
        cx, cy = conjugate_vector(circ, x), conjugate_vector(circ, y)
        assert symplectic_product(cx, cy) == symplectic_product(x, y)
        assert conjugate_vector(circ, x ^ y) == cx ^ cy


def test_conjugate_matches_dense_conjugation():
    # W_{C(x)} = +- C W_x C^dagger, checked against explicit matrices
    rng = np.random.default_rng(24)
    for _ in range(10):
        n = int(rng.integers(1, 4))
        circ = random_clifford_circuit(n, rng, n_gates=8)
        u = helpers.matrix_simulate_unitary(circ)
        x = SympVec(n, helpers.rand_bits(rng, 2 * n))
        conjugated = u @ helpers.weyl_matrix(x) @ u.conj().T
        want = helpers.weyl_matrix(conjugate_vector(circ, x))
        ratio = conjugated @ np.linalg.inv(want)
        assert np.allclose(ratio, ratio[0, 0] * np.eye(1 << n), atol=1e-10)
        assert abs(abs(ratio[0, 0]) - 1.0) < 1e-10
        assert abs(ratio[0, 0].imag) < 1e-10  # sign only, never +-i


def test_gate_index_validation():
    with pytest.raises(ValueError):
        Circuit.from_ops(2, ("CNOT", 1, 5))
    with pytest.raises(ValueError):
        Circuit.from_ops(2, ("Q", 1))
