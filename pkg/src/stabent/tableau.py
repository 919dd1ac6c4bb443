"""Stabilizer tableau backend for pure Clifford circuits at large n.

The tableau stores one n-bit column per qubit per half (X and Z), packed in
Python ints over the generator index, so each gate is an O(n)-bit column
update. Signs are tracked through every gate with the textbook update rules
but nothing downstream consumes them: the unsigned stabilizer group is all
the estimator needs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuits import Circuit
from .symplectic import Subspace, SympVec, _product_bits, span
from .weyl import StabilizerGroupEstimate

__all__ = [
    "Tableau",
    "conjugate_vector",
    "simulate_clifford",
    "weyl_group_from_tableau",
]


@dataclass(frozen=True)
class Tableau:
    """Stabilizer generators of an n-qubit state: n rows plus sign bits."""

    n: int
    rows: tuple[SympVec, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n or len(self.signs) != self.n:
            raise ValueError("tableau needs exactly n generator rows and signs")
        bits = [v.bits for v in self.rows]
        for i in range(self.n):
            if self.rows[i].n != self.n:
                raise ValueError("generator row has wrong qubit count")
            for j in range(i):
                if _product_bits(bits[i], bits[j], self.n):
                    raise ValueError("tableau generators must commute")
        if Subspace.from_bit_rows(self.n, bits).rank != self.n:
            raise ValueError("tableau generators must be independent")


def simulate_clifford(c: Circuit) -> Tableau:
    """Tableau of C|0^n> for a Clifford-only circuit."""
    if c.t:
        raise ValueError("tableau backend takes Clifford gates only")
    n = c.n
    mask = (1 << n) - 1
    # Column q holds that qubit's coordinate across all n generators.
    x = [0] * (n + 1)
    z = [0] * (n + 1)
    for i in range(n):
        z[i + 1] = 1 << i  # generator i starts as Z on qubit i+1
    s = 0
    for g in c.gates:
        if g.name == "H":
            (q,) = g.qubits
            s ^= x[q] & z[q]
            x[q], z[q] = z[q], x[q]
        elif g.name == "S":
            (q,) = g.qubits
            s ^= x[q] & z[q]
            z[q] ^= x[q]
        elif g.name == "CNOT":
            qc, qt = g.qubits
            s ^= x[qc] & z[qt] & ~(x[qt] ^ z[qc]) & mask
            x[qt] ^= x[qc]
            z[qc] ^= z[qt]
        elif g.name == "X":
            s ^= z[g.qubits[0]]
        elif g.name == "Y":
            s ^= x[g.qubits[0]] ^ z[g.qubits[0]]
        elif g.name == "Z":
            s ^= x[g.qubits[0]]
        else:
            raise ValueError(f"unknown Clifford gate {g.name!r}")
    rows = []
    for i in range(n):
        bits = 0
        for q in range(1, n + 1):
            bits |= ((x[q] >> i) & 1) << (n - q)
            bits |= ((z[q] >> i) & 1) << (2 * n - q)
        rows.append(SympVec(n, bits))
    signs = tuple((s >> i) & 1 for i in range(n))
    return Tableau(n, tuple(rows), signs)


def weyl_group_from_tableau(t: Tableau) -> StabilizerGroupEstimate:
    """Span of the generator rows with signs dropped; dim is exactly n."""
    return StabilizerGroupEstimate(span(t.rows, n=t.n), "tableau")


def conjugate_vector(c: Circuit, v: SympVec) -> SympVec:
    """C(v): the packed vector of C W_v C^dagger, phase discarded.

    Preserves symplectic products and distributes over addition.
    """
    if c.t:
        raise ValueError("conjugation is defined for Clifford circuits only")
    if c.n != v.n:
        raise ValueError(f"qubit count mismatch: {c.n} vs {v.n}")
    n = c.n
    bits = v.bits
    for g in c.gates:
        if g.name == "CNOT":
            qc, qt = g.qubits
            ac, bt = 1 << (n - qc), 1 << (2 * n - qt)
            if bits & ac:
                bits ^= 1 << (n - qt)
            if bits & bt:
                bits ^= 1 << (2 * n - qc)
            continue
        (q,) = g.qubits
        abit, bbit = 1 << (n - q), 1 << (2 * n - q)
        if g.name == "H":
            a_set, b_set = bits & abit, bits & bbit
            bits &= ~(abit | bbit)
            if a_set:
                bits |= bbit
            if b_set:
                bits |= abit
        elif g.name == "S":
            if bits & abit:
                bits ^= bbit
        # X, Y, Z only change phases, never the packed vector.
    return SympVec(n, bits)
