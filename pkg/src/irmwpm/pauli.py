"""Pauli operators as X/Z support bit-vectors, with syndrome extraction.

Phases are not tracked: decoding only ever needs supports and commutation
parity.  A Y on qubit q means q is set in both supports, and it counts once
toward the weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, TYPE_CHECKING

if TYPE_CHECKING:
    from .lattice import Code


@dataclass(frozen=True)
class PauliOperator:
    """An n-qubit Pauli, stored as two integer bit masks."""

    n: int
    x_mask: int = 0
    z_mask: int = 0

    def __post_init__(self):
        limit = 1 << self.n
        if not (0 <= self.x_mask < limit and 0 <= self.z_mask < limit):
            raise ValueError("support mask exceeds qubit count")

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(n)

    @classmethod
    def from_supports(cls, n: int, x_qubits: Iterable[int] = (),
                      z_qubits: Iterable[int] = ()) -> "PauliOperator":
        x = 0
        for q in x_qubits:
            x |= 1 << q
        z = 0
        for q in z_qubits:
            z |= 1 << q
        return cls(n, x, z)

    @classmethod
    def from_string(cls, s: str) -> "PauliOperator":
        """Parse an "IXYZ" string indexed by qubit id."""
        x = z = 0
        for q, ch in enumerate(s):
            if ch in "XY":
                x |= 1 << q
            if ch in "ZY":
                z |= 1 << q
            if ch not in "IXYZ":
                raise ValueError(f"invalid Pauli letter {ch!r}")
        return cls(len(s), x, z)

    def to_string(self) -> str:
        out = []
        for q in range(self.n):
            bit = 1 << q
            x, z = bool(self.x_mask & bit), bool(self.z_mask & bit)
            out.append("Y" if x and z else "X" if x else "Z" if z else "I")
        return "".join(out)

    @property
    def x_support(self) -> frozenset:
        return frozenset(q for q in range(self.n) if self.x_mask >> q & 1)

    @property
    def z_support(self) -> frozenset:
        return frozenset(q for q in range(self.n) if self.z_mask >> q & 1)


@dataclass(frozen=True)
class Syndrome:
    """Lit vertex generators (primal nodes) and plaquette generators (dual)."""

    primal_nodes: frozenset
    dual_nodes: frozenset

    def __bool__(self) -> bool:
        return bool(self.primal_nodes or self.dual_nodes)


def compose(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Product of two Paulis up to phase: componentwise xor of supports."""
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} != {q.n}")
    return PauliOperator(p.n, p.x_mask ^ q.x_mask, p.z_mask ^ q.z_mask)


def weight(p: PauliOperator) -> int:
    """Number of non-identity qubit positions; Y counts once."""
    return (p.x_mask | p.z_mask).bit_count()


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    """True iff the symplectic overlap of p and q is even."""
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} != {q.n}")
    overlap = (p.x_mask & q.z_mask).bit_count() + (p.z_mask & q.x_mask).bit_count()
    return overlap % 2 == 0


def syndrome(code: "Code", p: PauliOperator) -> Syndrome:
    """Generators anticommuting with p, split by side.

    Vertex generators are X-type, so they are lit by the Z support; plaquette
    generators are Z-type and are lit by the X support.
    """
    if p.n != code.n_qubits:
        raise ValueError(f"operator sized for {p.n} qubits, code has {code.n_qubits}")
    primal = frozenset(
        i for i, g in enumerate(code.vertex_masks) if (g & p.z_mask).bit_count() & 1
    )
    dual = frozenset(
        i for i, g in enumerate(code.plaquette_masks) if (g & p.x_mask).bit_count() & 1
    )
    return Syndrome(primal, dual)
