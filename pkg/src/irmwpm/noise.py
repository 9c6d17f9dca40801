"""Seeded error sampling for depolarizing and independent-X/Z channels.

Randomness comes from numpy's PCG64 via ``default_rng``; per-trial generators
are derived as ``default_rng([base_seed, trial_index])`` so trials are
reproducible and order-independent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .pauli import PauliOperator


class NoiseKind(enum.Enum):
    DEPOLARIZING = "depolarizing"
    INDEPENDENT_XZ = "independent_xz"


@dataclass(frozen=True)
class NoiseModel:
    kind: NoiseKind
    epsilon: float = 0.0   # depolarizing strength
    p_x: float = 0.0       # independent-XZ marginals
    p_z: float = 0.0

    def __post_init__(self):
        for name in ("epsilon", "p_x", "p_z"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} out of range: {p}")

    @classmethod
    def depolarizing(cls, epsilon: float) -> "NoiseModel":
        return cls(NoiseKind.DEPOLARIZING, epsilon=epsilon)

    @classmethod
    def independent_xz(cls, p_x: float, p_z: float) -> "NoiseModel":
        return cls(NoiseKind.INDEPENDENT_XZ, p_x=p_x, p_z=p_z)


def trial_rng(base_seed: int, trial_index: int) -> np.random.Generator:
    """Deterministic per-trial generator, independent of execution order."""
    return np.random.default_rng([base_seed, trial_index])


def _mask(bits: np.ndarray) -> int:
    m = 0
    for q in np.flatnonzero(bits):
        m |= 1 << int(q)
    return m


def sample(model: NoiseModel, n: int, rng: np.random.Generator) -> PauliOperator:
    """Draw one n-qubit error.

    Depolarizing: each qubit independently stays clean with probability
    1-epsilon, else becomes X, Y, or Z with probability epsilon/3 each
    (so P(X-bit | Z-bit) = 1/2).
    """
    if model.kind is NoiseKind.DEPOLARIZING:
        eps = model.epsilon
        u = rng.random(n)
        x_bits = u < 2 * eps / 3            # X or Y
        z_bits = (u >= eps / 3) & (u < eps)  # Y or Z
    else:
        x_bits = rng.random(n) < model.p_x
        z_bits = rng.random(n) < model.p_z
    return PauliOperator(n, _mask(x_bits), _mask(z_bits))
