"""Logical success check: is the residual error a stabilizer?

With one encoded qubit and an empty-syndrome residual, membership in the
stabilizer group is equivalent to commuting with both logical representatives,
which avoids a GF(2) solve per trial.
"""

from __future__ import annotations

from .lattice import Code
from .pauli import PauliOperator, commutes, compose, syndrome


def check_success(code: Code, error: PauliOperator,
                  correction: PauliOperator) -> bool:
    """True iff applying the correction leaves no logical error."""
    if syndrome(code, error) != syndrome(code, correction):
        raise ValueError("correction does not match the error syndrome")
    residual = compose(error, correction)
    return (commutes(residual, code.logical_x_op)
            and commutes(residual, code.logical_z_op))
