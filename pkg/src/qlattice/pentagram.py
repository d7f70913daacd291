"""The five-line pentagram in H(3) and its contextuality bounds.

Neighbouring lines are orthogonal, so any non-contextual model gives at
most 2 expected 'yes' answers.  Quantum states exceed this; the order
relation H_i ≤ H_{i+1}⊥ caps the total at 2.5.  The configuration below
reaches 5 × 0.437 ≈ 2.185.  The optimal pentagram (total √5) uses a
different set of lines and is not built here.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatch, ValidationError
from .independence import independence_matrix
from .lattice import Subspace, SubspaceFamily
from .numeric import DEFAULT_TOLERANCE, as_vector, hermitian_eigh
from .quasiprob import DensityMatrix

CLASSICAL_BOUND = 2.0
QUANTUM_BOUND = 2.5


def pentagram_states():
    return [
        np.array([1, 0, 0], dtype=complex),
        np.array([0, 1, 1], dtype=complex) / np.sqrt(2),
        np.array([1, 1, -1], dtype=complex) / np.sqrt(3),
        np.array([1, 1, 2], dtype=complex) / np.sqrt(6),
        np.array([0, -2, 1], dtype=complex) / np.sqrt(5),
    ]


def _validate_cycle(states, tol):
    states = [as_vector(s, f"state {i}") for i, s in enumerate(states)]
    if len(states) != 5 or any(len(s) != 3 for s in states):
        raise ValidationError("a pentagram needs exactly five vectors in H(3)")
    for i, s in enumerate(states):
        if abs(np.linalg.norm(s) - 1) > tol.eq_atol:
            raise ValidationError(f"state {i} is not normalized")
        if abs(np.vdot(s, states[(i + 1) % 5])) > tol.eq_atol:
            raise ValidationError(f"states {i} and {(i + 1) % 5} are not orthogonal")
    return states


def pentagram_family(states=None, tol=None) -> SubspaceFamily:
    tol = DEFAULT_TOLERANCE if tol is None else tol
    states = _validate_cycle(pentagram_states() if states is None else states, tol)
    return SubspaceFamily([Subspace.span([s]) for s in states], labels=[f"s{i}" for i in range(5)])


@dataclass(frozen=True)
class PentagramReport:
    probabilities: tuple
    total: float
    eta: float
    classical_bound_satisfied: bool
    quantum_bound_satisfied: bool
    A: np.ndarray
    eigenvalues: tuple
    max_violating_state: np.ndarray

    @property
    def violates_classical(self) -> bool:
        return not self.classical_bound_satisfied

    def to_dict(self):
        return {
            "probabilities": list(self.probabilities),
            "sum": self.total,
            "eta": self.eta,
            "classical_bound": CLASSICAL_BOUND,
            "classical_bound_normalized": CLASSICAL_BOUND / 5,
            "classical_bound_satisfied": self.classical_bound_satisfied,
            "quantum_bound": QUANTUM_BOUND,
            "quantum_bound_satisfied": self.quantum_bound_satisfied,
            "A": self.A,
            "eigenvalues": list(self.eigenvalues),
            "max_violating_state": self.max_violating_state,
        }


def _top_eigenvector(a, tol):
    w, v = hermitian_eigh(a, tol)
    top = v[:, -1]
    # fix the global phase so reports are reproducible
    k = int(np.argmax(np.abs(top)))
    top = top * (abs(top[k]) / top[k])
    return w, top


def pentagram_analysis(rho=None, states=None, tol=None) -> PentagramReport:
    """Probabilities, degree of independence and bound checks for state ``rho``.

    Without ``rho`` the maximally violating pure state is used.
    """
    tol = DEFAULT_TOLERANCE if tol is None else tol
    family = pentagram_family(states, tol)
    a = independence_matrix(family, tol)
    w, top = _top_eigenvector(a, tol)
    if rho is None:
        rho = DensityMatrix.pure(top)
    elif not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho, tol)
    if rho.dim != 3:
        raise DimensionMismatch(f"pentagram lives in H(3), got a {rho.dim}x{rho.dim} state")
    probs = tuple(rho.probability(m) for m in family)
    total = float(sum(probs))
    return PentagramReport(
        probabilities=probs,
        total=total,
        eta=total / 5,
        classical_bound_satisfied=total <= CLASSICAL_BOUND + tol.psd_atol,
        quantum_bound_satisfied=total <= QUANTUM_BOUND + tol.psd_atol,
        A=a,
        eigenvalues=tuple(float(x) for x in w),
        max_violating_state=top,
    )


def max_violation(states=None, tol=None):
    """Largest eigenvalue of (1/5) Σ Π(H_i) and its eigenvector."""
    tol = DEFAULT_TOLERANCE if tol is None else tol
    w, top = _top_eigenvector(independence_matrix(pentagram_family(states, tol), tol), tol)
    return float(w[-1]), top
