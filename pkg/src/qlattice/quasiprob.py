"""Quasi-probability distributions R, R_tilde and R_hat of a subspace family."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatch, InvalidStateError, ValidationError
from .lattice import (
    Subspace,
    SubspaceFamily,
    join,
    join_all,
    meet,
    meet_all,
    orthocomplement,
)
from .numeric import DEFAULT_TOLERANCE, as_matrix, as_vector


def _tol(tol):
    return DEFAULT_TOLERANCE if tol is None else tol


class DensityMatrix:
    """A d x d Hermitian, positive semidefinite, unit-trace matrix."""

    __slots__ = ("matrix",)

    def __init__(self, matrix, tol=None):
        tol = _tol(tol)
        try:
            m = as_matrix(matrix, "density matrix")
        except ValidationError as exc:
            raise InvalidStateError(str(exc)) from None
        if m.shape[0] != m.shape[1]:
            raise InvalidStateError(f"density matrix must be square, got shape {m.shape}")
        if np.linalg.norm(m - m.conj().T) > tol.eq_atol:
            raise InvalidStateError("density matrix is not Hermitian")
        m = (m + m.conj().T) / 2
        trace = np.trace(m).real
        if abs(trace - 1.0) > tol.eq_atol:
            raise InvalidStateError(f"density matrix has trace {trace:.12g}, expected 1")
        lowest = np.linalg.eigvalsh(m)[0]
        if lowest < -tol.psd_atol:
            raise InvalidStateError(f"density matrix has negative eigenvalue {lowest:.3g}")
        m.setflags(write=False)
        self.matrix = m

    @classmethod
    def pure(cls, vector, normalize=True, tol=None):
        v = as_vector(vector, "state vector")
        norm = np.linalg.norm(v)
        if norm == 0:
            raise InvalidStateError("state vector is zero")
        if normalize:
            v = v / norm
        return cls(np.outer(v, v.conj()), tol)

    @classmethod
    def maximally_mixed(cls, d):
        return cls(np.eye(d, dtype=complex) / d)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def expectation(self, operator) -> float:
        """Tr(rho * operator), real part."""
        return float(np.trace(self.matrix @ operator).real)

    def probability(self, subspace: Subspace) -> float:
        if subspace.ambient_dim != self.dim:
            raise DimensionMismatch(f"state in H({self.dim}), subspace in H({subspace.ambient_dim})")
        b = subspace.basis
        return float(np.trace(b.conj().T @ self.matrix @ b).real)


def _check_index(family, i):
    if not (-len(family) <= i < len(family)) or isinstance(i, bool):
        raise IndexError(f"index {i} out of range for a family of {len(family)} members")
    return i % len(family)


def frak_H(family: SubspaceFamily, i: int, tol=None) -> Subspace:
    """Join of every member except the i-th."""
    i = _check_index(family, i)
    key = ("frak_H", i, _tol(tol))
    return family.cached(
        key, lambda: join_all([m for j, m in enumerate(family) if j != i], tol)
    )


def frak_h(family: SubspaceFamily, i: int, tol=None) -> Subspace:
    """Meet of every member except the i-th."""
    i = _check_index(family, i)
    key = ("frak_h", i, _tol(tol))
    return family.cached(
        key, lambda: meet_all([m for j, m in enumerate(family) if j != i], tol)
    )


def exclusive_part(family: SubspaceFamily, i: int, tol=None) -> Subspace:
    """The part of H_i orthogonal to every other member: frak_H(i)⊥ ∧ H_i."""
    i = _check_index(family, i)
    key = ("exclusive", i, _tol(tol))
    return family.cached(
        key, lambda: meet(orthocomplement(frak_H(family, i, tol), tol), family[i], tol)
    )


def extended_part(family: SubspaceFamily, i: int, tol=None) -> Subspace:
    """H_i joined with what all other members share: frak_h(i) ∨ H_i."""
    i = _check_index(family, i)
    key = ("extended", i, _tol(tol))
    return family.cached(key, lambda: join(frak_h(family, i, tol), family[i], tol))


@dataclass(frozen=True)
class QuasiProbProfile:
    R: tuple
    R_tilde: tuple
    R_hat: tuple

    def to_dict(self):
        return {"R": list(self.R), "R_tilde": list(self.R_tilde), "R_hat": list(self.R_hat)}

    def check_ordering(self, tol=None) -> bool:
        slack = _tol(tol).psd_atol
        return all(
            -slack <= t <= r + slack and r <= h + slack and h <= 1 + slack
            for t, r, h in zip(self.R_tilde, self.R, self.R_hat)
        )


def _check_state(family, rho):
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho)
    if rho.dim != family.ambient_dim:
        raise DimensionMismatch(
            f"density matrix is {rho.dim}x{rho.dim} but the family lives in H({family.ambient_dim})"
        )
    return rho


def profile(family: SubspaceFamily, rho, tol=None) -> QuasiProbProfile:
    rho = _check_state(family, rho)
    n = len(family)
    R = tuple(rho.probability(family[i]) for i in range(n))
    R_tilde = tuple(rho.probability(exclusive_part(family, i, tol)) for i in range(n))
    R_hat = tuple(rho.probability(extended_part(family, i, tol)) for i in range(n))
    return QuasiProbProfile(R, R_tilde, R_hat)
