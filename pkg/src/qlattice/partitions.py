"""Partitions of H(d) into affine blocks and informational independence.

A partition is stored by its defining subspace H: the blocks are the sets
v + H with v in H⊥.  Blocks form a continuum, so they are never enumerated;
a vector's block is identified by its projection onto H⊥.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatch, ValidationError
from .lattice import Subspace, SubspaceFamily, join, leq, meet, orthocomplement
from .numeric import DEFAULT_TOLERANCE, as_vector
from .quasiprob import frak_H


def _tol(tol):
    return DEFAULT_TOLERANCE if tol is None else tol


@dataclass(frozen=True)
class Partition:
    defining_subspace: Subspace

    @property
    def ambient_dim(self) -> int:
        return self.defining_subspace.ambient_dim

    def block_label(self, vector) -> np.ndarray:
        """The representative v ∈ H⊥ of the block containing ``vector``."""
        v = as_vector(vector)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in H({self.ambient_dim})")
        return v - self.defining_subspace.projector @ v

    def same_block(self, u, v, tol=None) -> bool:
        return bool(np.linalg.norm(self.block_label(u) - self.block_label(v)) <= _tol(tol).eq_atol)

    def isclose(self, other, tol=None) -> bool:
        return self.defining_subspace.isclose(other.defining_subspace, tol)


def _check_same(p1, p2):
    if p1.ambient_dim != p2.ambient_dim:
        raise DimensionMismatch(f"partitions of H({p1.ambient_dim}) and H({p2.ambient_dim})")


# the partition lattice is dual to the subspace lattice: join and meet swap

def partition_join(p1: Partition, p2: Partition, tol=None) -> Partition:
    _check_same(p1, p2)
    return Partition(meet(p1.defining_subspace, p2.defining_subspace, tol))


def partition_meet(p1: Partition, p2: Partition, tol=None) -> Partition:
    _check_same(p1, p2)
    return Partition(join(p1.defining_subspace, p2.defining_subspace, tol))


def partition_complement(p: Partition, tol=None) -> Partition:
    return Partition(orthocomplement(p.defining_subspace, tol))


def partition_leq(p1: Partition, p2: Partition, tol=None) -> bool:
    """Refinement order: p1 ≺ p2 iff H2 ≤ H1."""
    _check_same(p1, p2)
    return leq(p2.defining_subspace, p1.defining_subspace, tol)


def block_intersection_witness(h1: Subspace, v1, h2: Subspace, v2, tol=None):
    """A vector in (v1 + h1⊥) ∩ (v2 + h2⊥), or None when the blocks are disjoint.

    Solves a2 − a1 = v1 − v2 with a1 ∈ h1⊥, a2 ∈ h2⊥ by minimum-norm least
    squares and accepts the solution when the residual is negligible.
    """
    tol = _tol(tol)
    if h1.ambient_dim != h2.ambient_dim:
        raise DimensionMismatch(f"subspaces live in H({h1.ambient_dim}) and H({h2.ambient_dim})")
    v1, v2 = as_vector(v1, "v1"), as_vector(v2, "v2")
    if not h1.contains(v1, tol):
        raise ValidationError("v1 does not lie in h1")
    if not h2.contains(v2, tol):
        raise ValidationError("v2 does not lie in h2")
    n1 = orthocomplement(h1, tol).basis
    n2 = orthocomplement(h2, tol).basis
    rhs = v1 - v2
    system = np.hstack([-n1, n2])
    if system.shape[1] == 0:
        x = np.zeros(0, dtype=complex)
    else:
        x = np.linalg.lstsq(system, rhs, rcond=None)[0]
    residual = np.linalg.norm(system @ x - rhs)
    if residual > tol.eq_atol * (1 + np.linalg.norm(rhs)):
        return None
    a1 = n1 @ x[: n1.shape[1]]
    return v1 + a1


def informationally_independent_pair(h1: Subspace, h2: Subspace, tol=None) -> bool:
    """Every block v1 + h1⊥ meets every block v2 + h2⊥.

    Equivalent to h1 ∨ h2 being contained in h1⊥ ∨ h2⊥, since v1 − v2 ranges
    over all of h1 ∨ h2.
    """
    return leq(join(h1, h2, tol), join(orthocomplement(h1, tol), orthocomplement(h2, tol), tol), tol)


def informationally_independent(family: SubspaceFamily, tol=None) -> bool:
    return all(
        informationally_independent_pair(frak_H(family, i, tol), family[i], tol)
        for i in range(len(family))
    )


@dataclass(frozen=True)
class Collapse:
    p_yes: float
    state_yes: np.ndarray | None
    p_no: float
    state_no: np.ndarray | None


def measurement_collapse(state, subspace: Subspace, tol=None) -> Collapse:
    """Outcome probabilities and post-measurement states of Π(subspace) on a pure state."""
    s = as_vector(state, "state")
    if len(s) != subspace.ambient_dim:
        raise DimensionMismatch(f"state of length {len(s)} in H({subspace.ambient_dim})")
    norm = np.linalg.norm(s)
    if norm == 0:
        raise ValidationError("state vector is zero")
    s = s / norm
    yes = subspace.projector @ s
    no = s - yes
    p_yes = float(np.vdot(yes, yes).real)
    p_no = float(np.vdot(no, no).real)
    eps = _tol(tol).psd_atol
    return Collapse(
        p_yes,
        yes / np.sqrt(p_yes) if p_yes > eps else None,
        p_no,
        no / np.sqrt(p_no) if p_no > eps else None,
    )
