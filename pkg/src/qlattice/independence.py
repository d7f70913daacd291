"""Levels and degrees of independence and totalness for a subspace family."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .exceptions import DimensionMismatch, PreconditionError
from .lattice import (
    Subspace,
    SubspaceFamily,
    join,
    join_all,
    meet,
    meet_all,
    orthocomplement,
)
from .numeric import DEFAULT_TOLERANCE, as_vector, is_negative_semidefinite
from .quasiprob import _check_state, exclusive_part, extended_part, frak_H, profile


def _tol(tol):
    return DEFAULT_TOLERANCE if tol is None else tol


@dataclass(frozen=True)
class LevelReport:
    """Flags for the three levels of one hierarchy.

    ``witnesses`` maps each index i that breaks the full level to the
    offending subspace: frak_H(i) ∧ H_i for independence, or
    (frak_h(i) ∨ H_i)⊥ for totalness.  ``pair_witnesses`` lists the index
    pairs that break the pairwise level.
    """

    kind: str
    pairwise: bool
    full: bool
    weak: bool
    witnesses: dict = field(default_factory=dict, repr=False)
    pair_witnesses: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if self.full and not (self.pairwise and self.weak):
            raise AssertionError(f"inconsistent {self.kind} levels: full without pairwise/weak")

    def to_dict(self):
        return {"pairwise": self.pairwise, "full": self.full, "weak": self.weak}


@dataclass(frozen=True)
class DegreeReport:
    kind: str
    matrix: np.ndarray
    degree: float

    def to_dict(self):
        return {"kind": self.kind, "matrix": self.matrix, "degree": self.degree}


def independence_level(family: SubspaceFamily, tol=None) -> LevelReport:
    n = len(family)
    witnesses = {}
    for i in range(n):
        overlap = meet(frak_H(family, i, tol), family[i], tol)
        if not overlap.is_zero():
            witnesses[i] = overlap
    bad_pairs = tuple(
        (i, j) for i, j in combinations(range(n), 2)
        if not meet(family[i], family[j], tol).is_zero()
    )
    weak = meet_all(family, tol).is_zero()
    return LevelReport("independence", not bad_pairs, not witnesses, weak, witnesses, bad_pairs)


def totalness_level(family: SubspaceFamily, tol=None) -> LevelReport:
    n = len(family)
    witnesses = {}
    for i in range(n):
        ext = extended_part(family, i, tol)
        if not ext.is_full():
            witnesses[i] = orthocomplement(ext, tol)
    bad_pairs = tuple(
        (i, j) for i, j in combinations(range(n), 2)
        if not join(family[i], family[j], tol).is_full()
    )
    weak = join_all(family, tol).is_full()
    return LevelReport("totalness", not bad_pairs, not witnesses, weak, witnesses, bad_pairs)


def independence_matrix(family: SubspaceFamily, tol=None) -> np.ndarray:
    """(1/n) Σ [Π(H_i) − Π(frak_H(i)⊥ ∧ H_i)]."""
    def compute():
        terms = [m.projector - exclusive_part(family, i, tol).projector for i, m in enumerate(family)]
        return sum(terms) / len(family)
    return family.cached(("A", _tol(tol)), compute)


def totalness_matrix(family: SubspaceFamily, tol=None) -> np.ndarray:
    """(1/n) Σ [Π(frak_h(i) ∨ H_i) − Π(H_i)]."""
    def compute():
        terms = [extended_part(family, i, tol).projector - m.projector for i, m in enumerate(family)]
        return sum(terms) / len(family)
    return family.cached(("T", _tol(tol)), compute)


def degree_of_independence(family: SubspaceFamily, rho, tol=None) -> DegreeReport:
    rho = _check_state(family, rho)
    a = independence_matrix(family, tol)
    eta = rho.expectation(a)
    p = profile(family, rho, tol)
    via_profile = float(np.mean(np.subtract(p.R, p.R_tilde)))
    if abs(eta - via_profile) > 1e-9:
        raise AssertionError(f"trace formula {eta} and profile formula {via_profile} disagree")
    return DegreeReport("independence", a, eta)


def degree_of_totalness(family: SubspaceFamily, rho, tol=None) -> DegreeReport:
    rho = _check_state(family, rho)
    t = totalness_matrix(family, tol)
    eps = rho.expectation(t)
    p = profile(family, rho, tol)
    via_profile = float(np.mean(np.subtract(p.R_hat, p.R)))
    if abs(eps - via_profile) > 1e-9:
        raise AssertionError(f"trace formula {eps} and profile formula {via_profile} disagree")
    return DegreeReport("totalness", t, eps)


def compare_independence(s1: SubspaceFamily, s2: SubspaceFamily, tol=None) -> str:
    """Place two families in the independence preorder.

    Returns ``'more'`` when ``s1`` is strictly more independent than ``s2``
    (A1 − A2 negative semidefinite, not conversely), ``'less'`` for the
    reverse, ``'equivalent'`` when the degree matrices coincide and
    ``'incomparable'`` otherwise.  Equivalent families need not be equal.
    """
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionMismatch(f"families live in H({s1.ambient_dim}) and H({s2.ambient_dim})")
    diff = independence_matrix(s1, tol) - independence_matrix(s2, tol)
    le = is_negative_semidefinite(diff, tol)
    ge = is_negative_semidefinite(-diff, tol)
    if le and ge:
        return "equivalent"
    if le:
        return "more"
    if ge:
        return "less"
    return "incomparable"


def dual_family(family: SubspaceFamily, tol=None) -> SubspaceFamily:
    labels = None if family.labels is None else [f"{x}⊥" for x in family.labels]
    return SubspaceFamily([orthocomplement(m, tol) for m in family], labels=labels)


@dataclass(frozen=True)
class OrthogonalExpansion:
    projectors: tuple
    subspaces: tuple
    order: tuple

    def __len__(self):
        return len(self.projectors)


def orthogonal_expansion(family: SubspaceFamily, order=None, tol=None) -> OrthogonalExpansion:
    """Orthogonal resolution of the identity from successive joins.

    P_i = Π(H_1 ∨ ... ∨ H_i) − Π(H_1 ∨ ... ∨ H_{i−1}), taken in ``order``
    (default: family order).  Requires a weakly total, independent family.
    """
    order = tuple(range(len(family))) if order is None else tuple(order)
    if sorted(order) != list(range(len(family))):
        raise ValueError(f"order {order} is not a permutation of the family indices")
    ind = independence_level(family, tol)
    tot = totalness_level(family, tol)
    failing = [name for name, ok in (("independence", ind.full), ("weak totalness", tot.weak)) if not ok]
    if failing:
        raise PreconditionError(
            "orthogonal expansion needs a weakly total independent family; fails: " + ", ".join(failing)
        )
    d = family.ambient_dim
    acc = Subspace.zero(d)
    projectors, subspaces = [], []
    for step, i in enumerate(order):
        if step == len(order) - 1:
            grown = Subspace.full(d)
            piece = orthocomplement(acc, tol)
        else:
            grown = join(acc, family[i], tol)
            piece = meet(grown, orthocomplement(acc, tol), tol)
        projectors.append(grown.projector - acc.projector)
        subspaces.append(piece)
        acc = grown
    return OrthogonalExpansion(tuple(projectors), tuple(subspaces), order)


def expand_vector(expansion: OrthogonalExpansion, v):
    """Split ``v`` into orthogonal components P_i v.

    Returns a list of ``(weight, component)`` with weight = <v|P_i|v>.
    """
    v = as_vector(v)
    d = expansion.projectors[0].shape[0]
    if len(v) != d:
        raise DimensionMismatch(f"vector of length {len(v)} for an expansion of H({d})")
    out = []
    for p in expansion.projectors:
        comp = p @ v
        out.append((float(np.vdot(v, comp).real), comp))
    return out


def direct_sum_components(family: SubspaceFamily, v, tol=None):
    """Unique components v_i ∈ H_i with Σ v_i = v, for a weakly total independent family."""
    v = as_vector(v)
    if len(v) != family.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(v)} in H({family.ambient_dim})")
    if not (independence_level(family, tol).full and join_all(family, tol).is_full()):
        raise PreconditionError("direct-sum components need a weakly total independent family")
    stacked = np.hstack([m.basis for m in family])
    coeffs = np.linalg.solve(stacked, v)
    out, start = [], 0
    for m in family:
        out.append(m.basis @ coeffs[start:start + m.dim])
        start += m.dim
    return out
