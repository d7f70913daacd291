"""The lattice of subspaces of H(d): meet, join, orthocomplement, order, commutation.

Subspaces are stored as an orthonormal basis.  Two subspaces are the same
when their projectors agree to ``eq_atol * sqrt(d)`` in Frobenius norm; the
basis itself is never compared.
"""
from __future__ import annotations

import numpy as np

from .exceptions import DimensionMismatch, ValidationError
from .numeric import (
    DEFAULT_TOLERANCE,
    as_matrix,
    as_vector,
    column_space,
    commutator_norm,
    nullspace,
    stack_columns,
)


def _tol(tol):
    return DEFAULT_TOLERANCE if tol is None else tol


class Subspace:
    """A subspace of H(d), held as a d x k matrix with orthonormal columns.

    ``k == 0`` is the zero subspace and ``k == d`` the whole space; both are
    ordinary values accepted by every operation.
    """

    __slots__ = ("basis", "_projector")

    def __init__(self, basis, tol=None):
        basis = as_matrix(basis, "basis")
        k = basis.shape[1]
        if k > basis.shape[0]:
            raise ValidationError(f"{k} basis vectors cannot be independent in dimension {basis.shape[0]}")
        gram = basis.conj().T @ basis
        if np.linalg.norm(gram - np.eye(k)) > _tol(tol).eq_atol:
            raise ValidationError("basis columns are not orthonormal; use Subspace.span")
        basis = basis.copy()
        basis.setflags(write=False)
        self.basis = basis
        self._projector = None

    @classmethod
    def _trusted(cls, basis):
        obj = cls.__new__(cls)
        basis = np.ascontiguousarray(basis, dtype=complex)
        basis.setflags(write=False)
        obj.basis = basis
        obj._projector = None
        return obj

    @classmethod
    def span(cls, vectors, dim=None, tol=None):
        """Subspace spanned by ``vectors`` (need not be independent or orthonormal)."""
        vectors = list(vectors)
        return cls._trusted(column_space(stack_columns(vectors, dim), tol))

    @classmethod
    def from_matrix(cls, m, tol=None):
        """Column space of the matrix ``m``."""
        return cls._trusted(column_space(m, tol))

    @classmethod
    def zero(cls, d):
        return cls._trusted(np.zeros((d, 0), dtype=complex))

    @classmethod
    def full(cls, d):
        return cls._trusted(np.eye(d, dtype=complex))

    @classmethod
    def coordinate(cls, d, indices):
        """Span of the standard basis vectors e_i for i in ``indices``."""
        eye = np.eye(d, dtype=complex)
        return cls._trusted(eye[:, sorted(set(indices))])

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def projector(self) -> np.ndarray:
        if self._projector is None:
            p = self.basis @ self.basis.conj().T
            p.setflags(write=False)
            self._projector = p
        return self._projector

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def is_proper(self) -> bool:
        return 0 < self.dim < self.ambient_dim

    def contains(self, vector, tol=None) -> bool:
        v = as_vector(vector)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in H({self.ambient_dim})")
        residual = np.linalg.norm(v - self.projector @ v)
        return residual <= _tol(tol).eq_atol * max(1.0, np.linalg.norm(v))

    def isclose(self, other, tol=None) -> bool:
        return subspace_equal(self, other, tol)

    def __or__(self, other):
        return join(self, other)

    def __and__(self, other):
        return meet(self, other)

    def __invert__(self):
        return orthocomplement(self)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


def _check_same(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(
            f"subspaces live in H({a.ambient_dim}) and H({b.ambient_dim})"
        )


def join(a: Subspace, b: Subspace, tol=None) -> Subspace:
    """span(a U b)."""
    _check_same(a, b)
    if a.dim == 0:
        return b
    if b.dim == 0:
        return a
    return Subspace._trusted(column_space(np.hstack([a.basis, b.basis]), tol))


def orthocomplement(a: Subspace, tol=None) -> Subspace:
    d = a.ambient_dim
    if a.dim == 0:
        return Subspace.full(d)
    if a.dim == d:
        return Subspace.zero(d)
    # orthonormal basis: the nullspace of basis^dagger has exactly d - k columns
    return Subspace._trusted(nullspace(a.basis.conj().T, tol))


def meet(a: Subspace, b: Subspace, tol=None) -> Subspace:
    """a ∩ b, computed as (a⊥ ∨ b⊥)⊥ so that one rank primitive decides everything."""
    _check_same(a, b)
    return orthocomplement(join(orthocomplement(a, tol), orthocomplement(b, tol), tol), tol)


def join_all(subspaces, tol=None) -> Subspace:
    subspaces = list(subspaces)
    if not subspaces:
        raise ValidationError("join of an empty collection is undefined without a dimension")
    for s in subspaces[1:]:
        _check_same(subspaces[0], s)
    nonzero = [s.basis for s in subspaces if s.dim]
    if not nonzero:
        return subspaces[0]
    return Subspace._trusted(column_space(np.hstack(nonzero), tol))


def meet_all(subspaces, tol=None) -> Subspace:
    subspaces = list(subspaces)
    if not subspaces:
        raise ValidationError("meet of an empty collection is undefined without a dimension")
    return orthocomplement(join_all([orthocomplement(s, tol) for s in subspaces], tol), tol)


def projector_distance(a: Subspace, b: Subspace) -> float:
    _check_same(a, b)
    return float(np.linalg.norm(a.projector - b.projector))


def subspace_equal(a: Subspace, b: Subspace, tol=None) -> bool:
    _check_same(a, b)
    if a.dim != b.dim:
        return False
    return projector_distance(a, b) <= _tol(tol).eq_atol * np.sqrt(a.ambient_dim)


def leq(a: Subspace, b: Subspace, tol=None) -> bool:
    """Partial order of the lattice: a is a subspace of b."""
    _check_same(a, b)
    if a.dim > b.dim:
        return False
    pa = a.projector
    return bool(np.linalg.norm(b.projector @ pa - pa) <= _tol(tol).eq_atol * np.sqrt(a.ambient_dim))


def commutes_by_reconstruction(a: Subspace, b: Subspace, tol=None) -> bool:
    """Lattice-theoretic commutation: a = (a ∧ b) ∨ (a ∧ b⊥)."""
    rebuilt = join(meet(a, b, tol), meet(a, orthocomplement(b, tol), tol), tol)
    return subspace_equal(a, rebuilt, tol)


def commutes(a: Subspace, b: Subspace, tol=None, cross_check=False) -> bool:
    """True iff the projectors onto ``a`` and ``b`` commute.

    With ``cross_check`` the answer is compared with the reconstruction
    criterion and an AssertionError is raised when the two disagree.
    """
    _check_same(a, b)
    result = commutator_norm(a.projector, b.projector) <= _tol(tol).eq_atol
    if cross_check:
        assert result == commutes_by_reconstruction(a, b, tol), (
            "projector commutator and lattice reconstruction disagree"
        )
    return result


def distributes(a: Subspace, b: Subspace, c: Subspace, tol=None) -> bool:
    """Whether a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) holds for this triple."""
    lhs = meet(a, join(b, c, tol), tol)
    rhs = join(meet(a, b, tol), meet(a, c, tol), tol)
    return subspace_equal(lhs, rhs, tol)


class SubspaceFamily:
    """An ordered family {H_0, ..., H_{n-1}} of n >= 2 proper subspaces of H(d).

    Indices are 0-based.  Families are immutable; derived subspaces used by
    the quasi-probability and degree computations are cached per instance.
    """

    def __init__(self, members, labels=None):
        members = tuple(members)
        if len(members) < 2:
            raise ValidationError(f"a family needs at least 2 members, got {len(members)}")
        d = members[0].ambient_dim
        for i, m in enumerate(members):
            if not isinstance(m, Subspace):
                raise ValidationError(f"member {i} is not a Subspace")
            if m.ambient_dim != d:
                raise DimensionMismatch(f"member {i} lives in H({m.ambient_dim}), expected H({d})")
            if not m.is_proper():
                raise ValidationError(
                    f"member {i} is not a proper subspace (dim {m.dim} in H({d})); "
                    "families require 0 < dim < d"
                )
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != len(members):
                raise ValidationError("labels must match the number of members")
        self.members = members
        self.labels = labels
        self._cache = {}

    @classmethod
    def from_vectors(cls, groups, dim=None, tol=None, labels=None):
        """Build a family from lists of spanning vectors, one list per member."""
        return cls([Subspace.span(g, dim, tol) for g in groups], labels=labels)

    @property
    def ambient_dim(self) -> int:
        return self.members[0].ambient_dim

    @property
    def dims(self):
        return [m.dim for m in self.members]

    def __len__(self):
        return len(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def __iter__(self):
        return iter(self.members)

    def __repr__(self):
        return f"SubspaceFamily(n={len(self)}, ambient_dim={self.ambient_dim}, dims={self.dims})"

    def cached(self, key, compute):
        # concurrent first fills compute the same value; last write wins harmlessly
        try:
            return self._cache[key]
        except KeyError:
            value = compute()
            self._cache[key] = value
            return value

    def subfamily(self, indices) -> "SubspaceFamily":
        indices = list(indices)
        labels = None if self.labels is None else [self.labels[i] for i in indices]
        return SubspaceFamily([self.members[i] for i in indices], labels=labels)
