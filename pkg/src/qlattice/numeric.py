"""Dense complex linear algebra kernel with a single tolerance policy.

Every rank decision in the package goes through :func:`numerical_rank`
(singular values above ``rank_rtol * sigma_max``), so the lattice operations
built on top make consistent dimension decisions.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatch, ValidationError


@dataclass(frozen=True)
class TolerancePolicy:
    rank_rtol: float = 1e-10
    eq_atol: float = 1e-9
    psd_atol: float = 1e-9

    def __post_init__(self):
        for name in ("rank_rtol", "eq_atol", "psd_atol"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise ValidationError(f"{name} must be a positive finite number, got {value!r}")
        if self.rank_rtol >= 1e-3:
            raise ValidationError(f"rank_rtol must be < 1e-3, got {self.rank_rtol!r}")

    def replace(self, **overrides) -> "TolerancePolicy":
        fields = {
            "rank_rtol": self.rank_rtol,
            "eq_atol": self.eq_atol,
            "psd_atol": self.psd_atol,
        }
        fields.update({k: v for k, v in overrides.items() if v is not None})
        return TolerancePolicy(**fields)


DEFAULT_TOLERANCE = TolerancePolicy()

TOLERANCE_PROFILES = {
    "default": DEFAULT_TOLERANCE,
    "strict": TolerancePolicy(rank_rtol=1e-12, eq_atol=1e-11, psd_atol=1e-11),
    "loose": TolerancePolicy(rank_rtol=1e-8, eq_atol=1e-7, psd_atol=1e-7),
}

PROFILE_ENV_VAR = "QLATTICE_TOLERANCE_PROFILE"


def tolerance_from_env(environ=None) -> TolerancePolicy:
    """Return the profile named by ``QLATTICE_TOLERANCE_PROFILE`` (default if unset)."""
    environ = os.environ if environ is None else environ
    name = environ.get(PROFILE_ENV_VAR, "default").strip().lower() or "default"
    try:
        return TOLERANCE_PROFILES[name]
    except KeyError:
        known = ", ".join(sorted(TOLERANCE_PROFILES))
        raise ValidationError(
            f"unknown tolerance profile {name!r} in {PROFILE_ENV_VAR}; known: {known}"
        ) from None


def _tol(tol):
    return DEFAULT_TOLERANCE if tol is None else tol


def as_matrix(m, name="matrix") -> np.ndarray:
    """Validate and return ``m`` as a finite 2-D complex array."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise ValidationError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} contains NaN or Inf entries")
    return arr


def as_vector(v, name="vector") -> np.ndarray:
    arr = np.asarray(v, dtype=complex)
    if arr.ndim != 1:
        raise ValidationError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} contains NaN or Inf entries")
    return arr


def stack_columns(vectors, dim=None) -> np.ndarray:
    """Stack a sequence of d-vectors as the columns of a d x k matrix."""
    vectors = [as_vector(v, f"vector {i}") for i, v in enumerate(vectors)]
    if not vectors:
        if dim is None:
            raise ValidationError("cannot infer the dimension of an empty vector list")
        return np.zeros((dim, 0), dtype=complex)
    lengths = {len(v) for v in vectors}
    if len(lengths) != 1 or (dim is not None and lengths != {dim}):
        raise DimensionMismatch(f"vectors have inconsistent lengths {sorted(lengths)}")
    return np.column_stack(vectors)


def numerical_rank(singular_values, tol=None) -> int:
    tol = _tol(tol)
    s = np.asarray(singular_values)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol.rank_rtol * s[0]))


def matrix_rank(m, tol=None) -> int:
    m = as_matrix(m)
    if 0 in m.shape:
        return 0
    return numerical_rank(np.linalg.svd(m, compute_uv=False), tol)


def column_space(m, tol=None) -> np.ndarray:
    """Orthonormal basis (d x k) for the column space of ``m``.

    The columns are left singular vectors; their order and phases are those
    of the SVD and carry no meaning.
    """
    m = as_matrix(m)
    d, n = m.shape
    if n == 0:
        return np.zeros((d, 0), dtype=complex)
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    return u[:, : numerical_rank(s, tol)]


def nullspace(m, tol=None) -> np.ndarray:
    """Orthonormal basis (n x (n - rank)) for the right nullspace of ``m``."""
    m = as_matrix(m)
    rows, n = m.shape
    if rows == 0:
        return np.eye(n, dtype=complex)
    _, s, vh = np.linalg.svd(m, full_matrices=True)
    r = numerical_rank(s, tol)
    return vh[r:].conj().T


def orthonormal_basis(vectors, tol=None, dim=None) -> np.ndarray:
    """Orthonormal basis for span(vectors); k equals the numerical rank."""
    return column_space(stack_columns(vectors, dim), tol)


def projector(basis, tol=None) -> np.ndarray:
    """Orthogonal projector M (M^dagger M)^-1 M^dagger onto the column space of ``basis``."""
    m = as_matrix(basis, "basis")
    d, k = m.shape
    if k == 0:
        return np.zeros((d, d), dtype=complex)
    if matrix_rank(m, tol) < k:
        raise ValidationError("basis columns are linearly dependent")
    gram = m.conj().T @ m
    p = m @ np.linalg.solve(gram, m.conj().T)
    return (p + p.conj().T) / 2


def is_hermitian(m, tol=None) -> bool:
    m = as_matrix(m)
    return m.shape[0] == m.shape[1] and np.linalg.norm(m - m.conj().T) <= _tol(tol).eq_atol


def _require_hermitian(m, tol):
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if not is_hermitian(m, tol):
        raise ValidationError("matrix is not Hermitian within eq_atol")
    return (m + m.conj().T) / 2


def hermitian_eigenvalues(m, tol=None) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending."""
    return np.linalg.eigvalsh(_require_hermitian(m, tol))


def hermitian_eigh(m, tol=None):
    """Ascending eigenvalues and the matching orthonormal eigenvectors (as columns)."""
    return np.linalg.eigh(_require_hermitian(m, tol))


def is_negative_semidefinite(m, tol=None) -> bool:
    tol = _tol(tol)
    w = hermitian_eigenvalues(m, tol)
    return w.size == 0 or bool(w[-1] <= tol.psd_atol)


def is_positive_semidefinite(m, tol=None) -> bool:
    tol = _tol(tol)
    w = hermitian_eigenvalues(m, tol)
    return w.size == 0 or bool(w[0] >= -tol.psd_atol)


def commutator_norm(a, b) -> float:
    return float(np.linalg.norm(a @ b - b @ a))
