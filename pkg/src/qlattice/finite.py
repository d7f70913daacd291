"""Finite quantum systems with positions and momenta in Z(d).

Position states are the standard basis; momentum states are the columns of
the finite Fourier matrix.  Displacement operators and coherent states use
2^-1 mod d and are therefore only defined for odd d.
"""
from __future__ import annotations

import numpy as np

from .exceptions import EvenDimensionError, ValidationError
from .lattice import Subspace, SubspaceFamily
from .numeric import DEFAULT_TOLERANCE, as_vector, matrix_rank

DEFAULT_FIDUCIAL_SEED = 20240617


def omega(k, d):
    return np.exp(2j * np.pi * np.asarray(k) / d)


def inverse_of_two(d: int) -> int:
    """2^-1 in Z(d) by the extended Euclidean algorithm."""
    old_r, r = 2, d
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise EvenDimensionError(
            f"2 has no inverse modulo d={d}; displacement operators assume odd d"
        )
    return old_s % d


def fourier_matrix(d: int) -> np.ndarray:
    """F[a, b] = ω(ab)/√d; column b is the momentum state |P;b⟩."""
    if d < 2:
        raise ValidationError(f"Fourier matrix needs d >= 2, got {d}")
    a = np.arange(d)
    return omega(np.outer(a, a) % d, d) / np.sqrt(d)


def clock(d: int) -> np.ndarray:
    """Z = Σ ω(m)|m⟩⟨m|."""
    return np.diag(omega(np.arange(d), d))


def shift(d: int) -> np.ndarray:
    """X = Σ |m+1⟩⟨m|."""
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def position_state(d, alpha):
    v = np.zeros(d, dtype=complex)
    v[alpha % d] = 1
    return v


def momentum_state(d, beta):
    return fourier_matrix(d)[:, beta % d].copy()


def _amplitude_table(f, d, half):
    # A[m, alpha*d + beta] = ω(alpha*m − 2^-1 alpha beta) f[m − beta]
    m = np.arange(d)[:, None, None]
    alpha = np.arange(d)[None, :, None]
    beta = np.arange(d)[None, None, :]
    phase = omega((alpha * m - half * alpha * beta) % d, d)
    return (phase * f[(m - beta) % d]).reshape(d, d * d)


class FiniteSystem:
    """Odd dimension d with a generic normalized fiducial vector."""

    def __init__(self, d: int, fiducial=None, seed=None, tol=None):
        tol = DEFAULT_TOLERANCE if tol is None else tol
        if not isinstance(d, (int, np.integer)):
            raise ValidationError(f"a finite system needs an integer d, got {d!r}")
        d = int(d)
        if d % 2 == 0:
            inverse_of_two(d)
        if d < 3:
            raise ValidationError(f"a finite system needs d >= 3, got {d}")
        self.half = inverse_of_two(d)
        if fiducial is None:
            rng = np.random.default_rng(DEFAULT_FIDUCIAL_SEED if seed is None else seed)
            f = rng.normal(size=d) + 1j * rng.normal(size=d)
            f /= np.linalg.norm(f)
        else:
            f = as_vector(fiducial, "fiducial")
            if len(f) != d:
                raise ValidationError(f"fiducial has length {len(f)}, expected {d}")
            if abs(np.linalg.norm(f) - 1) > tol.eq_atol:
                raise ValidationError("fiducial vector is not normalized")
        f = f.copy()
        f.setflags(write=False)
        self.d = d
        self.fiducial = f
        table = _amplitude_table(f, d, self.half)
        if matrix_rank(table, tol) < d:
            raise ValidationError(
                "fiducial is not generic: the coherent amplitude matrix has rank < d; "
                "try another seed"
            )
        table.setflags(write=False)
        self.amplitudes = table

    def displacement(self, alpha: int, beta: int) -> np.ndarray:
        """D(α, β) = Z^α X^β ω(−2^-1 α β)."""
        d = self.d
        z = np.linalg.matrix_power(clock(d), alpha % d)
        x = np.linalg.matrix_power(shift(d), beta % d)
        return z @ x * omega((-self.half * alpha * beta) % d, d)

    def coherent_state(self, alpha: int, beta: int) -> np.ndarray:
        """|C;α,β⟩ from the closed-form amplitudes."""
        return self.amplitudes[:, (alpha % self.d) * self.d + beta % self.d].copy()

    def coherent_states(self) -> np.ndarray:
        """All d² coherent states as columns, ordered row-major in (α, β)."""
        return self.amplitudes.copy()


def family_position(d: int) -> SubspaceFamily:
    if d < 2:
        raise ValidationError(f"position family needs d >= 2, got {d}")
    return SubspaceFamily(
        [Subspace.coordinate(d, [a]) for a in range(d)],
        labels=[f"X;{a}" for a in range(d)],
    )


def family_position_complement(d: int) -> SubspaceFamily:
    if d < 2:
        raise ValidationError(f"complement family needs d >= 2, got {d}")
    return SubspaceFamily(
        [Subspace.coordinate(d, [b for b in range(d) if b != a]) for a in range(d)],
        labels=[f"X;{a}⊥" for a in range(d)],
    )


def family_position_momentum(d: int) -> SubspaceFamily:
    """Positions 0..d−1 then momenta d..2d−1."""
    if d < 2:
        raise ValidationError(f"position-momentum family needs d >= 2, got {d}")
    f = fourier_matrix(d)
    members = [Subspace.coordinate(d, [a]) for a in range(d)]
    members += [Subspace.span([f[:, b]]) for b in range(d)]
    labels = [f"X;{a}" for a in range(d)] + [f"P;{b}" for b in range(d)]
    return SubspaceFamily(members, labels=labels)


def family_coherent(system: FiniteSystem) -> SubspaceFamily:
    d = system.d
    table = system.amplitudes
    members = [Subspace.span([table[:, k]]) for k in range(d * d)]
    labels = [f"C;{a},{b}" for a in range(d) for b in range(d)]
    return SubspaceFamily(members, labels=labels)
