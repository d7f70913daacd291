"""Aggregate report combining profile, levels, degrees and informational independence."""
from __future__ import annotations

import numpy as np

from .independence import (
    degree_of_independence,
    degree_of_totalness,
    independence_level,
    totalness_level,
)
from .lattice import SubspaceFamily
from .partitions import informationally_independent
from .quasiprob import DensityMatrix, profile

# entries below this are numerical noise from the SVD and are reported as 0
CLEAN_ATOL = 1e-12


def _clean(m):
    m = np.array(m, dtype=complex)
    m.real[np.abs(m.real) < CLEAN_ATOL] = 0.0
    m.imag[np.abs(m.imag) < CLEAN_ATOL] = 0.0
    return m


def _clean_scalar(x):
    return 0.0 if abs(x) < CLEAN_ATOL else float(x)


def _witness_vector(w):
    # the SVD fixes a basis vector only up to phase; make its largest entry real positive
    v = w.basis[:, 0]
    k = int(np.argmax(np.abs(v)))
    return _clean(v * (abs(v[k]) / v[k]))


def _level_dict(level):
    out = level.to_dict()
    out["witnesses"] = [
        {"index": i, "dimension": w.dim, "vector": _witness_vector(w)}
        for i, w in sorted(level.witnesses.items())
    ]
    out["failing_pairs"] = [list(p) for p in level.pair_witnesses]
    return out


def analyze(family: SubspaceFamily, rho: DensityMatrix | None = None, tol=None) -> dict:
    if rho is None:
        rho = DensityMatrix.maximally_mixed(family.ambient_dim)
    prof = profile(family, rho, tol)
    ind = independence_level(family, tol)
    tot = totalness_level(family, tol)
    a = degree_of_independence(family, rho, tol)
    t = degree_of_totalness(family, rho, tol)
    return {
        "family": {
            "ambient_dim": family.ambient_dim,
            "n": len(family),
            "dims": family.dims,
            "labels": None if family.labels is None else list(family.labels),
        },
        "independence": _level_dict(ind),
        "totalness": _level_dict(tot),
        "A": _clean(a.matrix),
        "eta": _clean_scalar(a.degree),
        "T": _clean(t.matrix),
        "epsilon": _clean_scalar(t.degree),
        "profile": {k: [_clean_scalar(x) for x in v] for k, v in prof.to_dict().items()},
        "informationally_independent": informationally_independent(family, tol),
    }
