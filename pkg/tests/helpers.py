"""Random generators shared by the property suites."""
import numpy as np

from qlattice import Subspace, SubspaceFamily


def random_complex(rng, *shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def random_unitary(rng, d):
    q, r = np.linalg.qr(random_complex(rng, d, d))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_density(rng, d, rank=None):
    rank = d if rank is None else rank
    g = random_complex(rng, d, rank)
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_subspace(rng, d, pool=None, min_dim=0, max_dim=None):
    """Subspace spanned by a random subset of ``pool`` vectors (or generic vectors).

    Drawing from a small shared pool makes meets non-trivial much more often
    than generic random subspaces would.
    """
    max_dim = d if max_dim is None else max_dim
    k = int(rng.integers(min_dim, max_dim + 1))
    if k == 0:
        return Subspace.zero(d)
    if pool is None:
        return Subspace.from_matrix(random_complex(rng, d, k))
    idx = rng.choice(pool.shape[1], size=min(k, pool.shape[1]), replace=False)
    return Subspace.from_matrix(pool[:, idx])


def pool_for(rng, d):
    return random_complex(rng, d, d + 2)


def random_proper(rng, d, pool=None):
    while True:
        s = random_subspace(rng, d, pool, 1, d - 1)
        if s.is_proper():
            return s


def random_family(rng, d, n, pool=None):
    return SubspaceFamily([random_proper(rng, d, pool) for _ in range(n)])


def independent_family(rng, d, n, spanning=True):
    """n subspaces spanned by disjoint groups of columns of a random invertible matrix."""
    basis = random_complex(rng, d, d)
    cols = rng.permutation(d)
    used = d if spanning else int(rng.integers(n, d + 1))
    cuts = np.sort(rng.choice(np.arange(1, used), size=n - 1, replace=False))
    groups = np.split(cols[:used], cuts)
    return SubspaceFamily([Subspace.from_matrix(basis[:, g]) for g in groups])


def commuting_family(rng, d, n):
    """Subspaces spanned by (possibly overlapping) subsets of one orthonormal basis."""
    u = random_unitary(rng, d)
    members = []
    while len(members) < n:
        k = int(rng.integers(1, d))
        idx = rng.choice(d, size=k, replace=False)
        members.append(Subspace.from_matrix(u[:, idx]))
    return SubspaceFamily(members)
