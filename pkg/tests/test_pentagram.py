from itertools import combinations

import numpy as np
import pytest

from qlattice import DensityMatrix, frak_H, independence_level, max_violation, pentagram_analysis, pentagram_states
from qlattice.exceptions import DimensionMismatch, ValidationError
from qlattice.lattice import orthocomplement
from qlattice.pentagram import CLASSICAL_BOUND, QUANTUM_BOUND, pentagram_family

from helpers import random_density, random_unitary

PRINTED_A = np.array([[0.30, 0.10, 0.0], [0.10, 0.36, 0.02], [0.0, 0.02, 0.34]])


def test_first_state():
    np.testing.assert_allclose(pentagram_states()[0], [1, 0, 0])


def test_neighbour_orthogonality():
    s = pentagram_states()
    for i in range(5):
        assert abs(np.vdot(s[i], s[(i + 1) % 5])) <= 1e-12
        assert abs(np.linalg.norm(s[i]) - 1) <= 1e-12
    fam = pentagram_family()
    for i in range(5):
        assert np.abs(fam[i].projector @ fam[(i + 1) % 5].projector).max() <= 1e-12


def test_any_three_independent():
    s = pentagram_states()
    for idx in combinations(range(5), 3):
        assert np.linalg.matrix_rank(np.column_stack([s[i] for i in idx])) == 3


def test_pairwise_independent_and_frak_H_full():
    fam = pentagram_family()
    assert independence_level(fam).pairwise
    for i in range(5):
        assert frak_H(fam, i).is_full()
        assert orthocomplement(frak_H(fam, i)).is_zero()


def test_maximally_mixed():
    r = pentagram_analysis(DensityMatrix.maximally_mixed(3))
    np.testing.assert_allclose(r.probabilities, 1 / 3, atol=1e-12)
    assert abs(r.total - 5 / 3) < 1e-12
    assert r.classical_bound_satisfied and r.quantum_bound_satisfied


def test_default_state_violates():
    r = pentagram_analysis()
    assert abs(r.total - 2.185) <= 5e-3
    assert r.violates_classical and r.quantum_bound_satisfied
    assert abs(r.eta - r.total / 5) < 1e-12
    np.testing.assert_allclose(r.A.real, PRINTED_A, atol=5e-3)
    np.testing.assert_allclose(r.A, sum(m.projector for m in pentagram_family()) / 5, atol=1e-12)
    np.testing.assert_allclose(r.eigenvalues, [0.225, 0.338, 0.437], atol=1e-3)


def test_max_violation_round_trip():
    value, state = max_violation()
    assert abs(value - 0.437) <= 1e-3
    r = pentagram_analysis(DensityMatrix.pure(state))
    assert abs(r.total - 5 * value) < 1e-9


def test_bounds_on_random_states():
    rng = np.random.default_rng(71)
    value, _ = max_violation()
    fam = pentagram_family()
    projectors = np.stack([m.projector for m in fam])
    worst = 0.0
    for k in range(10_000):
        rho = random_density(rng, 3, rank=1 + k % 3)
        total = np.einsum("ij,kji->", rho, projectors).real
        worst = max(worst, total)
    assert worst <= QUANTUM_BOUND
    assert worst <= 5 * value + 1e-3
    assert worst > CLASSICAL_BOUND


def test_rotated_cycle_accepted():
    u = random_unitary(np.random.default_rng(72), 3)
    states = [u @ s for s in pentagram_states()]
    r = pentagram_analysis(DensityMatrix.maximally_mixed(3), states=states)
    assert abs(r.total - 5 / 3) < 1e-12
    np.testing.assert_allclose(r.eigenvalues, pentagram_analysis().eigenvalues, atol=1e-9)


def test_invalid_cycles():
    s = pentagram_states()
    with pytest.raises(ValidationError, match="orthogonal"):
        pentagram_analysis(states=[s[0], s[2], s[1], s[3], s[4]])
    with pytest.raises(ValidationError, match="five"):
        pentagram_analysis(states=s[:4])
    with pytest.raises(ValidationError, match="normalized"):
        pentagram_analysis(states=[2 * s[0]] + s[1:])


def test_wrong_dimension():
    with pytest.raises(DimensionMismatch):
        pentagram_analysis(DensityMatrix.maximally_mixed(4))


def test_report_dict():
    d = pentagram_analysis().to_dict()
    assert d["classical_bound_normalized"] == pytest.approx(0.4)
    assert d["classical_bound_satisfied"] is False
