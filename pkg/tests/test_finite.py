from itertools import combinations

import numpy as np
import pytest

from qlattice import (
    DensityMatrix,
    FiniteSystem,
    family_coherent,
    family_position,
    family_position_momentum,
    fourier_matrix,
    profile,
)
from qlattice.exceptions import EvenDimensionError, ValidationError
from qlattice.finite import clock, inverse_of_two, shift

from helpers import random_density


class TestFourier:
    def test_d2(self):
        np.testing.assert_allclose(fourier_matrix(2), np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-15)

    def test_row_zero(self):
        np.testing.assert_allclose(fourier_matrix(3)[0], np.ones(3) / np.sqrt(3), atol=1e-15)

    @pytest.mark.parametrize("d", range(2, 13))
    def test_unitary(self, d):
        f = fourier_matrix(d)
        assert np.abs(f @ f.conj().T - np.eye(d)).max() <= 1e-12
        assert np.abs(f.conj().T @ f - np.eye(d)).max() <= 1e-12

    def test_rejects_small(self):
        with pytest.raises(ValidationError):
            fourier_matrix(1)

    @pytest.mark.parametrize("d", [3, 4, 7])
    def test_position_momentum_resolutions(self, d):
        fam = family_position_momentum(d)
        np.testing.assert_allclose(sum(m.projector for m in list(fam)[:d]), np.eye(d), atol=1e-12)
        np.testing.assert_allclose(sum(m.projector for m in list(fam)[d:]), np.eye(d), atol=1e-12)


class TestInverseOfTwo:
    @pytest.mark.parametrize("d", [3, 5, 7, 9, 11, 15])
    def test_odd(self, d):
        assert (2 * inverse_of_two(d)) % d == 1

    @pytest.mark.parametrize("d", [2, 4, 6, 10])
    def test_even(self, d):
        with pytest.raises(EvenDimensionError, match="odd"):
            inverse_of_two(d)


class TestDisplacement:
    def setup_method(self):
        self.sys = FiniteSystem(3)

    def test_identity(self):
        np.testing.assert_allclose(self.sys.displacement(0, 0), np.eye(3), atol=1e-15)

    def test_clock(self):
        w = np.exp(2j * np.pi / 3)
        np.testing.assert_allclose(self.sys.displacement(1, 0), np.diag([1, w, w * w]), atol=1e-12)

    def test_shift(self):
        x = self.sys.displacement(0, 1)
        for m in range(3):
            np.testing.assert_allclose(x[:, m], np.eye(3)[(m + 1) % 3], atol=1e-15)

    @pytest.mark.parametrize("d", [3, 5, 7])
    def test_unitary_and_closed_form(self, d):
        sys = FiniteSystem(d)
        for a in range(d):
            for b in range(d):
                dab = sys.displacement(a, b)
                np.testing.assert_allclose(dab @ dab.conj().T, np.eye(d), atol=1e-12)
                np.testing.assert_allclose(dab @ sys.fiducial, sys.coherent_state(a, b), atol=1e-12)

    def test_weyl_relation(self):
        d = 5
        w = np.exp(2j * np.pi / d)
        np.testing.assert_allclose(shift(d) @ clock(d), clock(d) @ shift(d) / w, atol=1e-12)


class TestCoherent:
    def test_origin_is_fiducial(self):
        sys = FiniteSystem(5)
        np.testing.assert_allclose(sys.coherent_state(0, 0), sys.fiducial, atol=1e-15)

    @pytest.mark.parametrize("d", [3, 5, 7])
    def test_resolution_of_identity(self, d):
        c = FiniteSystem(d).coherent_states()
        np.testing.assert_allclose(np.linalg.norm(c, axis=0), 1, atol=1e-12)
        assert np.abs(c @ c.conj().T / d - np.eye(d)).max() <= 1e-9

    def test_any_three_independent_d3(self):
        c = FiniteSystem(3).coherent_states()
        for idx in combinations(range(9), 3):
            assert np.linalg.matrix_rank(c[:, idx]) == 3

    def test_rejects_even(self):
        with pytest.raises(EvenDimensionError, match="odd"):
            FiniteSystem(4)

    def test_rejects_unnormalized(self):
        with pytest.raises(ValidationError, match="normalized"):
            FiniteSystem(3, fiducial=[1, 1, 0])

    def test_seed_determinism(self):
        np.testing.assert_array_equal(FiniteSystem(5, seed=3).fiducial, FiniteSystem(5, seed=3).fiducial)
        assert not np.allclose(FiniteSystem(5, seed=3).fiducial, FiniteSystem(5, seed=4).fiducial)


class TestFamilies:
    def test_position(self):
        fam = family_position(3)
        assert len(fam) == 3 and tuple(fam.dims) == (1, 1, 1)
        for i, m in enumerate(fam):
            assert m.contains(np.eye(3)[i])

    def test_position_momentum_order(self):
        fam = family_position_momentum(3)
        f = fourier_matrix(3)
        assert len(fam) == 6
        assert fam[0].contains(np.eye(3)[0])
        assert fam[4].contains(f[:, 1])

    @pytest.mark.parametrize("d", [3, 5])
    def test_coherent_profile(self, d):
        rng = np.random.default_rng(61 + d)
        fam = family_coherent(FiniteSystem(d))
        assert len(fam) == d * d
        p = profile(fam, DensityMatrix(random_density(rng, d)))
        np.testing.assert_allclose(p.R_tilde, 0, atol=1e-12)
        np.testing.assert_allclose(p.R_hat, p.R, atol=1e-12)
        assert abs(sum(p.R) / d - 1) <= 1e-9
