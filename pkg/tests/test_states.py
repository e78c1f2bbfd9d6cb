import numpy as np
import pytest

from modkit.errors import DomainError, NotPSD, ShapeMismatch
from modkit.linalg import hs_norm, trace_norm
from modkit.sampling import complex_gaussian, random_density, random_psd
from modkit.states import (
    DensityMatrix,
    PositiveFunctional,
    evaluate_state,
    functional_distance,
    is_faithful,
    purify,
)
from modkit.vecops import partial_trace, vec


def matrix_unit(d, mu, nu):
    e = np.zeros((d, d), dtype=complex)
    e[mu, nu] = 1.0
    return e


def test_density_validation_rejects_indefinite():
    with pytest.raises(NotPSD):
        DensityMatrix(np.diag([1.5, -0.5]))


def test_density_validation_rejects_bad_trace():
    with pytest.raises(DomainError):
        DensityMatrix(np.diag([0.7, 0.7]))


def test_positive_functional_allows_free_trace():
    phi = PositiveFunctional(np.diag([2.0, 3.0]))
    assert phi.total() == pytest.approx(5.0)


def test_purify_maximally_mixed():
    d = DensityMatrix.maximally_mixed(3)
    assert np.allclose(purify(d).amplitudes, vec(np.eye(3)).amplitudes / np.sqrt(3))


def test_purify_pure_state():
    d = DensityMatrix(np.diag([1.0, 0.0]))
    assert np.allclose(purify(d).amplitudes, [1, 0, 0, 0])


def test_purify_frozen_example():
    d = DensityMatrix(np.diag([0.75, 0.25]))
    omega = purify(d)
    assert np.allclose(omega.amplitudes, [np.sqrt(3) / 2, 0, 0, 0.5])
    assert omega.norm() == pytest.approx(1.0)
    assert np.allclose(partial_trace(omega, omega, "right"), d.matrix)


def test_purify_round_trip(rng):
    d = random_density(rng, 4)
    omega = purify(d)
    assert np.linalg.norm(partial_trace(omega, omega, "right") - d.matrix) < 1e-10


def test_evaluate_state_normalization(rng):
    omega = purify(random_density(rng, 3))
    assert evaluate_state(omega, np.eye(3)) == pytest.approx(1.0, abs=1e-12)


def test_evaluate_state_diagonal_weights():
    lam = np.array([0.5, 0.3, 0.2])
    omega = purify(DensityMatrix(np.diag(lam)))
    for k in range(3):
        assert evaluate_state(omega, matrix_unit(3, k, k)) == pytest.approx(
            lam[k], abs=1e-12
        )


def test_evaluate_state_trace_oracle(rng):
    d = random_density(rng, 4)
    omega = purify(d)
    for _ in range(10):
        m = complex_gaussian(rng, 4)
        assert evaluate_state(omega, m) == pytest.approx(
            complex(np.trace(d.matrix @ m)), abs=1e-12
        )


def test_evaluate_state_shape_mismatch(rng):
    with pytest.raises(ShapeMismatch):
        evaluate_state(purify(random_density(rng, 3)), np.eye(2))


def test_is_faithful():
    assert is_faithful(DensityMatrix.maximally_mixed(4))
    assert not is_faithful(DensityMatrix(np.diag([1.0, 0.0])))
    assert not is_faithful(
        DensityMatrix(np.diag([1 - 1e-14, 1e-14])), singularity_tol=1e-12
    )


def test_functional_distance_zero(rng):
    phi = PositiveFunctional(random_psd(rng, 3, trace_one=False))
    assert functional_distance(phi, phi) == pytest.approx(0.0, abs=1e-14)


def test_functional_distance_orthogonal_pures():
    a = PositiveFunctional(np.diag([1.0, 0.0]))
    b = PositiveFunctional(np.diag([0.0, 1.0]))
    assert functional_distance(a, b) == pytest.approx(2.0)


def test_functional_distance_spectral_oracle(rng):
    a = PositiveFunctional(random_psd(rng, 4, trace_one=False))
    b = PositiveFunctional(random_psd(rng, 4, trace_one=False))
    eigs = np.linalg.eigvalsh(a.matrix - b.matrix)
    assert functional_distance(a, b) == pytest.approx(np.sum(np.abs(eigs)), abs=1e-12)


def test_functional_distance_shape_mismatch(rng):
    with pytest.raises(ShapeMismatch):
        functional_distance(
            PositiveFunctional(np.eye(2)), PositiveFunctional(np.eye(3))
        )


def test_araki_norm_estimates(rng):
    # for xi = vec(X), eta = vec(Y) with X, Y PSD:
    # ||X-Y||_HS^2 <= ||X^2-Y^2||_1 <= ||X-Y||_HS ||X+Y||_HS
    for _ in range(50):
        x = random_psd(rng, 4, trace_one=False)
        y = random_psd(rng, 4, trace_one=False)
        lower = hs_norm(x - y) ** 2
        middle = trace_norm(x @ x - y @ y)
        upper = hs_norm(x - y) * hs_norm(x + y)
        assert lower <= middle + 1e-12
        assert middle <= upper + 1e-12
