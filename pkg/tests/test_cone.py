import numpy as np
import pytest

from modkit.cone import (
    ConeElement,
    cone_contains,
    cone_pairing,
    decompose_general,
    decompose_j_fixed,
    representative_of,
)
from modkit.errors import DimensionMismatch, NotJFixed, NotPSD
from modkit.modular import modular_conjugation, pi_left
from modkit.sampling import complex_gaussian, random_hermitian, random_psd
from modkit.states import DensityMatrix, PositiveFunctional, evaluate_state
from modkit.vecops import SuperOperator, vec


def matrix_unit(d, mu, nu):
    e = np.zeros((d, d), dtype=complex)
    e[mu, nu] = 1.0
    return e


def test_contains_identity():
    assert cone_contains(vec(np.eye(3)))


def test_contains_rejects_indefinite():
    x = matrix_unit(2, 0, 1) + matrix_unit(2, 1, 0)  # eigenvalues +-1
    assert not cone_contains(vec(x))


def test_contains_gram(rng):
    b = complex_gaussian(rng, 4)
    assert cone_contains(vec(b @ np.conj(b).T))


def test_contains_needs_square(rng):
    with pytest.raises(DimensionMismatch):
        cone_contains(vec(complex_gaussian(rng, 2, 3)))


def test_representative_tracial():
    rep = representative_of(DensityMatrix.maximally_mixed(3))
    assert np.allclose(rep.vector.amplitudes, vec(np.eye(3)).amplitudes / np.sqrt(3))


def test_representative_diagonal():
    lam = np.array([0.5, 0.3, 0.2])
    rep = representative_of(DensityMatrix(np.diag(lam)))
    assert np.allclose(rep.witness, np.diag(np.sqrt(lam)))


def test_representative_reproduces_functional(rng):
    d = DensityMatrix(random_psd(rng, 3))
    rep = representative_of(d)
    for _ in range(10):
        m = complex_gaussian(rng, 3)
        assert evaluate_state(rep.vector, m) == pytest.approx(
            complex(np.trace(d.matrix @ m)), abs=1e-12
        )


def test_from_witness_validates(rng):
    with pytest.raises(NotPSD):
        ConeElement.from_witness(np.diag([1.0, -1.0]))
    elem = ConeElement.from_witness(random_psd(rng, 3))
    assert np.array_equal(elem.vector.amplitudes, elem.witness.ravel())


def test_j_fixed_split_of_cone_element(rng):
    x = random_psd(rng, 3)
    plus, minus = decompose_j_fixed(vec(x))
    assert np.linalg.norm(plus.witness - x) < 1e-12
    assert np.linalg.norm(minus.witness) < 1e-12


def test_j_fixed_diagonal_split():
    plus, minus = decompose_j_fixed(vec(np.diag([1.0, -2.0])))
    assert np.allclose(plus.witness, np.diag([1.0, 0.0]))
    assert np.allclose(minus.witness, np.diag([0.0, 2.0]))


def test_j_fixed_orthogonality(rng):
    for _ in range(20):
        t = random_hermitian(rng, 4)
        v = vec(t)
        plus, minus = decompose_j_fixed(v)
        assert abs(plus.vector.inner(minus.vector)) < 1e-12
        assert ((plus.vector - minus.vector) - v).norm() < 1e-12


def test_j_fixed_rejects_non_hermitian(rng):
    with pytest.raises(NotJFixed):
        decompose_j_fixed(vec(complex_gaussian(rng, 3)))


def test_general_decomposition_cone_input(rng):
    x = random_psd(rng, 3)
    c1, c2, c3, c4 = decompose_general(vec(x))
    assert np.linalg.norm(c1.witness - x) < 1e-12
    for c in (c2, c3, c4):
        assert c.norm() < 1e-12


def test_general_decomposition_imaginary_identity():
    c1, c2, c3, c4 = decompose_general(vec(1j * np.eye(2)))
    assert c1.norm() < 1e-14 and c2.norm() < 1e-14 and c4.norm() < 1e-14
    assert np.allclose(c3.witness, np.eye(2))


def test_general_decomposition_reconstructs(rng):
    for _ in range(10):
        v = vec(complex_gaussian(rng, 4))
        c1, c2, c3, c4 = decompose_general(v)
        recon = (
            c1.vector.amplitudes
            - c2.vector.amplitudes
            + 1j * c3.vector.amplitudes
            - 1j * c4.vector.amplitudes
        )
        assert np.linalg.norm(recon - v.amplitudes) < 1e-12
        for c in (c1, c2, c3, c4):
            assert cone_contains(c.vector)


def test_self_duality_forward(rng):
    elems = [ConeElement.from_witness(random_psd(rng, 3)) for _ in range(20)]
    for xi in elems:
        for eta in elems:
            assert cone_pairing(xi, eta) >= -1e-12


def test_self_duality_converse_extreme_rays(rng):
    # a vector pairing negatively against some ray vec(|u><u|) is outside
    t = random_hermitian(rng, 4)  # generically indefinite
    v = vec(t)
    pairings = []
    for _ in range(200):
        u = complex_gaussian(rng, 4, 1).ravel()
        u = u / np.linalg.norm(u)
        ray = ConeElement.from_witness(np.outer(u, np.conj(u)))
        pairings.append(float(np.real(v.inner(ray.vector))))
    found_negative = min(pairings) < -1e-12
    assert found_negative == (not cone_contains(v))


def test_pointedness(rng):
    x = random_psd(rng, 3) + 0.1 * np.eye(3)
    v = vec(x)
    assert cone_contains(v)
    assert not cone_contains(-v)


def test_j_fixes_cone_elements(rng):
    j = modular_conjugation(3)
    for _ in range(10):
        elem = ConeElement.from_witness(random_psd(rng, 3))
        assert (j.apply(elem.vector) - elem.vector).norm() < 1e-12


def test_invariance_under_m_jm(rng):
    d = 3
    j = modular_conjugation(d)
    for _ in range(20):
        elem = ConeElement.from_witness(random_psd(rng, d))
        m = complex_gaussian(rng, d)
        pim = SuperOperator(d, pi_left(m))
        image = pim.compose(j).compose(pim).compose(j).apply(elem.vector)
        assert cone_contains(image)
        # the witness transforms as M X M*
        expected = m @ elem.witness @ np.conj(m).T
        assert np.linalg.norm(image.amplitudes - vec(expected).amplitudes) < 1e-10


def test_representative_accepts_positive_functional(rng):
    phi = PositiveFunctional(2.5 * random_psd(rng, 3))
    rep = representative_of(phi)
    assert cone_contains(rep.vector)
    assert rep.vector.norm() ** 2 == pytest.approx(phi.total(), rel=1e-10)
