import numpy as np
import pytest

from modkit.errors import DomainError, NotSquare, ShapeMismatch
from modkit.linalg import apply_spectral_function, matrix_sqrt
from modkit.modular import relative_modular_operator
from modkit.sampling import (
    complex_gaussian,
    random_faithful_density,
    random_hermitian,
    random_psd,
)
from modkit.superops import (
    BoxTimes,
    boxtimes_apply,
    left_mult,
    relative_density_superop,
    right_mult,
    superop_function,
    superop_power,
)
from modkit.vecops import unvec, vec


def hs(a, b):
    return complex(np.trace(np.conj(a).T @ b))


def test_boxtimes_identity(rng):
    x = complex_gaussian(rng, 3)
    op = BoxTimes(np.eye(3), np.eye(3))
    assert np.allclose(boxtimes_apply(op, x), x)


def test_boxtimes_composition_law(rng):
    a1, b1, a2, b2, x = (complex_gaussian(rng, 3) for _ in range(5))
    lhs = BoxTimes(a1, b1).apply(BoxTimes(a2, b2).apply(x))
    rhs = BoxTimes(a1 @ a2, b1 @ b2).apply(x)
    assert np.linalg.norm(lhs - rhs) < 1e-12
    composed = BoxTimes(a1, b1).compose(BoxTimes(a2, b2))
    assert np.linalg.norm(composed.apply(x) - rhs) < 1e-12


def test_boxtimes_hs_adjoint(rng):
    a, b, x, y = (complex_gaussian(rng, 3) for _ in range(4))
    op = BoxTimes(a, b)
    assert hs(y, op.apply(x)) == pytest.approx(
        hs(op.adjoint().apply(y), x), abs=1e-12
    )


def test_boxtimes_dense_form(rng):
    a, b, x = (complex_gaussian(rng, 3) for _ in range(3))
    op = BoxTimes(a, b)
    dense = op.to_dense()
    assert np.allclose(dense.matrix, np.kron(a, np.conj(b)))
    assert np.linalg.norm(dense.apply_matrix(x) - op.apply(x)) < 1e-12


def test_boxtimes_shape_mismatch(rng):
    with pytest.raises(ShapeMismatch):
        boxtimes_apply(BoxTimes(np.eye(2), np.eye(2)), complex_gaussian(rng, 3))


def test_left_right_actions(rng):
    a, b, x = (complex_gaussian(rng, 3) for _ in range(3))
    assert np.allclose(left_mult(a).apply(x), a @ x)
    assert np.allclose(right_mult(b).apply(x), x @ b)
    assert np.allclose(left_mult(np.eye(3)).apply(x), x)
    assert np.allclose(right_mult(np.eye(3)).apply(x), x)


def test_left_right_commute_always(rng):
    a = complex_gaussian(rng, 3)
    b = complex_gaussian(rng, 3)
    assert np.linalg.norm(a @ b - b @ a) > 1e-3  # generically noncommuting
    x = complex_gaussian(rng, 3)
    lr = left_mult(a).compose(right_mult(b)).apply(x)
    rl = right_mult(b).compose(left_mult(a)).apply(x)
    assert np.linalg.norm(lr - rl) < 1e-12


def test_left_inverse(rng):
    a = complex_gaussian(rng, 3) + 3 * np.eye(3)
    x = complex_gaussian(rng, 3)
    inv = left_mult(np.linalg.inv(a))
    assert np.linalg.norm(inv.apply(left_mult(a).apply(x)) - x) < 1e-10


def test_not_square(rng):
    with pytest.raises(NotSquare):
        left_mult(complex_gaussian(rng, 2, 3))
    with pytest.raises(NotSquare):
        right_mult(complex_gaussian(rng, 2, 3))


def test_superop_function_identity(rng):
    a = random_psd(rng, 3)
    x = complex_gaussian(rng, 3)
    got = superop_function(left_mult(a), lambda t: t)
    assert np.linalg.norm(got.apply(x) - a @ x) < 1e-12


def test_superop_sqrt_diagonal():
    got = superop_power(left_mult(np.diag([4.0, 9.0])), 0.5)
    assert np.allclose(got.a, np.diag([2.0, 3.0]))
    got_r = superop_power(right_mult(np.diag([4.0, 9.0])), 0.5)
    x = np.array([[1.0, 2.0], [3.0, 4.0]])
    assert np.allclose(got_r.apply(x), x @ np.diag([2.0, 3.0]))


def test_superop_power_dense_oracle(rng):
    # spectral power of the dense matrix A (x) 1 equals A^alpha (x) 1
    a = random_psd(rng, 3) + 0.1 * np.eye(3)
    alpha = 0.7
    dense = apply_spectral_function(
        np.kron(a, np.eye(3)), lambda t: np.maximum(t, 0.0) ** alpha
    )
    lifted = superop_power(left_mult(a), alpha).to_dense().matrix
    assert np.linalg.norm(dense - lifted) < 1e-10


def test_superop_function_rejects_generic_boxtimes(rng):
    op = BoxTimes(complex_gaussian(rng, 3), complex_gaussian(rng, 3))
    with pytest.raises(DomainError):
        superop_function(op, np.sqrt)


def test_positivity_quadratic_form(rng):
    a = random_psd(rng, 4)
    for _ in range(10):
        x = complex_gaussian(rng, 4)
        assert hs(x, left_mult(a).apply(x)).real >= -1e-12
        assert hs(x, right_mult(a).apply(x)).real >= -1e-12


def test_self_adjointness(rng):
    a = random_hermitian(rng, 3)
    x, y = complex_gaussian(rng, 3), complex_gaussian(rng, 3)
    assert hs(y, left_mult(a).apply(x)) == pytest.approx(
        hs(left_mult(a).apply(y), x), abs=1e-12
    )


def test_relative_density_superop_matches_modular_kron(rng):
    phi = random_faithful_density(rng, 3)
    omega = random_faithful_density(rng, 3)
    delta_box = relative_density_superop(phi.matrix, omega.matrix)
    delta_kron = relative_modular_operator(phi, omega)
    x = complex_gaussian(rng, 3)
    via_box = delta_box.apply(x)
    via_kron = unvec(delta_kron.apply(vec(x)))
    assert np.linalg.norm(via_box - via_kron) < 1e-10 * max(
        1.0, np.linalg.norm(via_box)
    )


def test_sqrt_left_equals_left_sqrt(rng):
    a = random_psd(rng, 3)
    x = complex_gaussian(rng, 3)
    assert np.linalg.norm(
        superop_power(left_mult(a), 0.5).apply(x) - matrix_sqrt(a) @ x
    ) < 1e-12
