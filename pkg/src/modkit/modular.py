"""Standard form of the matrix algebra and its modular operators.

The algebra of d x d matrices acts on H_d (x) H_d as pi(X) = X (x) 1, with
cyclic separating vectors vec(A) for nonsingular A. For faithful densities
phi, omega the relative operators act as

    S  vec(X) = vec(D_omega^(-1/2) X* D_phi^(1/2))     (antilinear)
    F  vec(Y) = vec(D_phi^(1/2) Y* D_omega^(-1/2))     (antilinear)
    J  vec(X) = vec(X*)                                (antilinear)
    Delta     = F S = D_phi (x) (D_omega^(-1))^T       (linear, PSD)

and satisfy the polar decomposition S = J Delta^(1/2). Both construction
routes are exposed on purpose: :func:`relative_s_matrix` assembles S
column-by-column from its action on matrix units, while
:func:`relative_modular_operator` uses the closed Kronecker form; their
agreement (Delta = S*S) is a standing cross-check in the test suite, not an
option.

Time conventions: this module works in modular time, sigma_t(A) =
D^(it) A D^(-it). The thermal (Hamiltonian) time of :mod:`modkit.kms`
relates to it by sigma_s^modular = sigma_(-beta s)^physical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ShapeMismatch, SingularState
from .linalg import adjoint, as_matrix, check_psd, hs_norm
from .schmidt import is_cyclic_separating
from .states import DensityMatrix, PositiveFunctional, is_faithful
from .vecops import BipartiteVector, SuperOperator, swap_operator, unvec, vec


def _require_faithful(omega: PositiveFunctional, role: str) -> None:
    if not is_faithful(omega):
        raise SingularState(f"{role} state must be faithful (nonsingular density)")


def _power(s: PositiveFunctional, exponent: float) -> np.ndarray:
    """D^exponent through the cached spectrum; caller guarantees domain."""
    vals = s.spectrum.eigenvalues
    v = s.spectrum.eigenvectors
    return (v * (vals.astype(complex) ** exponent)) @ adjoint(v)


def _unitary_power(s: PositiveFunctional, t: float) -> np.ndarray:
    """D^(it) = exp(it log D) on a faithful density."""
    vals = s.spectrum.eigenvalues
    v = s.spectrum.eigenvectors
    return (v * np.exp(1j * t * np.log(vals))) @ adjoint(v)


@dataclass(frozen=True)
class StandardForm:
    """The triple (pi(M), H, Omega) for M = B(H_d) with Omega = vec(sqrt(D)).

    Stores the unit-norm cone representative; ``scale`` records the norm of
    the originally supplied cyclic vector when one was given.
    """

    d: int
    omega_vec: BipartiteVector
    density: DensityMatrix
    scale: float = 1.0

    @classmethod
    def from_density(cls, density: DensityMatrix) -> "StandardForm":
        _require_faithful(density, "reference")
        omega_vec = vec(density.sqrt())
        return cls(density.dim, omega_vec, density)

    @classmethod
    def from_cyclic_vector(cls, v: BipartiteVector) -> "StandardForm":
        """Build from an (optionally unnormalized) cone-gauge cyclic vector.

        The witness unvec(v) must be PSD up to a positive scale; the stored
        Omega is v / ||v|| and the norm is recorded in ``scale``.
        """
        if not is_cyclic_separating(v):
            raise SingularState("vector is not cyclic and separating")
        scale = v.norm()
        x = unvec(v) / scale
        if not check_psd(x):
            raise ValueError(
                "cyclic vector is not in the cone gauge (unvec not PSD); "
                "construct from its reduced density instead"
            )
        density = DensityMatrix(x @ x)
        return cls(v.dim_left, vec(density.sqrt()), density, scale=scale)


def relative_s_matrix(
    phi: PositiveFunctional, omega: PositiveFunctional
) -> SuperOperator:
    """S_(phi,omega), assembled from its action on the matrix units.

    Column (mu, nu) is vec(D_omega^(-1/2) E_nu_mu D_phi^(1/2)); the operator
    is antilinear, applied as v -> M conj(v).
    """
    _require_faithful(omega, "reference (right)")
    if phi.dim != omega.dim:
        raise ShapeMismatch(f"dimensions {phi.dim} != {omega.dim}")
    d = omega.dim
    w = _power(omega, -0.5)
    p = phi.power(0.5)
    m = np.empty((d * d, d * d), dtype=complex)
    for mu in range(d):
        for nu in range(d):
            # E_mu_nu* = E_nu_mu, so the column is an outer product of
            # column nu of D_omega^(-1/2) with row mu of D_phi^(1/2)
            col = np.outer(w[:, nu], p[mu, :])
            m[:, mu * d + nu] = col.ravel()
    return SuperOperator(d, m, antilinear=True)


def relative_f_matrix(
    phi: PositiveFunctional, omega: PositiveFunctional
) -> SuperOperator:
    """F_(phi,omega) with F vec(Y) = vec(D_phi^(1/2) Y* D_omega^(-1/2))."""
    _require_faithful(omega, "reference (right)")
    if phi.dim != omega.dim:
        raise ShapeMismatch(f"dimensions {phi.dim} != {omega.dim}")
    d = omega.dim
    w = _power(omega, -0.5)
    p = phi.power(0.5)
    m = np.empty((d * d, d * d), dtype=complex)
    for mu in range(d):
        for nu in range(d):
            col = np.outer(p[:, nu], w[mu, :])
            m[:, mu * d + nu] = col.ravel()
    return SuperOperator(d, m, antilinear=True)


def relative_modular_operator(
    phi: PositiveFunctional, omega: PositiveFunctional
) -> SuperOperator:
    """Delta_(phi,omega) = D_phi (x) (D_omega^(-1))^T in closed form."""
    return relative_modular_power(phi, omega, 1.0)


def relative_modular_power(
    phi: PositiveFunctional, omega: PositiveFunctional, s: float
) -> SuperOperator:
    """Delta^s_(phi,omega) = D_phi^s (x) (D_omega^(-s))^T for real s.

    phi may be singular for s >= 0 (support convention applies through the
    density's power); omega must be faithful.
    """
    _require_faithful(omega, "reference (right)")
    if phi.dim != omega.dim:
        raise ShapeMismatch(f"dimensions {phi.dim} != {omega.dim}")
    if s < 0:
        _require_faithful(phi, "left")
        left = _power(phi, s)
    else:
        left = phi.power(s)
    right = _power(omega, -s)
    return SuperOperator(omega.dim, np.kron(left, right.T))


def relative_modular_unitary(
    phi: PositiveFunctional, omega: PositiveFunctional, t: float
) -> SuperOperator:
    """Delta^(it)_(phi,omega) = D_phi^(it) (x) (D_omega^(-it))^T."""
    _require_faithful(phi, "left")
    _require_faithful(omega, "reference (right)")
    if phi.dim != omega.dim:
        raise ShapeMismatch(f"dimensions {phi.dim} != {omega.dim}")
    return SuperOperator(
        omega.dim, np.kron(_unitary_power(phi, t), _unitary_power(omega, -t).T)
    )


def modular_conjugation(d: int) -> SuperOperator:
    """J with J vec(X) = vec(X*); antilinear involution, equal to swap o conj."""
    return SuperOperator(d, swap_operator(d).matrix, antilinear=True)


def modular_flow(omega: DensityMatrix, a: np.ndarray, t: float) -> np.ndarray:
    """Modular automorphism sigma_t(A) = D^(it) A D^(-it) in closed form."""
    _require_faithful(omega, "reference")
    a = as_matrix(a)
    if a.shape != omega.matrix.shape:
        raise ShapeMismatch(f"operator shape {a.shape} != {omega.matrix.shape}")
    u = _unitary_power(omega, t)
    return u @ a @ adjoint(u)


def connes_cocycle(phi: DensityMatrix, omega: DensityMatrix, t: float) -> np.ndarray:
    """Cocycle [D phi : D omega]_t = D_phi^(it) D_omega^(-it), a d x d unitary.

    Its pi-image equals Delta^(it)_(phi,omega) Delta^(-it)_(omega,omega)
    because the right Kronecker factors cancel.
    """
    _require_faithful(phi, "left")
    _require_faithful(omega, "reference (right)")
    if phi.dim != omega.dim:
        raise ShapeMismatch(f"dimensions {phi.dim} != {omega.dim}")
    return _unitary_power(phi, t) @ _unitary_power(omega, -t)


def pi_left(m: np.ndarray) -> np.ndarray:
    """Dense pi(M) = M (x) 1."""
    m = as_matrix(m)
    return np.kron(m, np.eye(m.shape[0]))


def pi_right(n: np.ndarray) -> np.ndarray:
    """Dense commutant element 1 (x) N."""
    n = as_matrix(n)
    return np.kron(np.eye(n.shape[0]), n)


@dataclass(frozen=True)
class TomitaTakesakiReport:
    """Residuals from checking J M J = M' and flow invariance of the algebra."""

    d: int
    tolerance: float
    commutant_residuals: np.ndarray = field(repr=False)
    flow_residuals: np.ndarray = field(repr=False)
    max_commutant_residual: float = 0.0
    max_flow_residual: float = 0.0
    passed: bool = True


def verify_tomita_takesaki(
    omega: DensityMatrix,
    samples: Sequence[np.ndarray],
    t_grid: Sequence[float],
    tol: float = 1e-10,
) -> TomitaTakesakiReport:
    """Check the two Tomita-Takesaki conclusions on concrete samples.

    For every pair (M, N) of samples the commutator norm
    ||[J pi(M) J, pi(N)]||_HS is recorded; J pi(M) J is computed by dense
    antilinear composition, not from the closed form 1 (x) conj(M). For
    every sample and every t, the membership residual
    ||Delta^(it) pi(M) Delta^(-it) - (D^(it) M D^(-it)) (x) 1||_HS is
    recorded. The report passes iff every residual is below ``tol``.
    """
    _require_faithful(omega, "reference")
    d = omega.dim
    j = modular_conjugation(d)
    mats = [as_matrix(m) for m in samples]

    comm = []
    for m in mats:
        pim = SuperOperator(d, pi_left(m))
        jmj = j.compose(pim).compose(j)  # linear: two antilinear factors
        for n in mats:
            pin = pi_left(n)
            comm.append(hs_norm(jmj.matrix @ pin - pin @ jmj.matrix))

    flow = []
    for t in t_grid:
        u = relative_modular_unitary(omega, omega, t)
        u_inv = relative_modular_unitary(omega, omega, -t)
        for m in mats:
            evolved = u.matrix @ pi_left(m) @ u_inv.matrix
            flow.append(hs_norm(evolved - pi_left(modular_flow(omega, m, t))))

    comm_arr = np.array(comm)
    flow_arr = np.array(flow) if flow else np.zeros(0)
    max_comm = float(comm_arr.max()) if comm_arr.size else 0.0
    max_flow = float(flow_arr.max()) if flow_arr.size else 0.0
    return TomitaTakesakiReport(
        d=d,
        tolerance=tol,
        commutant_residuals=comm_arr,
        flow_residuals=flow_arr,
        max_commutant_residual=max_comm,
        max_flow_residual=max_flow,
        passed=bool(max_comm < tol and max_flow < tol),
    )
