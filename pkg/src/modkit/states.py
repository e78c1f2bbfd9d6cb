"""Normal states as density matrices: purification and norm estimates.

A state omega on the d x d matrix algebra is carried by its density matrix
D (PSD, trace one) via omega(M) = Tr(D M). The canonical purification is
Omega = vec(sqrt(D)), whose right partial trace recovers D; that gauge also
places Omega in the natural positive cone. ``PositiveFunctional`` relaxes
the trace constraint for positive linear functionals.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, NotPSD, ShapeMismatch
from .linalg import (
    PSD_TOL,
    SpectralDecomposition,
    adjoint,
    as_matrix,
    hs_norm,
    spectral_decomposition,
    trace_norm,
)
from .vecops import BipartiteVector, unvec, vec

FAITHFUL_RTOL = 1e-12
TRACE_TOL = 1e-10


class PositiveFunctional:
    """Positive linear functional, carried by a PSD matrix of free trace.

    The spectral decomposition is computed eagerly and cached; eigenvalues
    in [-tol, 0) are rounding noise and enter cached derived quantities
    clipped at zero.
    """

    def __init__(self, matrix, tol: float = PSD_TOL):
        m = as_matrix(matrix)
        if m.shape[0] != m.shape[1]:
            raise ShapeMismatch(f"expected square matrix, got {m.shape}")
        spectrum = spectral_decomposition(m, tol)
        floor = -tol * max(1.0, hs_norm(m))
        if spectrum.eigenvalues[0] < floor:
            raise NotPSD(
                f"min eigenvalue {spectrum.eigenvalues[0]:.3e} below "
                f"tolerance floor {floor:.3e}"
            )
        self.matrix = m
        self.spectrum: SpectralDecomposition = spectrum

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def total(self) -> float:
        """phi(1) = Tr(D)."""
        return float(np.real(np.trace(self.matrix)))

    def power(self, s: float) -> np.ndarray:
        """D^s via the cached spectrum; s = 0 gives the support projection.

        Requires s >= 0; inverse powers are reserved for faithful states and
        taken explicitly where needed.
        """
        if s < 0:
            raise DomainError("negative powers require an explicit faithfulness check")
        vals = np.maximum(self.spectrum.eigenvalues, 0.0)
        top = float(vals[-1]) if vals.size else 0.0
        if s == 0:
            out = (vals > PSD_TOL * max(1.0, top)).astype(float)
        else:
            out = vals**s
        v = self.spectrum.eigenvectors
        return (v * out) @ adjoint(v)

    def sqrt(self) -> np.ndarray:
        return self.power(0.5)

    def min_eigenvalue(self) -> float:
        return float(self.spectrum.eigenvalues[0])

    def max_eigenvalue(self) -> float:
        return float(self.spectrum.eigenvalues[-1])

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, total={self.total():.6g})"


class DensityMatrix(PositiveFunctional):
    """PSD trace-one matrix with cached spectral decomposition."""

    def __init__(self, matrix, tol: float = PSD_TOL):
        super().__init__(matrix, tol)
        tr = np.trace(self.matrix)
        if abs(tr - 1.0) > TRACE_TOL:
            raise DomainError(f"density matrix trace {tr:.12g} != 1")

    @classmethod
    def diagonal(cls, probs) -> "DensityMatrix":
        return cls(np.diag(np.asarray(probs, dtype=float)))

    @classmethod
    def maximally_mixed(cls, d: int) -> "DensityMatrix":
        return cls(np.eye(d) / d)


def is_faithful(d: PositiveFunctional, singularity_tol: float = FAITHFUL_RTOL) -> bool:
    """True iff the smallest eigenvalue exceeds singularity_tol * largest.

    The default 1e-12 keeps D^(-1/2) computable in double precision.
    """
    return d.min_eigenvalue() > singularity_tol * d.max_eigenvalue()


def purify(d: DensityMatrix) -> BipartiteVector:
    """Canonical purification vec(sqrt(D)); unit norm, right trace gives D."""
    return vec(d.sqrt())


def evaluate_state(omega_vec: BipartiteVector, m: np.ndarray) -> complex:
    """<Omega, (M (x) 1) Omega>; equals Tr(D M) when Omega = vec(sqrt(D)).

    Computed as Tr(X* M X) with X = unvec(Omega), avoiding the Kronecker
    product.
    """
    mm = as_matrix(m)
    x = unvec(omega_vec)
    if mm.shape != (omega_vec.dim_left, omega_vec.dim_left):
        raise ShapeMismatch(
            f"operator shape {mm.shape} incompatible with left factor "
            f"dimension {omega_vec.dim_left}"
        )
    return complex(np.vdot(x, mm @ x))


def functional_distance(phi1: PositiveFunctional, phi2: PositiveFunctional) -> float:
    """Norm distance ||phi1 - phi2|| = ||D1 - D2||_1."""
    if phi1.dim != phi2.dim:
        raise ShapeMismatch(f"dimensions {phi1.dim} != {phi2.dim}")
    return trace_norm(phi1.matrix - phi2.matrix)
