"""Spectral calculus, norms, and decompositions for Hermitian/PSD matrices.

Conventions used throughout the package:

* matrices are dense ``numpy`` arrays of ``complex128``,
* eigenvalues are returned in ascending order (``numpy.linalg.eigh`` order),
  which makes decompositions reproducible run to run,
* Hermiticity is tested with the scale-free criterion
  ``||A - A*||_HS <= rtol * max(1, ||A||_HS)``,
* fractional matrix powers use the principal branch via the spectral
  decomposition and are defined on PSD inputs only; inputs with genuinely
  negative spectrum are rejected instead of complexified.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BadExponent, DomainError, NotHermitian, NotSquare, ShapeMismatch

# Relative tolerance for Hermiticity and PSD checks; strict enough for
# d <= 16 in double precision while remaining scale-free.
HERMITICITY_RTOL = 1e-10
PSD_TOL = 1e-10


def as_matrix(a) -> np.ndarray:
    """Coerce input to a 2-D complex ndarray without copying when possible."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a 2-D array, got ndim={m.ndim}")
    return m


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(a).T


def hs_norm(a: np.ndarray) -> float:
    """Hilbert-Schmidt (Frobenius) norm."""
    return float(np.linalg.norm(a))


def hs_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product Tr(A* B), conjugate-linear in A."""
    return complex(np.vdot(a, b))


def hermiticity_defect(a: np.ndarray) -> float:
    """Relative deviation from Hermiticity, ||A - A*|| / max(1, ||A||)."""
    return hs_norm(a - adjoint(a)) / max(1.0, hs_norm(a))


def require_hermitian(a: np.ndarray, rtol: float = HERMITICITY_RTOL) -> np.ndarray:
    """Validate Hermiticity and return the symmetrized matrix (A + A*)/2.

    Raises
    ------
    NotHermitian
        If ``||A - A*||_HS > rtol * max(1, ||A||_HS)``.
    """
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise NotSquare(f"expected square matrix, got shape {m.shape}")
    if hermiticity_defect(m) > rtol:
        raise NotHermitian(
            f"matrix is not Hermitian within rtol={rtol:g} "
            f"(defect {hermiticity_defect(m):.3e})"
        )
    return 0.5 * (m + adjoint(m))


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigendata of a Hermitian matrix.

    Attributes
    ----------
    eigenvalues : ndarray
        Real eigenvalues in ascending order.
    eigenvectors : ndarray
        Orthonormal eigenvectors as columns, aligned with ``eigenvalues``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """V diag(lambda) V*."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ adjoint(v)

    def apply(self, f: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
        """V f(lambda) V* for a scalar function applied to the eigenvalues."""
        v = self.eigenvectors
        return (v * f(self.eigenvalues)) @ adjoint(v)


def spectral_decomposition(
    a: np.ndarray, rtol: float = HERMITICITY_RTOL
) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix with ascending eigenvalues."""
    m = require_hermitian(a, rtol)
    vals, vecs = np.linalg.eigh(m)
    return SpectralDecomposition(vals, vecs)


def apply_spectral_function(
    a: np.ndarray,
    f: Callable[[np.ndarray], np.ndarray],
    domain: Callable[[np.ndarray], np.ndarray] | None = None,
    rtol: float = HERMITICITY_RTOL,
) -> np.ndarray:
    """Apply a scalar function to a Hermitian matrix through its spectrum.

    Parameters
    ----------
    a : ndarray
        Hermitian matrix (validated against ``rtol``).
    f : callable
        Scalar function, applied elementwise to the eigenvalue array. May be
        complex-valued (e.g. ``lam -> exp(1j*t*log(lam))``); the result is
        Hermitian exactly when ``f`` is real-valued on the spectrum.
    domain : callable, optional
        Predicate on the eigenvalue array declaring where ``f`` is defined,
        e.g. ``lambda lam: lam > 0`` for the logarithm. Eigenvalues failing
        the predicate raise :class:`DomainError`.

    Returns
    -------
    ndarray
        ``V f(Lambda) V*``.
    """
    dec = spectral_decomposition(a, rtol)
    if domain is not None:
        ok = np.asarray(domain(dec.eigenvalues))
        if not np.all(ok):
            bad = dec.eigenvalues[~ok]
            raise DomainError(
                f"eigenvalues outside the declared domain of f: {bad}"
            )
    return dec.apply(f)


def psd_power(a: np.ndarray, s: float, zero_tol: float = PSD_TOL) -> np.ndarray:
    """Principal power A^s of a PSD matrix.

    Negative rounding noise in the spectrum (above ``-zero_tol * scale``) is
    clipped to zero; anything more negative raises :class:`DomainError`.
    For ``s > 0`` the power is continuous at zero and applied directly; at
    ``s = 0`` the support convention holds (eigenvalues at or below
    ``zero_tol * scale`` map to 0, the rest to 1), yielding the support
    projection, which is the operator-monotone limit of ``t^s``. ``s < 0``
    requires full support.
    """
    dec = spectral_decomposition(a)
    vals = dec.eigenvalues
    scale = max(float(vals[-1]), 0.0)
    floor = zero_tol * max(1.0, scale)
    if vals[0] < -floor:
        raise DomainError(
            f"matrix is not PSD (min eigenvalue {vals[0]:.3e}); refusing "
            f"fractional power of negative spectrum"
        )
    clipped = np.maximum(vals, 0.0)
    support = clipped > floor
    if s < 0 and not np.all(support):
        raise DomainError("negative power of a singular PSD matrix")
    if s == 0:
        out = support.astype(float)
    else:
        out = clipped**s
    v = dec.eigenvectors
    return (v * out) @ adjoint(v)


def matrix_sqrt(a: np.ndarray) -> np.ndarray:
    """Principal square root of a PSD matrix."""
    return psd_power(a, 0.5)


def support_projection(a: np.ndarray, zero_tol: float = PSD_TOL) -> np.ndarray:
    """Spectral projection onto the range of a PSD matrix."""
    return psd_power(a, 0.0, zero_tol)


def jordan_decompose(t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split a Hermitian matrix into its positive and negative parts.

    Returns PSD matrices ``(T_plus, T_minus)`` with ``T = T_plus - T_minus``
    and ``T_plus @ T_minus = 0``.
    """
    dec = spectral_decomposition(t)
    v = dec.eigenvectors
    plus = (v * np.maximum(dec.eigenvalues, 0.0)) @ adjoint(v)
    minus = (v * np.maximum(-dec.eigenvalues, 0.0)) @ adjoint(v)
    return plus, minus


def abs_hermitian(t: np.ndarray) -> np.ndarray:
    """|T| = T_plus + T_minus for Hermitian T."""
    dec = spectral_decomposition(t)
    return dec.apply(np.abs)


def schatten_norm(a: np.ndarray, p: float) -> float:
    """Schatten p-norm, (sum_i sigma_i^p)^(1/p) over singular values.

    ``p = 1`` is the trace norm, ``p = 2`` the Hilbert-Schmidt norm and
    ``p = inf`` the operator norm. Raises :class:`BadExponent` for p < 1.
    """
    if p < 1:
        raise BadExponent(f"Schatten norm requires p >= 1, got {p}")
    sigma = np.linalg.svd(as_matrix(a), compute_uv=False)
    if np.isinf(p):
        return float(sigma[0]) if sigma.size else 0.0
    return float(np.sum(sigma**p) ** (1.0 / p))


def trace_norm(a: np.ndarray) -> float:
    """Trace norm ||A||_1."""
    return schatten_norm(a, 1)


def check_psd(a: np.ndarray, tol: float = PSD_TOL) -> bool:
    """True iff A is Hermitian within ``tol`` and its spectrum is >= -tol scale.

    The eigenvalue floor is ``-tol * max(1, ||A||_HS)``; non-Hermitian input
    returns False rather than raising.
    """
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise NotSquare(f"expected square matrix, got shape {m.shape}")
    if hermiticity_defect(m) > tol:
        return False
    vals = np.linalg.eigvalsh(0.5 * (m + adjoint(m)))
    return bool(vals[0] >= -tol * max(1.0, hs_norm(m)))
