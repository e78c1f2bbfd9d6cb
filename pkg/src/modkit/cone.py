"""The natural positive cone: vec images of the PSD matrices.

For the standard form of the matrix algebra the cone is exactly
``{vec(X) : X PSD}`` (closure is a no-op in finite dimensions), so
membership is a PSD test on the witness ``unvec(v)``. The cone is
self-dual and pointed, every J-fixed vector splits into two orthogonal
cone elements through the Jordan decomposition of its witness, and every
vector splits into four.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotJFixed, NotPSD
from .linalg import (
    PSD_TOL,
    adjoint,
    check_psd,
    hermiticity_defect,
    jordan_decompose,
)
from .states import PositiveFunctional
from .vecops import BipartiteVector, unvec, vec


@dataclass(frozen=True)
class ConeElement:
    """A cone vector together with its PSD witness (vector = vec(witness))."""

    vector: BipartiteVector
    witness: np.ndarray

    @classmethod
    def from_witness(cls, x: np.ndarray, tol: float = PSD_TOL) -> "ConeElement":
        x = np.asarray(x, dtype=complex)
        if not check_psd(x, tol):
            raise NotPSD("witness is not PSD within tolerance")
        return cls(vec(x), x)

    def norm(self) -> float:
        return self.vector.norm()


def cone_contains(v: BipartiteVector, tol: float = PSD_TOL) -> bool:
    """True iff unvec(v) is PSD within tol (i.e. v = vec(X) for some X >= 0)."""
    if v.dim_left != v.dim_right:
        raise DimensionMismatch(f"cone lives on square bipartitions, got {v.dims}")
    return check_psd(unvec(v), tol)


def representative_of(omega: PositiveFunctional) -> ConeElement:
    """The unique cone vector vec(sqrt(D)) inducing the functional omega."""
    x = omega.sqrt()
    return ConeElement(vec(x), x)


def decompose_j_fixed(
    v: BipartiteVector, tol: float = 1e-10
) -> tuple[ConeElement, ConeElement]:
    """Split a J-fixed vector into orthogonal cone elements.

    J v = v means the witness T = unvec(v) is Hermitian; the Jordan parts
    T+, T- give v = vec(T+) - vec(T-) with <vec(T+), vec(T-)> =
    Tr(T+ T-) = 0.
    """
    if v.dim_left != v.dim_right:
        raise DimensionMismatch(f"expected square bipartition, got {v.dims}")
    t = unvec(v)
    if hermiticity_defect(t) > tol:
        raise NotJFixed(
            f"vector is not fixed by the modular conjugation "
            f"(witness Hermiticity defect {hermiticity_defect(t):.3e})"
        )
    plus, minus = jordan_decompose(t)
    return ConeElement(vec(plus), plus), ConeElement(vec(minus), minus)


def decompose_general(
    v: BipartiteVector,
) -> tuple[ConeElement, ConeElement, ConeElement, ConeElement]:
    """Four-cone-element split v = c1 - c2 + i c3 - i c4.

    The witness splits into Hermitian and anti-Hermitian parts, each of
    which Jordan-decomposes into PSD witnesses.
    """
    if v.dim_left != v.dim_right:
        raise DimensionMismatch(f"expected square bipartition, got {v.dims}")
    y = unvec(v)
    herm = 0.5 * (y + adjoint(y))
    skew = (y - adjoint(y)) / 2j
    h_plus, h_minus = jordan_decompose(herm)
    k_plus, k_minus = jordan_decompose(skew)
    return (
        ConeElement(vec(h_plus), h_plus),
        ConeElement(vec(h_minus), h_minus),
        ConeElement(vec(k_plus), k_plus),
        ConeElement(vec(k_minus), k_minus),
    )


def cone_pairing(lhs: ConeElement, rhs: ConeElement) -> float:
    """<xi, eta> = Tr(X Y) >= 0 for cone elements; returned as a real number."""
    return float(np.real(lhs.vector.inner(rhs.vector)))
