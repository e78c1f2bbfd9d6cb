"""Left/right multiplication superoperators and their functional calculus.

Two related conventions coexist and are kept explicit in constructor names:

* ``BoxTimes(A, B)`` acts as X -> A X B* (the adjoint is built in),
* ``left_mult(A)`` acts as X -> A X and ``right_mult(B)`` as X -> X B
  (no adjoint).

Factors are stored, never the dense d^2 x d^2 matrix; densification via
:meth:`BoxTimes.to_dense` is an explicit conversion meant for test oracles
(the dense form of A boxtimes B is A (x) conj(B) in the row-major vec
convention).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NotSquare, ShapeMismatch
from .linalg import adjoint, as_matrix, hs_norm, psd_power, spectral_decomposition
from .vecops import SuperOperator


@dataclass(frozen=True)
class BoxTimes:
    """Multiplication superoperator X -> A X B*."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", as_matrix(self.a))
        object.__setattr__(self, "b", as_matrix(self.b))

    def apply(self, x: np.ndarray) -> np.ndarray:
        return boxtimes_apply(self, x)

    def compose(self, other: "BoxTimes") -> "BoxTimes":
        """(A1 [x] B1)(A2 [x] B2) = A1 A2 [x] B1 B2."""
        return BoxTimes(self.a @ other.a, self.b @ other.b)

    def adjoint(self) -> "BoxTimes":
        """Hilbert-Schmidt adjoint, (A [x] B)* = A* [x] B*."""
        return BoxTimes(adjoint(self.a), adjoint(self.b))

    def to_dense(self) -> SuperOperator:
        """Dense matrix A (x) conj(B) acting on vec'd square matrices."""
        if self.a.shape != self.b.shape or self.a.shape[0] != self.a.shape[1]:
            raise ShapeMismatch(
                f"dense form needs equal square factors, got "
                f"{self.a.shape} and {self.b.shape}"
            )
        return SuperOperator(self.a.shape[0], np.kron(self.a, np.conj(self.b)))


def boxtimes_apply(op: BoxTimes, x: np.ndarray) -> np.ndarray:
    """A X B* for op = A [x] B."""
    x = as_matrix(x)
    if op.a.shape[1] != x.shape[0] or op.b.shape[1] != x.shape[1]:
        raise ShapeMismatch(
            f"X of shape {x.shape} does not compose with factors "
            f"{op.a.shape}, {op.b.shape}"
        )
    return op.a @ x @ adjoint(op.b)


def left_mult(a: np.ndarray) -> BoxTimes:
    """L_A with L_A(X) = A X."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"left multiplication needs a square factor, got {a.shape}")
    return BoxTimes(a, np.eye(a.shape[0], dtype=complex))


def right_mult(b: np.ndarray) -> BoxTimes:
    """R_B with R_B(X) = X B; stored second factor is B* so A X B** = X B."""
    b = as_matrix(b)
    if b.shape[0] != b.shape[1]:
        raise NotSquare(f"right multiplication needs a square factor, got {b.shape}")
    return BoxTimes(np.eye(b.shape[0], dtype=complex), adjoint(b))


def _pure_side(op: BoxTimes) -> tuple[str, np.ndarray]:
    """Identify op as a pure left or right multiplication; return its factor.

    For a right multiplication the stored factor is B*, so the effective
    factor returned is its adjoint.
    """
    a, b = op.a, op.b
    if a.shape[0] == a.shape[1] and b.shape[0] == b.shape[1]:
        if hs_norm(b - np.eye(b.shape[0])) <= 1e-12 * max(1.0, hs_norm(b)):
            return "left", a
        if hs_norm(a - np.eye(a.shape[0])) <= 1e-12 * max(1.0, hs_norm(a)):
            return "right", adjoint(b)
    raise DomainError(
        "functional calculus is defined for pure left/right multiplications only"
    )


def superop_function(
    op: BoxTimes, f: Callable[[np.ndarray], np.ndarray]
) -> BoxTimes:
    """f(L_A) = L_f(A) (resp. f(R_B) = R_f(B)) for PSD factor and scalar f.

    The factor must be PSD; f is applied through its spectrum with negative
    rounding noise clipped at zero.
    """
    side, factor = _pure_side(op)
    dec = spectral_decomposition(factor)
    vals = np.maximum(dec.eigenvalues, 0.0)
    fa = (dec.eigenvectors * f(vals)) @ adjoint(dec.eigenvectors)
    return left_mult(fa) if side == "left" else right_mult(fa)


def superop_power(op: BoxTimes, alpha: float) -> BoxTimes:
    """(L_A)^alpha = L_(A^alpha); support convention at alpha = 0."""
    side, factor = _pure_side(op)
    fa = psd_power(factor, alpha)
    return left_mult(fa) if side == "left" else right_mult(fa)


def relative_density_superop(a: np.ndarray, b: np.ndarray) -> BoxTimes:
    """L_A R_B^(-1), the multiplication form of the relative modular operator."""
    b = as_matrix(b)
    b_inv = np.linalg.inv(b)
    return left_mult(a).compose(right_mult(b_inv))
