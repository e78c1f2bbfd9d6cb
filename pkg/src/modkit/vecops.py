"""Operator-vector correspondence and the swap/conjugation operators.

Convention (load-bearing, do not change): ``vec`` stacks ROWS, i.e.
``vec(E_mu_nu) = e_mu (x) e_nu``, which for ndarrays is plain C-order
``ravel``. With this choice

    (A (x) B) vec(X)        = vec(A X B^T)
    Tr_right(vec A vec B*)  = A B*
    Tr_left (vec A vec B*)  = (B* A)^T
    vec(|u><v|)             = u (x) conj(v)

The common column-stacking convention would flip the first identity to the
``B^T X A`` form and transpose every downstream Kronecker formula (e.g. the
relative modular operator D_phi (x) (D_omega^-1)^T), so all modules in this
package assume row-major stacking.

A matrix ``A`` of shape (dY, dX) maps to a vector in the bipartite space of
dimension dY * dX with the left factor of dimension dY.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, ShapeMismatch
from .linalg import as_matrix


@dataclass(frozen=True)
class BipartiteVector:
    """Element of a bipartite space H_left (x) H_right.

    Component (mu, nu) sits at flat index ``mu * dim_right + nu``.
    """

    dim_left: int
    dim_right: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).ravel()
        if self.dim_left < 1 or self.dim_right < 1:
            raise DimensionMismatch(
                f"factor dimensions must be positive, got "
                f"({self.dim_left}, {self.dim_right})"
            )
        if amps.size != self.dim_left * self.dim_right:
            raise ShapeMismatch(
                f"amplitude length {amps.size} != "
                f"{self.dim_left} * {self.dim_right}"
            )
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dims(self) -> tuple[int, int]:
        return (self.dim_left, self.dim_right)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "BipartiteVector") -> complex:
        """<self, other>, conjugate-linear in self."""
        self._require_same_dims(other)
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def _require_same_dims(self, other: "BipartiteVector") -> None:
        if self.dims != other.dims:
            raise ShapeMismatch(f"dims {self.dims} != {other.dims}")

    def __add__(self, other: "BipartiteVector") -> "BipartiteVector":
        self._require_same_dims(other)
        return BipartiteVector(*self.dims, self.amplitudes + other.amplitudes)

    def __sub__(self, other: "BipartiteVector") -> "BipartiteVector":
        self._require_same_dims(other)
        return BipartiteVector(*self.dims, self.amplitudes - other.amplitudes)

    def __neg__(self) -> "BipartiteVector":
        return BipartiteVector(*self.dims, -self.amplitudes)

    def __mul__(self, scalar) -> "BipartiteVector":
        return BipartiteVector(*self.dims, self.amplitudes * scalar)

    __rmul__ = __mul__


def vec(a: np.ndarray) -> BipartiteVector:
    """Row-major stacking of a (dY, dX) matrix into H_dY (x) H_dX.

    Isometry: <vec A, vec B> = Tr(A* B).
    """
    m = as_matrix(a)
    return BipartiteVector(m.shape[0], m.shape[1], m.ravel())


def unvec(v: BipartiteVector) -> np.ndarray:
    """Inverse of :func:`vec`; exact round trip."""
    return v.amplitudes.reshape(v.dim_left, v.dim_right).copy()


def kron_apply_vec(a: np.ndarray, b: np.ndarray, x: np.ndarray) -> BipartiteVector:
    """(A (x) B) vec(X) computed as vec(A X B^T), without forming A (x) B.

    Shapes must compose: A is (y1, x1), B is (y2, x2), X is (x1, x2); the
    result lives in H_y1 (x) H_y2.
    """
    a, b, x = as_matrix(a), as_matrix(b), as_matrix(x)
    if x.shape != (a.shape[1], b.shape[1]):
        raise ShapeMismatch(
            f"X has shape {x.shape}, expected ({a.shape[1]}, {b.shape[1]}) "
            f"to compose with A {a.shape} and B {b.shape}"
        )
    return vec(a @ x @ b.T)


def partial_trace(v: BipartiteVector, w: BipartiteVector, side: str) -> np.ndarray:
    """Partial trace of the rank-one operator |v><w| over one factor.

    With A = unvec(v) and B = unvec(w):

    * ``side='right'`` traces out the right factor and returns ``A B*``,
    * ``side='left'`` traces out the left factor and returns ``(B* A)^T``.
    """
    if v.dims != w.dims:
        raise ShapeMismatch(f"dims {v.dims} != {w.dims}")
    a = unvec(v)
    b = unvec(w)
    if side == "right":
        return a @ np.conj(b).T
    if side == "left":
        return (np.conj(b).T @ a).T
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def regroup_product_vec(
    u: BipartiteVector, dims_a: tuple[int, int], dims_b: tuple[int, int]
) -> np.ndarray:
    """Reorder vec(A (x) B) into the multipartite basis order.

    The plain bipartite vec of a product operator indexes components as
    (m, mu, n, nu); the multipartite convention groups row/column pairs per
    factor, (m, n, mu, nu), in which vec(A (x) B) = vec(A) (x) vec(B). The
    permutation is done by reshaping, never as a dense matrix.
    """
    dy1, dx1 = dims_a
    dy2, dx2 = dims_b
    if u.dims != (dy1 * dy2, dx1 * dx2):
        raise ShapeMismatch(
            f"vector dims {u.dims} != product dims ({dy1 * dy2}, {dx1 * dx2})"
        )
    t = u.amplitudes.reshape(dy1, dy2, dx1, dx2)
    return t.transpose(0, 2, 1, 3).ravel()


@dataclass(frozen=True)
class SuperOperator:
    """Dense operator on the vec'd space H_d (x) H_d.

    ``antilinear`` operators apply as ``v -> matrix @ conj(v)``; composing
    through an antilinear factor conjugates everything to its right, which
    the composition rule tracks so that e.g. J Delta^(1/2) stays a plain
    matrix identity.
    """

    d: int
    matrix: np.ndarray = field(repr=False)
    antilinear: bool = False

    def __post_init__(self):
        m = as_matrix(self.matrix)
        n = self.d * self.d
        if m.shape != (n, n):
            raise ShapeMismatch(f"superoperator matrix {m.shape} != ({n}, {n})")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls, d: int) -> "SuperOperator":
        return cls(d, np.eye(d * d, dtype=complex))

    def apply(self, v: BipartiteVector) -> BipartiteVector:
        if v.dims != (self.d, self.d):
            raise ShapeMismatch(f"vector dims {v.dims} != ({self.d}, {self.d})")
        arr = np.conj(v.amplitudes) if self.antilinear else v.amplitudes
        return BipartiteVector(self.d, self.d, self.matrix @ arr)

    def apply_matrix(self, x: np.ndarray) -> np.ndarray:
        """Action on a d x d matrix through the vec correspondence."""
        return unvec(self.apply(vec(x)))

    def compose(self, other: "SuperOperator") -> "SuperOperator":
        """self o other (other acts first)."""
        if self.d != other.d:
            raise ShapeMismatch(f"dimensions {self.d} != {other.d}")
        right = np.conj(other.matrix) if self.antilinear else other.matrix
        return SuperOperator(
            self.d, self.matrix @ right, self.antilinear ^ other.antilinear
        )

    def __matmul__(self, other: "SuperOperator") -> "SuperOperator":
        return self.compose(other)

    def adjoint(self) -> "SuperOperator":
        """Adjoint; for antilinear F this is the F* with <F*u, v> = <Fv, u>."""
        m = self.matrix.T if self.antilinear else np.conj(self.matrix).T
        return SuperOperator(self.d, m, self.antilinear)

    def distance(self, other: "SuperOperator") -> float:
        """HS distance between matrices; infinite if linearity types differ."""
        if self.antilinear != other.antilinear:
            return float("inf")
        return float(np.linalg.norm(self.matrix - other.matrix))


def swap_operator(d: int) -> SuperOperator:
    """P with P(x (x) y) = y (x) x; P vec(X) = vec(X^T) and P^2 = 1."""
    n = d * d
    p = np.zeros((n, n), dtype=complex)
    for i in range(d):
        for j in range(d):
            p[i * d + j, j * d + i] = 1.0
    return SuperOperator(d, p)


def conjugate_vec(v: BipartiteVector) -> BipartiteVector:
    """Entrywise complex conjugation in the standard basis (K; K^2 = 1)."""
    return BipartiteVector(*v.dims, np.conj(v.amplitudes))
