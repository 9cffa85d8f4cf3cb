"""Dense complex linear algebra on tensor-factored Hilbert spaces.

Vectors are plain 1-d complex ndarrays.  The Kronecker convention puts the
last factor index fastest, matching the group-element ranking in
:mod:`convsep.abelian`.  Hermitian products are linear in the second
argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

__all__ = [
    "TensorSpaceShape",
    "HermitianOperator",
    "tensor",
    "projector",
    "inner",
    "eig_hermitian",
    "partial_trace",
    "partial_transpose",
    "min_eigenvalue",
    "is_psd",
]

HERMITICITY_TOL = 1e-10


@dataclass(frozen=True)
class TensorSpaceShape:
    """Factor dimensions of H = H_1 (x) ... (x) H_m, m >= 2."""

    dims: tuple[int, ...]
    total_dim: int = field(init=False, compare=False)

    def __post_init__(self):
        if len(self.dims) < 2:
            raise ValueError("a tensor-factored space needs at least two factors")
        for d in self.dims:
            if not isinstance(d, (int, np.integer)) or d < 1:
                raise ValueError(f"factor dimensions must be positive integers, got {d!r}")
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "total_dim", math.prod(self.dims))


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """Dense Hermitian matrix on a tensor-factored space.

    Construction rejects matrices farther than ``HERMITICITY_TOL`` from
    Hermitian (max-norm) and stores the exact Hermitization (A + A^dag)/2.
    """

    shape: TensorSpaceShape
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        d = self.shape.total_dim
        if m.shape != (d, d):
            raise ValueError(f"matrix shape {m.shape} does not match total dim {d}")
        dev = np.max(np.abs(m - m.conj().T))
        if dev > HERMITICITY_TOL * max(1.0, np.max(np.abs(m))):
            raise ValueError(f"matrix is not Hermitian (deviation {dev:.3e})")
        m = (m + m.conj().T) / 2
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)


def tensor(vectors) -> np.ndarray:
    """Kronecker product of factor vectors, last factor fastest."""
    vectors = [np.asarray(v, dtype=complex).ravel() for v in vectors]
    if not vectors:
        raise ValueError("need at least one vector")
    return reduce(np.kron, vectors)


def inner(v, w) -> complex:
    """Hermitian product, conjugate-linear in the first argument."""
    v = np.asarray(v, dtype=complex).ravel()
    w = np.asarray(w, dtype=complex).ravel()
    if v.shape != w.shape:
        raise ValueError("inner product of vectors of different dimension")
    return complex(np.vdot(v, w))


def projector(v) -> np.ndarray:
    """Unnormalized projector |v><v|; rank <= 1, trace |v|^2."""
    v = np.asarray(v, dtype=complex).ravel()
    return np.outer(v, v.conj())


def eig_hermitian(matrix: np.ndarray):
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues ascending, orthonormal eigenvector columns).
    Raises on LAPACK convergence failure rather than returning garbage.
    """
    try:
        vals, vecs = np.linalg.eigh(np.asarray(matrix, dtype=complex))
    except np.linalg.LinAlgError as exc:
        raise RuntimeError(f"Hermitian eigensolver failed to converge: {exc}") from exc
    return vals, vecs


def min_eigenvalue(matrix: np.ndarray) -> float:
    return float(eig_hermitian(matrix)[0][0])


def is_psd(matrix: np.ndarray, tol_scale: float = 1e-8) -> bool:
    """PSD up to -tol_scale * max(1, |A|_max) on the minimum eigenvalue."""
    m = np.asarray(matrix)
    bound = -tol_scale * max(1.0, float(np.max(np.abs(m))) if m.size else 1.0)
    return min_eigenvalue(m) >= bound


def _as_matrix(op) -> tuple[np.ndarray, TensorSpaceShape]:
    if isinstance(op, HermitianOperator):
        return op.matrix, op.shape
    raise TypeError("expected a HermitianOperator")


def partial_trace(op: HermitianOperator, keep: int) -> np.ndarray:
    """Trace out every factor except ``keep`` (0-based); returns an N_mu x N_mu matrix."""
    matrix, shape = _as_matrix(op)
    m = len(shape.dims)
    if not 0 <= keep < m:
        raise ValueError(f"factor index {keep} out of range for {m} factors")
    t = matrix.reshape(shape.dims + shape.dims)
    # contract row/column indices of every traced factor
    for mu in reversed([i for i in range(m) if i != keep]):
        t = np.trace(t, axis1=mu, axis2=mu + (t.ndim // 2))
    return t


def partial_transpose(op: HermitianOperator, cut: int) -> HermitianOperator:
    """Transpose factors cut..m-1 of the bipartition {0..cut-1} vs {cut..m-1}."""
    matrix, shape = _as_matrix(op)
    m = len(shape.dims)
    if not 1 <= cut < m:
        raise ValueError(f"cut {cut} must split the {m} factors into two non-empty blocks")
    d1 = math.prod(shape.dims[:cut])
    d2 = math.prod(shape.dims[cut:])
    t = matrix.reshape(d1, d2, d1, d2).transpose(0, 3, 2, 1).reshape(
        shape.total_dim, shape.total_dim
    )
    return HermitianOperator(shape, t)
