"""Spectral-decomposition checks for convolution-built separable operators.

A mapping whose values are pairwise orthogonal or real-proportional yields,
after summing projectors, a spectral decomposition of a separable operator.
This module classifies value pairs, implements the two-point angle
criterion on the order-2 group, and builds and checks the cyclic-group
orthonormal-system construction (orthogonality identity, homothety of the
reduced operators, projector property of the sum).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .abelian import GroupElement, conjugate_measures, make_group
from .hilbert import HermitianOperator, TensorSpaceShape, partial_trace, projector
from .transform import VectorMapping, tensor_convolve

__all__ = [
    "PairClass",
    "PairVerdict",
    "SpectralVerdict",
    "AngleCondition",
    "ZnSpectralConstruction",
    "ProjectorPropertyResult",
    "PreconditionError",
    "gram_spectral_condition",
    "z2_angle_condition",
    "predicted_gram_diagonal",
    "zn_construct",
    "zn_orthogonality_check",
    "homothety_check",
    "projector_property_check",
]

ORTHO_TOL = 1e-10
PROPORTIONAL_TOL = 1e-9


class PreconditionError(ValueError):
    """A proposition's hypothesis fails, so its verdict does not apply."""


class PairClass(enum.Enum):
    ORTHOGONAL = "Orthogonal"
    REAL_PROPORTIONAL = "RealProportional"
    NEITHER = "Neither"


@dataclass(frozen=True)
class PairVerdict:
    kind: PairClass
    coefficient: float | None = None  # lambda for REAL_PROPORTIONAL


@dataclass(frozen=True, eq=False)
class SpectralVerdict:
    """Pairwise classification over group-element pairs (rank indexed)."""

    pairwise: list  # list of lists of PairVerdict
    is_spectral: bool


class AngleCondition(enum.Enum):
    CONDITION_A = "ConditionA"
    CONDITION_B = "ConditionB"
    NEITHER = "Neither"


def _classify_pair(x: np.ndarray, y: np.ndarray, scale: float) -> PairVerdict:
    """Orthogonal, real-proportional (x = lambda*y, lambda real), or neither."""
    ip = complex(np.vdot(y, x))  # <y, x>, linear in x
    if abs(ip) <= ORTHO_TOL * max(scale, 1e-30):
        return PairVerdict(PairClass.ORTHOGONAL)
    ny2 = float(np.vdot(y, y).real)
    if ny2 == 0.0:
        # y = 0, x != 0: y = 0*x, so the pair is proportional the other way
        return PairVerdict(PairClass.REAL_PROPORTIONAL, 0.0)
    lam = ip.real / ny2  # least-squares real coefficient
    if np.max(np.abs(x - lam * y)) <= PROPORTIONAL_TOL * max(scale, 1e-30):
        return PairVerdict(PairClass.REAL_PROPORTIONAL, lam)
    return PairVerdict(PairClass.NEITHER)


def gram_spectral_condition(m: VectorMapping) -> SpectralVerdict:
    """Classify every value pair; spectral iff no pair is Neither."""
    values = m.values
    scale = float(np.max(np.abs(values))) if values.size else 0.0
    n = values.shape[0]
    table = []
    ok = True
    for g in range(n):
        row = []
        for h in range(n):
            if g == h:
                row.append(PairVerdict(PairClass.REAL_PROPORTIONAL, 1.0))
                continue
            verdict = _classify_pair(values[g], values[h], scale)
            if verdict.kind is PairClass.NEITHER:
                ok = False
            row.append(verdict)
        table.append(row)
    return SpectralVerdict(table, ok)


def _cos_angle(v: np.ndarray, w: np.ndarray) -> float:
    nv = float(np.linalg.norm(v))
    nw = float(np.linalg.norm(w))
    return float(np.vdot(v, w).real) / (nv * nw)


def _linearly_dependent(v: np.ndarray, w: np.ndarray, tol: float = ORTHO_TOL) -> bool:
    nv = float(np.linalg.norm(v))
    nw = float(np.linalg.norm(w))
    if nv == 0.0 or nw == 0.0:
        return True
    return abs(abs(complex(np.vdot(v, w))) - nv * nw) <= tol * nv * nw


def z2_angle_condition(v0, v1, w0, w1, tol: float = ORTHO_TOL) -> AngleCondition:
    """Two-point angle criterion for the order-2 group construction.

    With all four vectors of the same positive norm, the projector pair
    built from the convolution values is a spectral decomposition iff the
    two angles sum to pi mod 2*pi (equivalently the cosines cancel), or
    both pairs are linearly dependent.
    """
    vs = [np.asarray(x, dtype=complex).ravel() for x in (v0, v1, w0, w1)]
    norms = [float(np.linalg.norm(x)) for x in vs]
    if min(norms) <= 0:
        raise PreconditionError("all four vectors must be nonzero")
    if max(norms) - min(norms) > 1e-10 * max(norms):
        raise PreconditionError(
            f"vectors must share a common norm; got norms {norms}"
        )
    v0, v1, w0, w1 = vs
    if _linearly_dependent(v0, v1) and _linearly_dependent(w0, w1):
        return AngleCondition.CONDITION_B
    if abs(_cos_angle(v0, v1) + _cos_angle(w0, w1)) <= tol:
        return AngleCondition.CONDITION_A
    return AngleCondition.NEITHER


@dataclass(frozen=True, eq=False)
class ZnSpectralConstruction:
    """Tensor convolution of per-factor orthonormal systems scaled by lambdas."""

    mapping: VectorMapping
    shape: TensorSpaceShape
    bases: tuple      # per factor: (n, N_mu) array of orthonormal rows
    lambdas: tuple    # per factor: length-n complex array
    n: int


def zn_construct(bases, lambdas) -> ZnSpectralConstruction:
    """Build the cyclic-group construction v^mu_g = lambda^mu_g * e^mu_g.

    ``bases[mu]`` holds n orthonormal vectors (rows) in the mu-th factor
    space; ``lambdas[mu]`` is a length-n complex array.  Returns the m-fold
    tensor convolution over the cyclic group of order n with counting
    measure, along with the construction data needed by the checkers.
    """
    bases = [np.asarray(b, dtype=complex) for b in bases]
    lambdas = [np.asarray(l, dtype=complex).ravel() for l in lambdas]
    if len(bases) < 2:
        raise ValueError("the construction needs at least two factors")
    if len(bases) != len(lambdas):
        raise ValueError("one lambda function per factor required")
    n = bases[0].shape[0]
    for b, l in zip(bases, lambdas):
        if b.ndim != 2 or b.shape[0] != n:
            raise ValueError("every factor must supply the same number n of vectors")
        if b.shape[1] < n:
            raise ValueError(
                f"factor dimension {b.shape[1]} is too small for n = {n} vectors"
            )
        gram = b @ b.conj().T
        if np.max(np.abs(gram - np.eye(n))) > 1e-10:
            raise ValueError("factor basis is not orthonormal")
        if l.shape[0] != n:
            raise ValueError("lambda function must have one value per group element")
    group = make_group([n])
    measure = conjugate_measures(group)
    factor_maps = [
        VectorMapping(group, measure, l[:, None] * b) for b, l in zip(bases, lambdas)
    ]
    conv = tensor_convolve(factor_maps)
    shape = TensorSpaceShape(tuple(b.shape[1] for b in bases))
    return ZnSpectralConstruction(
        conv, shape, tuple(bases), tuple(lambdas), n
    )


def _circular_convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return (a[idx] * b[None, :]).sum(axis=1)


def predicted_gram_diagonal(lambdas) -> np.ndarray:
    """Squared norms of the construction values: the cyclic convolution of
    the |lambda|^2 profiles, one factor per tensor slot."""
    profiles = [np.abs(np.asarray(l, dtype=complex).ravel()) ** 2 for l in lambdas]
    out = profiles[0]
    for p in profiles[1:]:
        out = _circular_convolve(out, p)
    return out


def zn_orthogonality_check(m: VectorMapping, lambdas, tol: float = 1e-10):
    """Verify the construction values are mutually orthogonal with the
    predicted squared norms.

    The Gram matrix must equal diag(predicted_gram_diagonal(lambdas)); with
    constant lambdas that diagonal is flat, so the Gram is a multiple of
    the identity.  Returns (ok, max residual relative to the largest
    predicted norm).
    """
    lambdas = [np.asarray(l, dtype=complex).ravel() for l in lambdas]
    gram = m.values @ m.values.conj().T
    expected = np.diag(predicted_gram_diagonal(lambdas))
    scale = max(float(np.max(expected.real)), 1e-30)
    residual = float(np.max(np.abs(gram - expected))) / scale
    return residual <= tol, residual


def homothety_check(constr: ZnSpectralConstruction, g: GroupElement | int):
    """Deviation of each reduced projector from its homothety value.

    With constant lambdas the partial trace of P[conv(g)] onto factor mu is
    |prod lambda|^2 * n^(m-2) times the projection onto the spanned n-dim
    block (the identity when N_mu = n).  Returns [(mu, deviation)].
    """
    for l in constr.lambdas:
        if np.max(np.abs(l - l[0])) > 1e-12:
            raise PreconditionError(
                "the homothety statement requires a constant lambda per factor"
            )
    n = constr.n
    m = len(constr.shape.dims)
    rank = g if isinstance(g, int) else constr.mapping.group.rank(g)
    op = HermitianOperator(constr.shape, projector(constr.mapping.values[rank]))
    amplitude = math.prod(abs(complex(l[0])) ** 2 for l in constr.lambdas)
    constant = amplitude * n ** (m - 2)
    deviations = []
    for mu, basis in enumerate(constr.bases):
        reduced = partial_trace(op, keep=mu)
        expected = constant * (basis.conj().T @ basis)  # projection onto the span
        deviations.append((mu, float(np.max(np.abs(reduced - expected)))))
    return deviations


@dataclass(frozen=True)
class ProjectorPropertyResult:
    holds: bool
    constant: float
    residual: float
    precondition_ok: bool
    message: str = ""


def projector_property_check(m: VectorMapping, tol: float = 1e-9) -> ProjectorPropertyResult:
    """Check that S = sum_g P[m(g)] satisfies S^2 = c*S with c the common norm^2.

    Requires mutually orthogonal, equal-norm values; a precondition failure
    is reported in the result, not raised.
    """
    values = m.values
    norms = np.linalg.norm(values, axis=1)
    nonzero = norms[norms > 0]
    if nonzero.size == 0:
        return ProjectorPropertyResult(True, 0.0, 0.0, True, "zero mapping")
    scale = float(np.max(norms))
    if (np.max(nonzero) - np.min(nonzero)) > 1e-10 * scale:
        return ProjectorPropertyResult(
            False, 0.0, float("inf"), False, "values do not share a common norm"
        )
    gram = values @ values.conj().T
    off = gram - np.diag(np.diag(gram))
    if np.max(np.abs(off)) > ORTHO_TOL * scale ** 2:
        return ProjectorPropertyResult(
            False, 0.0, float("inf"), False, "values are not mutually orthogonal"
        )
    s = sum(projector(values[g]) for g in range(values.shape[0]))
    c = float(np.max(nonzero)) ** 2
    residual = float(np.max(np.abs(s @ s - c * s))) / max(c * np.max(np.abs(s)), 1e-30)
    return ProjectorPropertyResult(residual <= tol, c, residual, True)
