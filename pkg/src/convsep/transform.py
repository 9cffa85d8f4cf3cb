"""Convolution and Fourier analysis on finite abelian groups.

Scalar functions and Hilbert-space-valued mappings are stored as arrays
indexed by element rank.  All transforms are direct O(|G|^2) summations;
the Haar weight of each side is applied inside the operation, so composed
operations never double-count measures.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .abelian import FiniteAbelianGroup, MeasurePair, conjugate_measures

__all__ = [
    "ScalarFunction",
    "VectorMapping",
    "convolve_scalar",
    "tensor_convolve",
    "fourier",
    "fourier_scalar",
    "inverse_fourier",
    "scalarize",
]


@dataclass(frozen=True, eq=False)
class ScalarFunction:
    """A complex function on a finite abelian group, one value per rank."""

    group: FiniteAbelianGroup
    measure: MeasurePair
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.group.order,):
            raise ValueError(
                f"expected {self.group.order} values, got shape {v.shape}"
            )
        v.setflags(write=False)
        object.__setattr__(self, "values", v)


@dataclass(frozen=True, eq=False)
class VectorMapping:
    """A mapping G -> C^dim, one vector per group element (rank order)."""

    group: FiniteAbelianGroup
    measure: MeasurePair
    values: np.ndarray  # (|G|, dim)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.ndim != 2 or v.shape[0] != self.group.order:
            raise ValueError(
                f"expected ({self.group.order}, dim) value array, got shape {v.shape}"
            )
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    @classmethod
    def from_values(cls, group, values, measure: MeasurePair | None = None):
        if measure is None:
            measure = conjugate_measures(group)
        return cls(group, measure, np.asarray(values, dtype=complex))


def _check_compatible(a, b):
    if a.group != b.group:
        raise ValueError("operands live on different groups")
    if a.measure != b.measure:
        raise ValueError("operands carry different measure normalizations")


def convolve_scalar(f: ScalarFunction, fp: ScalarFunction) -> ScalarFunction:
    """(f * f')(g) = sum_h f(g-h) f'(h) * primal_weight."""
    _check_compatible(f, fp)
    diff = f.group.difference_table()
    out = (f.values[diff] * fp.values[None, :]).sum(axis=1) * f.measure.primal_weight
    return ScalarFunction(f.group, f.measure, out)


def _tensor_convolve_pair(a: VectorMapping, b: VectorMapping) -> VectorMapping:
    _check_compatible(a, b)
    diff = a.group.difference_table()
    shifted = a.values[diff]  # (|G|, |G|, dim_a)
    out = np.einsum("ghi,hj->gij", shifted, b.values).reshape(
        a.group.order, a.dim * b.dim
    )
    return VectorMapping(a.group, a.measure, out * a.measure.primal_weight)


def tensor_convolve(mappings) -> VectorMapping:
    """Left fold of the binary tensor convolution over >= 2 mappings."""
    mappings = list(mappings)
    if len(mappings) < 2:
        raise ValueError("tensor convolution needs at least two mappings")
    result = mappings[0]
    for m in mappings[1:]:
        result = _tensor_convolve_pair(result, m)
    return result


def fourier(m: VectorMapping) -> VectorMapping:
    """F m(chi) = sum_g chi(-g) m(g) * primal_weight, on the dual group."""
    kernel = m.group.character_table().conj() * m.measure.primal_weight
    return VectorMapping(m.group.dual(), m.measure, kernel @ m.values)


def fourier_scalar(f: ScalarFunction) -> ScalarFunction:
    kernel = f.group.character_table().conj() * f.measure.primal_weight
    return ScalarFunction(f.group.dual(), f.measure, kernel @ f.values)


def inverse_fourier(m: VectorMapping) -> VectorMapping:
    """Inverse transform with chi(+g) and the conjugate dual weight."""
    group = m.group.dual()
    kernel = group.character_table().T * m.measure.dual_weight
    return VectorMapping(group, m.measure, kernel @ m.values)


def scalarize(m: VectorMapping, v) -> ScalarFunction:
    """Pointwise Hermitian product <v, m(.)>."""
    v = np.asarray(v, dtype=complex).ravel()
    if v.shape[0] != m.dim:
        raise ValueError("scalarization vector dimension mismatch")
    return ScalarFunction(m.group, m.measure, m.values @ v.conj())
