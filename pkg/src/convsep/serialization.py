"""JSON encoding/decoding for groups, vectors, mappings, operators, decompositions.

Complex numbers serialize as two-element [re, im] arrays.  Python's float
repr is shortest-round-trip, so parse(print(x)) reproduces inputs
bit-exactly.
"""

from __future__ import annotations

import numpy as np

from .abelian import FiniteAbelianGroup, conjugate_measures, make_group
from .hilbert import HermitianOperator, TensorSpaceShape
from .separability import SeparableDecomposition
from .transform import VectorMapping

__all__ = [
    "group_to_json", "group_from_json",
    "vector_to_json", "vector_from_json",
    "mapping_to_json", "mapping_from_json",
    "operator_to_json", "operator_from_json",
    "decomposition_to_json", "decomposition_from_json",
]


def _complex_to_pair(z: complex):
    return [float(z.real), float(z.imag)]


def _pair_to_complex(pair) -> complex:
    if len(pair) != 2:
        raise ValueError(f"complex entries must be [re, im] pairs, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def _cvec_to_json(v: np.ndarray):
    return [_complex_to_pair(z) for z in np.asarray(v, dtype=complex).ravel()]


def _cvec_from_json(entries) -> np.ndarray:
    return np.array([_pair_to_complex(p) for p in entries], dtype=complex)


def group_to_json(group: FiniteAbelianGroup) -> dict:
    return {"moduli": list(group.moduli)}


def group_from_json(obj) -> FiniteAbelianGroup:
    return make_group(obj["moduli"])


def vector_to_json(v: np.ndarray, dims=None) -> dict:
    out = {"entries": _cvec_to_json(v)}
    if dims is not None:
        out["dims"] = list(dims) if not np.isscalar(dims) else int(dims)
    return out


def vector_from_json(obj) -> np.ndarray:
    return _cvec_from_json(obj["entries"])


def mapping_to_json(m: VectorMapping) -> dict:
    return {
        "group": group_to_json(m.group),
        "dim": m.dim,
        "primal_weight": m.measure.primal_weight,
        "values": [_cvec_to_json(row) for row in m.values],
    }


def mapping_from_json(obj) -> VectorMapping:
    group = group_from_json(obj["group"])
    measure = conjugate_measures(group, float(obj.get("primal_weight", 1.0)))
    values = np.array([_cvec_from_json(row) for row in obj["values"]], dtype=complex)
    if values.ndim != 2 or values.shape != (group.order, int(obj["dim"])):
        raise ValueError(
            f"mapping values have shape {values.shape}, expected "
            f"({group.order}, {obj['dim']})"
        )
    return VectorMapping(group, measure, values)


def operator_to_json(op: HermitianOperator) -> dict:
    return {
        "dims": list(op.shape.dims),
        "matrix": [[_complex_to_pair(z) for z in row] for row in op.matrix],
    }


def operator_from_json(obj) -> HermitianOperator:
    shape = TensorSpaceShape(tuple(obj["dims"]))
    matrix = np.array(
        [[_pair_to_complex(p) for p in row] for row in obj["matrix"]], dtype=complex
    )
    return HermitianOperator(shape, matrix)


def decomposition_to_json(d: SeparableDecomposition) -> dict:
    return {
        "dims": list(d.shape.dims),
        "terms": [
            {"weight": w, "factors": [_cvec_to_json(v) for v in factors]}
            for w, factors in d.terms
        ],
    }


def decomposition_from_json(obj) -> SeparableDecomposition:
    shape = TensorSpaceShape(tuple(obj["dims"]))
    terms = [
        (float(t["weight"]), [_cvec_from_json(v) for v in t["factors"]])
        for t in obj["terms"]
    ]
    return SeparableDecomposition(shape, tuple(terms))
