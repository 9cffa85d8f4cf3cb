"""Deterministic random-instance generation.

All randomness flows through a PCG64 generator seeded from the spec, so an
identical spec reproduces the instance bit for bit.  Complex entries are
drawn with independent real and imaginary parts, uniform on [-1, 1].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .abelian import conjugate_measures, make_group
from .hilbert import TensorSpaceShape
from .separability import SeparableDecomposition
from .transform import VectorMapping

__all__ = ["InstanceSpec", "generate", "random_mappings", "random_decomposition",
           "intro_mappings"]

MODES = ("random_mapping", "random_decomposition", "intro_example", "zn_spectral")


@dataclass(frozen=True)
class InstanceSpec:
    seed: int
    moduli: tuple[int, ...]
    dims: tuple[int, ...]
    mode: str = "random_mapping"
    terms: int | None = None          # random_decomposition only
    vectors: tuple = ()               # intro_example: (v0, v1, w0, w1)
    primal_weight: float = 1.0

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown generation mode {self.mode!r}; choose from {MODES}")
        object.__setattr__(self, "moduli", tuple(int(n) for n in self.moduli))
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _uniform_complex(rng, shape) -> np.ndarray:
    return rng.uniform(-1, 1, shape) + 1j * rng.uniform(-1, 1, shape)


def random_mappings(seed, moduli, dims, primal_weight=1.0):
    """One mapping per tensor factor, entries uniform complex on the square."""
    rng = _rng(seed)
    group = make_group(moduli)
    measure = conjugate_measures(group, primal_weight)
    return [
        VectorMapping(group, measure, _uniform_complex(rng, (group.order, d)))
        for d in dims
    ]


def random_decomposition(seed, dims, terms):
    rng = _rng(seed)
    shape = TensorSpaceShape(tuple(dims))
    term_list = []
    for _ in range(terms):
        weight = float(rng.uniform(0.05, 1.0))
        factors = [_uniform_complex(rng, (d,)) for d in shape.dims]
        term_list.append((weight, factors))
    return SeparableDecomposition(shape, tuple(term_list))


def intro_mappings(v0, v1, w0, w1, primal_weight=1.0):
    """The order-2 group example: first factor takes (v0, v1), second (w0, w1)."""
    group = make_group([2])
    measure = conjugate_measures(group, primal_weight)
    first = VectorMapping(group, measure, np.array([v0, v1], dtype=complex))
    second = VectorMapping(group, measure, np.array([w0, w1], dtype=complex))
    return [first, second]


def _zn_spectral_instance(seed, moduli, dims):
    from .spectral import zn_construct

    if len(moduli) != 1:
        raise ValueError("the zn_spectral mode needs a single cyclic group Z_n")
    n = moduli[0]
    rng = _rng(seed)
    bases, lambdas = [], []
    for d in dims:
        if d < n:
            raise ValueError(f"factor dimension {d} smaller than n = {n}")
        random_matrix = _uniform_complex(rng, (d, d))
        q, _ = np.linalg.qr(random_matrix)
        bases.append(q[:n].conj())  # n orthonormal rows
        lambdas.append(_uniform_complex(rng, (n,)))
    return zn_construct(bases, lambdas)


def generate(spec: InstanceSpec):
    """Dispatch on the generation mode; deterministic for a fixed spec."""
    if spec.mode == "random_mapping":
        return random_mappings(spec.seed, spec.moduli, spec.dims, spec.primal_weight)
    if spec.mode == "random_decomposition":
        if spec.terms is None:
            raise ValueError("random_decomposition needs a term count")
        return random_decomposition(spec.seed, spec.dims, spec.terms)
    if spec.mode == "intro_example":
        if len(spec.vectors) != 4:
            raise ValueError("intro_example needs the four vectors (v0, v1, w0, w1)")
        return intro_mappings(*spec.vectors, primal_weight=spec.primal_weight)
    if spec.mode == "zn_spectral":
        return _zn_spectral_instance(spec.seed, spec.moduli, spec.dims)
    raise ValueError(f"unknown mode {spec.mode!r}")
