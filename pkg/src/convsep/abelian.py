"""Finite abelian groups as products of cyclic groups.

A group is a list of moduli ``[n_1, ..., n_k]`` representing
``Z_{n_1} x ... x Z_{n_k}``.  Elements are residue tuples.  Elements are
ranked in lexicographic order (last factor fastest), which fixes the
bijection with array indices used throughout the package.  Finite abelian
groups are self-dual, so the dual group reuses the same moduli and the
pairing is the product of the per-factor roots of unity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

__all__ = [
    "FiniteAbelianGroup",
    "GroupElement",
    "MeasurePair",
    "make_group",
    "conjugate_measures",
]


@dataclass(frozen=True)
class GroupElement:
    """A residue tuple; each residue is reduced modulo its factor."""

    residues: tuple[int, ...]

    def __iter__(self):
        return iter(self.residues)

    def __len__(self):
        return len(self.residues)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups with a fixed element enumeration."""

    moduli: tuple[int, ...]
    order: int = field(init=False, compare=False)

    def __post_init__(self):
        if len(self.moduli) == 0:
            raise ValueError("moduli list must be non-empty")
        for n in self.moduli:
            if not isinstance(n, (int, np.integer)) or n < 1:
                raise ValueError(f"every modulus must be a positive integer, got {n!r}")
        object.__setattr__(self, "moduli", tuple(int(n) for n in self.moduli))
        object.__setattr__(self, "order", math.prod(self.moduli))

    # -- elements -----------------------------------------------------------

    def element(self, residues) -> GroupElement:
        if isinstance(residues, GroupElement):
            residues = residues.residues
        residues = tuple(int(r) for r in residues)
        if len(residues) != len(self.moduli):
            raise ValueError(
                f"expected {len(self.moduli)} residues, got {len(residues)}"
            )
        return GroupElement(tuple(r % n for r, n in zip(residues, self.moduli)))

    def identity(self) -> GroupElement:
        return GroupElement((0,) * len(self.moduli))

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        self._check(g)
        self._check(h)
        return GroupElement(
            tuple((a + b) % n for a, b, n in zip(g, h, self.moduli))
        )

    def neg(self, g: GroupElement) -> GroupElement:
        self._check(g)
        return GroupElement(tuple((-a) % n for a, n in zip(g, self.moduli)))

    def sub(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return self.add(g, self.neg(h))

    def _check(self, g: GroupElement):
        if len(g) != len(self.moduli):
            raise ValueError("residue length does not match the group's factors")

    # -- enumeration (mixed radix, last factor fastest) ----------------------

    def rank(self, g: GroupElement) -> int:
        self._check(g)
        return reduce(lambda acc, pair: acc * pair[1] + pair[0] % pair[1],
                      zip(g, self.moduli), 0)

    def unrank(self, r: int) -> GroupElement:
        if not 0 <= r < self.order:
            raise ValueError(f"rank {r} out of range for group of order {self.order}")
        residues = []
        for n in reversed(self.moduli):
            residues.append(r % n)
            r //= n
        return GroupElement(tuple(reversed(residues)))

    def elements(self) -> list[GroupElement]:
        return [self.unrank(r) for r in range(self.order)]

    def difference_table(self) -> np.ndarray:
        """Matrix D with D[i, j] = rank(element_i - element_j)."""
        res = np.array([e.residues for e in self.elements()])  # (order, k)
        mods = np.array(self.moduli)
        diff = (res[:, None, :] - res[None, :, :]) % mods
        weights = np.ones(len(self.moduli), dtype=np.int64)
        for j in range(len(self.moduli) - 2, -1, -1):
            weights[j] = weights[j + 1] * self.moduli[j + 1]
        return diff @ weights

    # -- duality and characters ----------------------------------------------

    def dual(self) -> "FiniteAbelianGroup":
        """The dual group; identical moduli by finite self-duality."""
        return FiniteAbelianGroup(self.moduli)

    def character_value(self, chi: GroupElement, g: GroupElement) -> complex:
        """Pairing exp(2*pi*i * sum_j chi_j g_j / n_j); modulus one."""
        self._check(chi)
        self._check(g)
        phase = sum(c * a / n for c, a, n in zip(chi, g, self.moduli))
        return cmath.exp(2j * cmath.pi * phase)

    def character_table(self) -> np.ndarray:
        """Matrix K with K[rank(chi), rank(g)] = chi(g)."""
        blocks = []
        for n in self.moduli:
            idx = np.arange(n)
            blocks.append(np.exp(2j * np.pi * np.outer(idx, idx) / n))
        return reduce(np.kron, blocks)


@dataclass(frozen=True)
class MeasurePair:
    """Haar weights on G and its dual making Parseval exact.

    primal_weight * dual_weight * |G| == 1.
    """

    primal_weight: float
    dual_weight: float

    def __post_init__(self):
        if self.primal_weight <= 0 or self.dual_weight <= 0:
            raise ValueError("measure weights must be positive")


def make_group(moduli) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(moduli))


def conjugate_measures(group: FiniteAbelianGroup, primal_weight: float = 1.0) -> MeasurePair:
    """Counting-measure weight on G and the conjugate dual weight."""
    if primal_weight <= 0:
        raise ValueError("primal weight must be positive")
    return MeasurePair(primal_weight, 1.0 / (primal_weight * group.order))
