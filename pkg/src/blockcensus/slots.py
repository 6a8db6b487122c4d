"""Slot calculus for classes of elements of odd prime-power order in
finite classical matrix groups.

Eigenvalues of such an element are roots of unity of ell-power order. The
Frobenius orbits of those roots fall into levels by the valuation of the
root's order, and every orbit at a given level consumes the same amount of
the available rank ("weight") per multiplicity step. An inventory records
how many interchangeable orbit slots exist per level and what centraliser
factor one unit of multiplicity produces. Distributing a weight budget over
the slots then reproduces, purely combinatorially, both the class counts
and the character counts that the closed block formulas predict, which
makes this module the independent second route used for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .counting import CountCache, exact_div, is_prime, shared_cache

LINEAR = "linear"
UNITARY = "unitary"
SYMPLECTIC = "symplectic"
EVEN_ORTHOGONAL = "even_orthogonal"

INVENTORY_FAMILIES = (LINEAR, UNITARY, SYMPLECTIC, EVEN_ORTHOGONAL)

__all__ = [
    "LINEAR",
    "UNITARY",
    "SYMPLECTIC",
    "EVEN_ORTHOGONAL",
    "INVENTORY_FAMILIES",
    "SlotClass",
    "SlotInventory",
    "WeightVector",
    "CentralizerShape",
    "build_inventory",
    "enumerate_weight_vectors",
    "centralizer_shape",
    "unipotent_block_count",
    "block_count_proof_path",
    "eL_series_total",
    "general_linear_order",
]


def general_linear_order(rank: int, size: int) -> int:
    """Order of the invertible rank x rank matrices over a field of the
    given size; the empty (rank 0) group has order 1."""
    if rank < 0 or size < 2:
        raise ValueError("need rank >= 0 and size >= 2")
    total = 1
    top = size**rank
    for i in range(rank):
        total *= top - size**i
    return total


@dataclass(frozen=True)
class SlotClass:
    """One batch of interchangeable slots.

    level is the valuation bucket of the root orders (levels 1..a sit at
    unit weight 1, level a+j costs ell**j per multiplicity). factor_kind and
    degree_multiplier describe the centraliser factor contributed by one
    slot of this class: a linear or unitary matrix group over the extension
    of the listed degree.
    """

    level: int
    slot_count: int
    unit_weight: int
    factor_kind: str
    degree_multiplier: int

    def __post_init__(self) -> None:
        if self.slot_count < 1:
            raise ValueError("slot_count must be >= 1")
        if self.unit_weight < 1:
            raise ValueError("unit_weight must be >= 1")


@dataclass(frozen=True)
class SlotInventory:
    family: str
    ell: int
    d: int
    dprime: int
    a: int
    denom: int
    weyl_base: int

    def _factor_descriptor(self, level_scale: int) -> tuple[str, int]:
        if self.family in (LINEAR, UNITARY):
            kind = LINEAR if self.family == LINEAR else UNITARY
            return kind, self.d * level_scale
        # symplectic and even orthogonal pair the slots; an odd order
        # parameter keeps linear factors of full degree, an even one
        # produces unitary factors over the half-degree extension.
        if self.d % 2:
            return LINEAR, self.d * level_scale
        return UNITARY, self.dprime * level_scale

    def base_slots(self) -> tuple[SlotClass, ...]:
        """Slot classes at levels 1..a, all of unit weight 1."""
        out = []
        ell = self.ell
        for i in range(1, self.a + 1):
            count = exact_div(ell**i - ell ** (i - 1), self.denom)
            kind, degree = self._factor_descriptor(1)
            out.append(SlotClass(i, count, 1, kind, degree))
        return tuple(out)

    def deep_slots(self, budget: int) -> tuple[SlotClass, ...]:
        """Slot classes at levels a+j whose unit weight ell**j still fits
        into the budget; deeper levels cannot receive any multiplicity."""
        out = []
        ell = self.ell
        count = exact_div(ell**self.a - ell ** (self.a - 1), self.denom)
        j = 1
        while ell**j <= budget:
            kind, degree = self._factor_descriptor(ell**j)
            out.append(SlotClass(self.a + j, count, ell**j, kind, degree))
            j += 1
        return tuple(out)

    def slot_classes(self, budget: int) -> tuple[SlotClass, ...]:
        return self.base_slots() + self.deep_slots(budget)


def build_inventory(family: str, ell: int, d: int, a: int) -> SlotInventory:
    """Construct the slot inventory for one family and ell-adic profile.

    d is the relevant cyclotomic order parameter (for the unitary family it
    should already be the twisted one). Requires odd prime ell, a >= 1 and
    d | ell - 1 so that every slot-count division is exact.
    """
    if family not in INVENTORY_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not is_prime(ell):
        raise ValueError(f"ell must be prime, got {ell}")
    if ell == 2:
        raise ValueError("ell = 2 is not supported: the slot formulas require odd ell")
    if a < 1:
        raise ValueError("a must be >= 1")
    if d < 1 or (ell - 1) % d:
        raise ValueError(f"order parameter d={d} must divide ell-1={ell - 1}")
    dprime = d // math.gcd(d, 2)
    denom = d if family in (LINEAR, UNITARY) else 2 * dprime
    if (ell - 1) % denom:
        raise ValueError(f"slot denominator {denom} does not divide ell-1={ell - 1}")
    return SlotInventory(family, ell, d, dprime, a, denom, weyl_base=denom)


@dataclass(frozen=True)
class WeightVector:
    """One distribution of the weight budget: what stays on the principal
    slot plus a multiplicity tuple per slot class (one entry per slot)."""

    principal: int
    mults: tuple[tuple[int, ...], ...]

    def twisted_weight(self, classes: tuple[SlotClass, ...]) -> int:
        return sum(
            sum(occ) * cls.unit_weight for cls, occ in zip(classes, self.mults)
        )


def _occupancy_vectors(count: int, unit_weight: int, budget: int):
    if count == 0:
        yield ()
        return
    for first in range(budget // unit_weight + 1):
        for rest in _occupancy_vectors(count - 1, unit_weight, budget - first * unit_weight):
            yield (first,) + rest


def _distributions(classes: tuple[SlotClass, ...], idx: int, remaining: int):
    if idx == len(classes):
        if remaining == 0:
            yield ()
        return
    cls = classes[idx]
    for occ in _occupancy_vectors(cls.slot_count, cls.unit_weight, remaining):
        used = sum(occ) * cls.unit_weight
        for tail in _distributions(classes, idx + 1, remaining - used):
            yield (occ,) + tail


def enumerate_weight_vectors(inv: SlotInventory, w: int):
    """Yield every weight vector of total weight w exactly once.

    Order is deterministic: principal weight descending, then slot
    multiplicities lexicographically (by level, then slot position). Meant
    for desk-scale budgets; the counting routines below never materialize
    this stream.
    """
    if w < 0:
        raise ValueError("weight must be >= 0")
    classes = inv.slot_classes(w)
    for principal in range(w, -1, -1):
        for mults in _distributions(classes, 0, w - principal):
            yield WeightVector(principal, mults)


@dataclass(frozen=True)
class CentralizerShape:
    """Factorized centraliser type attached to one weight vector: a list of
    (kind, rank, field degree multiplier) triples, principal factor first."""

    factors: tuple[tuple[str, int, int], ...]

    def linear_order(self, q: int) -> int:
        total = 1
        for kind, rank, degree in self.factors:
            if kind != LINEAR:
                raise ValueError("order computation is only wired up for linear factors")
            total *= general_linear_order(rank, q**degree)
        return total


def centralizer_shape(inv: SlotInventory, vec: WeightVector, w: int, r: int = 0) -> CentralizerShape:
    """Shape of the centraliser for one weight vector.

    The principal factor has rank d*principal + r where r is the leftover
    rank not divisible by d (nonzero only when the ambient rank is not a
    multiple of d). Slots with multiplicity zero contribute nothing.
    """
    classes = inv.slot_classes(w)
    principal_kind = LINEAR if inv.family == LINEAR else inv.family
    factors = [(principal_kind, inv.d * vec.principal + r, 1)]
    for cls, occ in zip(classes, vec.mults):
        for m in occ:
            if m:
                factors.append((cls.factor_kind, m, cls.degree_multiplier))
    return CentralizerShape(tuple(factors))


def unipotent_block_count(
    inv: SlotInventory, vec: WeightVector, cache: CountCache | None = None
) -> int:
    """Character contribution of one weight vector to the principal-slot
    block: the relative Weyl group count on the principal weight times one
    partition count per occupied slot."""
    cache = cache or shared_cache
    total = cache.multipartition_count(inv.weyl_base, vec.principal)
    for occ in vec.mults:
        for m in occ:
            total *= cache.partition_count(m)
    return total


def _convolve(a: list[int], b: list[int], cap: int) -> list[int]:
    out = [0] * (cap + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(cap - i + 1):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _twisted_series(inv: SlotInventory, budget: int, cache: CountCache) -> list[int]:
    """Coefficient v = number-weighted count of ways to place weight v on
    the non-principal slots, each slot folded in as a literal partition
    series convolution (one convolution per slot, deliberately avoiding the
    multi-colour counting recurrence)."""
    series = [1] + [0] * budget
    for cls in inv.slot_classes(budget):
        single = [0] * (budget + 1)
        for v in range(budget // cls.unit_weight + 1):
            single[v * cls.unit_weight] = cache.partition_count(v)
        for _ in range(cls.slot_count):
            series = _convolve(series, single, budget)
    return series


def block_count_proof_path(
    family: str, ell: int, d: int, a: int, w: int, cache: CountCache | None = None
) -> int:
    """Character count of the weight-w principal-slot block, computed by
    summing centraliser contributions over all weight vectors.

    Equivalent to enumerating enumerate_weight_vectors and adding up
    unipotent_block_count, but organized as a convolution sweep so large
    budgets stay cheap. Serves as the independent check against the closed
    formulas in the blocks module.
    """
    if w < 0:
        raise ValueError("weight must be >= 0")
    cache = cache or shared_cache
    inv = build_inventory(family, ell, d, a)
    twisted = _twisted_series(inv, w, cache)
    return sum(
        cache.multipartition_count(inv.weyl_base, u) * twisted[w - u]
        for u in range(w + 1)
    )


def eL_series_total(
    kind: str, n: int, e: int, a: int, ell: int, cache: CountCache | None = None
) -> int:
    """Total number of irreducible characters lying over classes of
    ell-power order elements in the rank-n linear or unitary group with
    order parameter e and valuation a.

    Every weight vector contributes the full unipotent character count of
    its centraliser, principal factor included (contrast with the block
    count, where the principal factor is pinned to one block). When n < e
    no nontrivial ell-element fits and the result is just the partition
    count of n.
    """
    if kind not in (LINEAR, UNITARY):
        raise ValueError(f"kind must be {LINEAR!r} or {UNITARY!r}, got {kind!r}")
    if n < 1:
        raise ValueError("rank must be >= 1")
    cache = cache or shared_cache
    inv = build_inventory(kind, ell, e, a)
    w, r = divmod(n, e)
    twisted = _twisted_series(inv, w, cache)
    return sum(
        cache.partition_count(e * u + r) * twisted[w - u] for u in range(w + 1)
    )
