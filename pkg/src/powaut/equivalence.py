"""Closed-neighbourhood classes of the power graph and their types.

Two vertices are equivalent when their closed neighbourhoods coincide.  The
class of the identity has type I.  Any other class is either one generator
class ``[x]`` (type II) or a chain ``[x_1] u ... u [x_r]`` with
``|x_i| = p^(s+i)`` and ``r >= 2`` (type III, parameters ``(p, r, s)``).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .cyclic import CyclicSubgroupTable
from .group import FiniteGroup
from .numtheory import prime_power
from .power_graph import PowerGraph


class ClassificationError(RuntimeError):
    """A class does not have the structure every power graph must have."""


class ClassKind(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class EquivalenceClass:
    id: int
    elements: tuple[int, ...]
    kind: ClassKind
    constituents: tuple[int, ...]  # subgroup ids whose generator lists make up the class
    p: int | None = None
    r: int | None = None
    s: int | None = None

    @property
    def params(self) -> tuple[int, int, int] | None:
        if self.kind is not ClassKind.III:
            return None
        return (self.p, self.r, self.s)

    def to_json(self) -> dict:
        out: dict = {"id": self.id, "type": self.kind.value}
        if self.kind is ClassKind.III:
            out.update(p=self.p, r=self.r, s=self.s)
        out["elements"] = list(self.elements)
        return out


def equivalence_classes(P: PowerGraph) -> list[tuple[int, ...]]:
    """Vertices grouped by closed neighbourhood, sorted by least element."""
    groups: dict[int, list[int]] = {}
    for x in range(P.n):
        groups.setdefault(P.adj_bits[x] | (1 << x), []).append(x)
    return sorted((tuple(v) for v in groups.values()), key=lambda c: c[0])


def classify_class(c, T: CyclicSubgroupTable, G: FiniteGroup, id: int = 0) -> EquivalenceClass:
    elements = tuple(sorted(c))
    constituents = tuple(sorted({T.subgroup_of(x) for x in elements}))
    covered = sorted(g for i in constituents for g in T.subgroups[i].generators)
    if covered != list(elements):
        raise ClassificationError(
            f"class {elements} is not a union of generator classes")
    if G.identity in elements:
        return EquivalenceClass(id, elements, ClassKind.I, constituents)
    if len(constituents) == 1:
        return EquivalenceClass(id, elements, ClassKind.II, constituents)

    chain = sorted(constituents, key=lambda i: T.subgroups[i].order)
    pp = prime_power(T.subgroups[chain[0]].order)
    if pp is None:
        raise ClassificationError(
            f"class {elements}: smallest constituent order is not a prime power")
    p, first = pp
    r = len(chain)
    s = first - 1
    for t, i in enumerate(chain):
        if T.subgroups[i].order != p ** (s + 1 + t):
            raise ClassificationError(
                f"class {elements}: orders {[T.subgroups[j].order for j in chain]} "
                f"are not consecutive powers of {p}")
    for a, b in zip(chain, chain[1:]):
        if not T.inclusion[a][b]:
            raise ClassificationError(f"class {elements}: subgroups {a}, {b} do not form a chain")
    return EquivalenceClass(id, elements, ClassKind.III, tuple(chain), p, r, s)


def classify_all(P: PowerGraph, T: CyclicSubgroupTable, G: FiniteGroup) -> list[EquivalenceClass]:
    return [classify_class(c, T, G, id=i) for i, c in enumerate(equivalence_classes(P))]


def check_type3_size(c: EquivalenceClass) -> bool:
    if c.kind is not ClassKind.III:
        raise ValueError("size law applies to type III classes only")
    return len(c.elements) == c.p**c.s * (c.p**c.r - 1)
