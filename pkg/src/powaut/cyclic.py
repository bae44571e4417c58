"""Cyclic subgroups, generator classes and the inclusion poset."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .group import FiniteGroup


@dataclass(frozen=True)
class CyclicSubgroup:
    id: int
    order: int
    elements: tuple[int, ...]
    generators: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class CyclicSubgroupTable:
    """All cyclic subgroups of a group, sorted by (order, element set).

    ``elem_to_subgroup[x] == (i, j)`` means ``x`` is the j-th generator
    (ascending element index) of subgroup ``i``, i.e. ``<x>`` is subgroup i.
    ``inclusion[i][j]`` is true iff subgroup i is contained in subgroup j.
    """

    subgroups: tuple[CyclicSubgroup, ...]
    elem_to_subgroup: tuple[tuple[int, int], ...]
    inclusion: tuple[tuple[bool, ...], ...]
    hasse: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.subgroups)

    def subgroup_of(self, x: int) -> int:
        return self.elem_to_subgroup[x][0]

    @cached_property
    def up_bits(self) -> tuple[int, ...]:
        """Bit j of ``up_bits[i]`` is set iff C_i is a subset of C_j."""
        return tuple(sum(1 << j for j, inc in enumerate(row) if inc) for row in self.inclusion)

    @cached_property
    def down_bits(self) -> tuple[int, ...]:
        k = self.k
        return tuple(sum(1 << i for i in range(k) if self.inclusion[i][j]) for j in range(k))

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(c.order for c in self.subgroups)

    def to_json(self) -> dict:
        return {
            "subgroups": [
                {"id": c.id, "order": c.order, "elements": list(c.elements),
                 "generators": list(c.generators)}
                for c in self.subgroups
            ],
            "inclusion_pairs": [
                [i, j] for i in range(self.k) for j in range(self.k)
                if i != j and self.inclusion[i][j]
            ],
        }


def enumerate_cyclic_subgroups(G: FiniteGroup) -> CyclicSubgroupTable:
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    assigned = [False] * G.size
    for x in range(G.size):
        if assigned[x]:
            continue
        pw = G.powers(x)
        m = len(pw)
        gens = tuple(sorted(pw[t] for t in range(m) if gcd(t, m) == 1))
        for g in gens:
            assigned[g] = True
        found[tuple(sorted(pw))] = gens

    keyed = sorted(found.items(), key=lambda kv: (len(kv[0]), kv[0]))
    subgroups = tuple(CyclicSubgroup(i, len(elems), elems, gens)
                      for i, (elems, gens) in enumerate(keyed))
    e2s: list[tuple[int, int]] = [(-1, -1)] * G.size
    for c in subgroups:
        for j, g in enumerate(c.generators):
            e2s[g] = (c.id, j)

    masks = [sum(1 << v for v in c.elements) for c in subgroups]
    k = len(subgroups)
    inclusion = tuple(tuple(masks[i] & ~masks[j] == 0 for j in range(k)) for i in range(k))
    above = [sum(1 << j for j in range(k) if j != i and inclusion[i][j]) for i in range(k)]
    below = [sum(1 << i for i in range(k) if i != j and inclusion[i][j]) for j in range(k)]
    hasse = tuple((i, j) for i in range(k) for j in range(k)
                  if (above[i] >> j) & 1 and not (above[i] & below[j]))
    return CyclicSubgroupTable(subgroups, tuple(e2s), inclusion, hasse)


def generator_class(T: CyclicSubgroupTable, x: int) -> tuple[int, ...]:
    """``[x]``, the generators of ``<x>``."""
    return T.subgroups[T.subgroup_of(x)].generators


def invariant_vector(T: CyclicSubgroupTable, i: int) -> tuple:
    """(order, orders strictly below, orders strictly above), multisets sorted.

    Equal vectors are necessary for two subgroups to share an orbit of P(G).
    """
    below = sorted(T.subgroups[j].order for j in range(T.k) if j != i and T.inclusion[j][i])
    above = sorted(T.subgroups[j].order for j in range(T.k) if j != i and T.inclusion[i][j])
    return (T.subgroups[i].order, tuple(below), tuple(above))
