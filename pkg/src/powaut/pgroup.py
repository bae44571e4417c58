"""P(G): permutations of the cyclic subgroups preserving order and inclusion.

A member must preserve inclusion *and* non-inclusion, so both directions are
checked for every pair of assigned subgroups.  Members act on G by sending
the j-th generator of C_i to the j-th generator of the image subgroup.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .cyclic import CyclicSubgroupTable, invariant_vector
from .perm import Perm, identity

MATERIALIZE_CAP = 10**6

SubgroupPermutation = Perm


class PGTooLarge(RuntimeError):
    def __init__(self, order: int, cap: int):
        super().__init__(f"|P(G)| = {order} exceeds the materialization cap {cap}")
        self.order = order
        self.cap = cap


class _Search:
    def __init__(self, T: CyclicSubgroupTable):
        self.k = T.k
        self.up = T.up_bits
        self.down = T.down_bits
        vectors = [invariant_vector(T, i) for i in range(T.k)]
        by_vec: dict[tuple, int] = {}
        for i, v in enumerate(vectors):
            by_vec[v] = by_vec.get(v, 0) | (1 << i)
        self.cands = [by_vec[v] for v in vectors]
        # largest subgroups first
        self.seq = sorted(range(T.k), key=lambda i: (-T.subgroups[i].order, i))

    def _fits(self, assign: list[int], done: list[int], b: int, c: int) -> bool:
        up, down = self.up, self.down
        ub, db, uc, dc = up[b], down[b], up[c], down[c]
        for a in done:
            sa = assign[a]
            if (ub >> a) & 1 != (uc >> sa) & 1:
                return False
            if (db >> a) & 1 != (dc >> sa) & 1:
                return False
        return True

    def solutions(self, fixed: dict[int, int]) -> Iterator[list[int]]:
        """All members of P(G) extending the partial map ``fixed``."""
        assign = [-1] * self.k
        used = 0
        done: list[int] = []
        for a, c in fixed.items():
            if not (self.cands[a] >> c) & 1 or (used >> c) & 1:
                return
            if not self._fits(assign, done, a, c):
                return
            assign[a] = c
            used |= 1 << c
            done.append(a)
        todo = [b for b in self.seq if b not in fixed]
        yield from self._extend(assign, used, done, todo, 0)

    def _extend(self, assign, used, done, todo, pos):
        if pos == len(todo):
            yield list(assign)
            return
        b = todo[pos]
        avail = self.cands[b] & ~used
        while avail:
            low = avail & -avail
            c = low.bit_length() - 1
            avail ^= low
            if self._fits(assign, done, b, c):
                assign[b] = c
                done.append(b)
                yield from self._extend(assign, used | low, done, todo, pos + 1)
                done.pop()
                assign[b] = -1


@dataclass(frozen=True)
class PGroupChain:
    """Strong generating set of P(G) along a base of subgroup ids."""

    order: int
    generators: tuple[SubgroupPermutation, ...]
    base: tuple[int, ...]
    orbit_sizes: tuple[int, ...]


def _orbit(point: int, gens: Sequence[Perm]) -> set[int]:
    orbit = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


@lru_cache(maxsize=64)
def pg_chain(T: CyclicSubgroupTable) -> PGroupChain:
    """Orbit-stabilizer walk over the backtracking tree.

    Levels are processed deepest first so that stabilizer generators found
    lower down enlarge orbits higher up and save searches.
    """
    search = _Search(T)
    base = search.seq
    gens: list[Perm] = []
    sizes = [1] * T.k
    for i in range(T.k - 1, -1, -1):
        b = base[i]
        prefix = {a: a for a in base[:i]}
        orbit = _orbit(b, gens)
        dead: set[int] = set()
        avail = search.cands[b]
        for a in base[:i]:
            avail &= ~(1 << a)
        for c in range(T.k):
            if not (avail >> c) & 1 or c in orbit or c in dead:
                continue
            sol = next(search.solutions({**prefix, b: c}), None)
            if sol is None:
                dead |= _orbit(c, gens)
            else:
                gens.append(tuple(sol))
                orbit = _orbit(b, gens)
        sizes[i] = len(orbit)
    order = 1
    for s in sizes:
        order *= s
    return PGroupChain(order, tuple(gens), tuple(base), tuple(sizes))


def pg_order(T: CyclicSubgroupTable) -> int:
    return pg_chain(T).order


def pg_generators(T: CyclicSubgroupTable) -> tuple[SubgroupPermutation, ...]:
    return pg_chain(T).generators


def pg_count(T: CyclicSubgroupTable) -> int:
    """|P(G)| by plain backtracking with solution counting."""
    return sum(1 for _ in _Search(T).solutions({}))


def compute_pg(T: CyclicSubgroupTable, cap: int = MATERIALIZE_CAP) -> list[SubgroupPermutation]:
    order = pg_order(T)
    if order > cap:
        raise PGTooLarge(order, cap)
    out = sorted(tuple(s) for s in _Search(T).solutions({}))
    assert len(out) == order, (len(out), order)
    assert all(a < b for a, b in zip(out, out[1:]))
    return out


def is_pg_member(sigma: Sequence[int], T: CyclicSubgroupTable) -> bool:
    k = T.k
    if sorted(sigma) != list(range(k)):
        return False
    if any(T.subgroups[i].order != T.subgroups[sigma[i]].order for i in range(k)):
        return False
    return all(T.inclusion[i][j] == T.inclusion[sigma[i]][sigma[j]]
               for i in range(k) for j in range(k))


def lift(sigma: Sequence[int], T: CyclicSubgroupTable) -> Perm:
    """Permutation of G sending [C_i]_j to [C_sigma(i)]_j."""
    out = [0] * len(T.elem_to_subgroup)
    for c in T.subgroups:
        target = T.subgroups[sigma[c.id]]
        if len(target.generators) != len(c.generators):
            raise RuntimeError(f"lift: |[C_{c.id}]| != |[C_{target.id}]|")
        for g, h in zip(c.generators, target.generators):
            out[g] = h
    return tuple(out)


def induced_subgroup_permutation(pi: Sequence[int], T: CyclicSubgroupTable) -> SubgroupPermutation:
    """The map <x> -> <x^pi> on subgroup ids (well defined for digraph automorphisms)."""
    return tuple(T.subgroup_of(pi[c.generators[0]]) for c in T.subgroups)


def fixes_generator_classes(p: Sequence[int], T: CyclicSubgroupTable) -> bool:
    return all(T.subgroup_of(p[x]) == T.subgroup_of(x) for x in range(len(p)))


def subgroup_identity(T: CyclicSubgroupTable) -> SubgroupPermutation:
    return identity(T.k)

