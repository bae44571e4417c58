"""Automorphism groups of the power digraph and power graph.

``Aut(digraph)`` is the semidirect product of the symmetric groups on the
generator classes [C_i] by P(G); ``Aut(graph)`` is the same with the
closed-neighbourhood classes in place of the generator classes.  Orders,
generating sets and the factorization of individual automorphisms are
produced from the subgroup poset alone, without any graph search.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial, prod

from .cyclic import CyclicSubgroupTable, enumerate_cyclic_subgroups
from .equivalence import ClassKind, EquivalenceClass, classify_all
from .group import FiniteGroup, make_cyclic
from .numtheory import divisors, prime_power, totient
from .perm import Perm, compose, inverse, transposition
from .pgroup import (
    PGroupChain,
    SubgroupPermutation,
    fixes_generator_classes,
    induced_subgroup_permutation,
    is_pg_member,
    lift,
    pg_chain,
)
from .power_graph import PowerDigraph, PowerGraph, power_digraph, underlying_graph


class NotAnAutomorphism(ValueError):
    def __init__(self, pair: tuple[int, int], directed: bool):
        kind = "arc" if directed else "edge"
        super().__init__(f"not an automorphism: {kind} {pair} is not mapped to an {kind}")
        self.pair = pair


class GroupStructure:
    """Lazily computed graphs, subgroup table, classes and P(G) for one group."""

    def __init__(self, G: FiniteGroup):
        self.group = G

    @cached_property
    def digraph(self) -> PowerDigraph:
        return power_digraph(self.group)

    @cached_property
    def graph(self) -> PowerGraph:
        return underlying_graph(self.digraph)

    @cached_property
    def table(self) -> CyclicSubgroupTable:
        return enumerate_cyclic_subgroups(self.group)

    @cached_property
    def classes(self) -> list[EquivalenceClass]:
        return classify_all(self.graph, self.table, self.group)

    @cached_property
    def class_of(self) -> tuple[int, ...]:
        out = [0] * self.group.size
        for c in self.classes:
            for x in c.elements:
                out[x] = c.id
        return tuple(out)

    @cached_property
    def pg(self) -> PGroupChain:
        return pg_chain(self.table)


@lru_cache(maxsize=64)
def structure(G: FiniteGroup) -> GroupStructure:
    return GroupStructure(G)


@dataclass(frozen=True)
class AutDescription:
    variant: str  # "directed" or "undirected"
    order: int
    pg_order: int
    block_sizes: tuple[int, ...]
    generators: tuple[Perm, ...]

    @property
    def factored_shape(self) -> str:
        return f"{self.pg_order} * " + "*".join(f"{b}!" for b in self.block_sizes)

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "order": str(self.order),
            "pg_order": str(self.pg_order),
            "block_sizes": list(self.block_sizes),
            "factored": self.factored_shape,
            "generators": [list(g) for g in self.generators],
        }


def _block_transpositions(n: int, blocks) -> list[Perm]:
    gens = []
    for block in blocks:
        for a, b in zip(block, block[1:]):
            gens.append(transposition(n, a, b))
    return gens


def _assemble(G: FiniteGroup, variant: str, blocks) -> AutDescription:
    S = structure(G)
    sizes = tuple(len(b) for b in blocks)
    gens = _block_transpositions(G.size, blocks)
    gens += [lift(s, S.table) for s in S.pg.generators]
    order = S.pg.order * prod(factorial(b) for b in sizes)
    return AutDescription(variant, order, S.pg.order, sizes, tuple(gens))


def aut_directed(G: FiniteGroup) -> AutDescription:
    S = structure(G)
    return _assemble(G, "directed", [c.generators for c in S.table.subgroups])


def aut_undirected(G: FiniteGroup) -> AutDescription:
    S = structure(G)
    return _assemble(G, "undirected", [c.elements for c in S.classes])


def _check_perm(pi, n: int) -> Perm:
    pi = tuple(int(v) for v in pi)
    if len(pi) != n or sorted(pi) != list(range(n)):
        raise ValueError("expected a permutation of the group elements")
    return pi


def decompose_directed(pi, G: FiniteGroup) -> tuple[Perm, SubgroupPermutation]:
    """Split a digraph automorphism as ``pi = compose(xi, lift(sigma))``.

    ``sigma`` is the action <x> -> <x^pi> on subgroups and ``xi`` fixes every
    generator class setwise.
    """
    S = structure(G)
    pi = _check_perm(pi, G.size)
    bad = S.digraph.violated_arc(pi)
    if bad is not None:
        raise NotAnAutomorphism(bad, directed=True)
    sigma = induced_subgroup_permutation(pi, S.table)
    if not is_pg_member(sigma, S.table):
        raise RuntimeError(f"induced subgroup map {sigma} is not in P(G)")
    xi = compose(pi, inverse(lift(sigma, S.table)))
    if not fixes_generator_classes(xi, S.table):
        raise RuntimeError("residual permutation moves a generator class")
    return xi, sigma


def reglue_directed(xi: Perm, sigma: SubgroupPermutation, G: FiniteGroup) -> Perm:
    return compose(xi, lift(sigma, structure(G).table))


def _class_correction(pi: Perm, S: GroupStructure) -> Perm:
    """The class-preserving tau with compose(tau, pi) a digraph automorphism.

    Identity class: tau undoes pi.  Type II: tau is the identity.  Type III:
    elements of each order are matched, in ascending index, with the
    pi-preimages of the same-order elements of the image class.
    """
    G = S.group
    orders = G.elem_order
    pinv = inverse(pi)
    tau = list(range(G.size))
    for c in S.classes:
        if c.kind is ClassKind.I:
            for x in c.elements:
                tau[x] = pinv[x]
        elif c.kind is ClassKind.III:
            image = S.classes[S.class_of[pi[c.elements[0]]]]
            if image.params != c.params or {pi[x] for x in c.elements} != set(image.elements):
                raise RuntimeError(f"class {c.id} is not mapped onto a class with the same parameters")
            for t in range(1, c.r + 1):
                o = c.p ** (c.s + t)
                xs = [x for x in c.elements if orders[x] == o]
                ys = [y for y in image.elements if orders[y] == o]
                if len(xs) != len(ys):
                    raise RuntimeError(f"class {c.id}: order-{o} layers differ in size")
                for x, y in zip(xs, ys):
                    tau[x] = pinv[y]
    return tuple(tau)


def decompose_undirected(pi, G: FiniteGroup) -> tuple[Perm, Perm, SubgroupPermutation]:
    """Split a graph automorphism as ``pi = compose(inverse(tau), xi, lift(sigma))``."""
    S = structure(G)
    pi = _check_perm(pi, G.size)
    bad = S.graph.violated_edge(pi)
    if bad is not None:
        raise NotAnAutomorphism(bad, directed=False)
    tau = _class_correction(pi, S)
    xi, sigma = decompose_directed(compose(tau, pi), G)
    return tau, xi, sigma


def reglue_undirected(tau: Perm, xi: Perm, sigma: SubgroupPermutation, G: FiniteGroup) -> Perm:
    return compose(inverse(tau), xi, lift(sigma, structure(G).table))


def fixes_classes(p: Perm, G: FiniteGroup) -> bool:
    cls = structure(G).class_of
    return all(cls[p[x]] == cls[x] for x in range(len(p)))


def decomposition_count(pi: Perm, G: FiniteGroup, pg_members) -> int:
    """Number of sigma in ``pg_members`` for which pi * lift(sigma)^-1 fixes every [C_i]."""
    T = structure(G).table
    return sum(1 for s in pg_members
               if fixes_generator_classes(compose(pi, inverse(lift(s, T))), T))


def directed_equals_undirected(G: FiniteGroup) -> bool:
    by_classes = all(len(c.constituents) == 1 for c in structure(G).classes)
    by_orders = aut_directed(G).order == aut_undirected(G).order
    if by_classes != by_orders:
        raise RuntimeError(f"{G.name}: class criterion {by_classes} disagrees with orders")
    return by_classes


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    conjecture_order: int
    computed_order: int
    brute_order: int | None
    prime_power: tuple[int, int] | None

    @property
    def holds(self) -> bool:
        return self.conjecture_order == self.computed_order

    @property
    def expected_holds(self) -> bool:
        """False exactly when n = p^m with m >= 2."""
        return self.prime_power is None or self.prime_power[1] == 1

    @property
    def consistent(self) -> bool:
        brute_ok = self.brute_order is None or self.brute_order == self.computed_order
        return brute_ok and self.holds == self.expected_holds

    @property
    def verdict(self) -> str:
        if self.holds:
            return "holds"
        return "fails (prime power)" if self.prime_power else "fails"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "conjecture_order": str(self.conjecture_order),
            "computed_order": str(self.computed_order),
            "brute_order": None if self.brute_order is None else str(self.brute_order),
            "prime_power": list(self.prime_power) if self.prime_power else None,
            "verdict": self.verdict,
            "consistent": self.consistent,
        }


def conjecture_order(n: int) -> int:
    """(phi(n)+1)! times phi(d)! over the divisors d other than 1 and n."""
    inner = [totient(d) for d in divisors(n) if d not in (1, n)]
    return factorial(totient(n) + 1) * prod(factorial(v) for v in inner)


def conjecture_zn(n: int, brute: bool | None = None) -> ConjectureReport:
    """Compare the conjectured order of Aut(P_{Z_n}) with the computed one.

    ``brute`` defaults to a graph-search cross-check for n <= 14.
    """
    if n < 2:
        raise ValueError("conjecture is stated for n >= 2")
    G = make_cyclic(n)
    computed = aut_undirected(G).order
    brute_order = None
    if brute or (brute is None and n <= 14):
        from .oracle import graph_automorphism_chain

        brute_order = graph_automorphism_chain(structure(G).graph).order
    return ConjectureReport(n, conjecture_order(n), computed, brute_order, prime_power(n))
