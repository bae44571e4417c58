"""Power digraph and power graph of a finite group."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .group import FiniteGroup


@dataclass(frozen=True, eq=False)
class PowerDigraph:
    """Arc ``x -> y`` iff ``x != y`` and ``y`` is a power of ``x``."""

    n: int
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...] = field(repr=False)
    labels: tuple[str, ...] | None = field(default=None, repr=False)

    @classmethod
    def from_out_adjacency(cls, out_adj: Sequence[Sequence[int]],
                           labels: Sequence[str] | None = None) -> PowerDigraph:
        n = len(out_adj)
        out = tuple(tuple(sorted(set(a))) for a in out_adj)
        ins: list[list[int]] = [[] for _ in range(n)]
        for x, targets in enumerate(out):
            for y in targets:
                if y == x:
                    raise ValueError(f"loop at vertex {x}")
                ins[y].append(x)
        return cls(n, out, tuple(tuple(a) for a in ins),
                   tuple(labels) if labels is not None else None)

    def has_arc(self, x: int, y: int) -> bool:
        return (self.out_bits[x] >> y) & 1 == 1

    def arcs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in self.out_adj[x]]

    @cached_property
    def out_bits(self) -> tuple[int, ...]:
        return tuple(sum(1 << y for y in a) for a in self.out_adj)

    @cached_property
    def in_bits(self) -> tuple[int, ...]:
        return tuple(sum(1 << y for y in a) for a in self.in_adj)

    def is_automorphism(self, p: Sequence[int]) -> bool:
        return self.violated_arc(p) is None

    def violated_arc(self, p: Sequence[int]) -> tuple[int, int] | None:
        """An arc whose image is not an arc, or None.

        A bijection mapping every arc to an arc preserves non-arcs as well,
        since the arc set is finite.
        """
        if sorted(p) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        for x, y in self.arcs():
            if not self.has_arc(p[x], p[y]):
                return (x, y)
        return None

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)


@dataclass(frozen=True, eq=False)
class PowerGraph:
    """Underlying simple graph of a power digraph."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, repr=False)

    def has_edge(self, x: int, y: int) -> bool:
        return (self.adj_bits[x] >> y) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in self.adj[x] if x < y]

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        return tuple(sum(1 << y for y in a) for a in self.adj)

    def is_automorphism(self, p: Sequence[int]) -> bool:
        return self.violated_edge(p) is None

    def violated_edge(self, p: Sequence[int]) -> tuple[int, int] | None:
        if sorted(p) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        for x, y in self.edges():
            if not self.has_edge(p[x], p[y]):
                return (x, y)
        return None

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)


def power_digraph(G: FiniteGroup) -> PowerDigraph:
    out = [[y for y in G.powers(x) if y != x] for x in range(G.size)]
    return PowerDigraph.from_out_adjacency(out, labels=G.labels)


def underlying_graph(D: PowerDigraph) -> PowerGraph:
    adj = [set(D.out_adj[x]) | set(D.in_adj[x]) for x in range(D.n)]
    return PowerGraph(D.n, tuple(tuple(sorted(a)) for a in adj), D.labels)


def power_graph(G: FiniteGroup) -> PowerGraph:
    return underlying_graph(power_digraph(G))


def closed_neighborhood(P: PowerGraph, x: int) -> tuple[int, ...]:
    return tuple(sorted(set(P.adj[x]) | {x}))


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(D: PowerDigraph | PowerGraph) -> str:
    """DOT text; vertices first, then arcs/edges sorted by source then target."""
    directed = isinstance(D, PowerDigraph)
    lines = ["digraph {" if directed else "graph {"]
    for v in range(D.n):
        lines.append(f"  {_quote(D.label(v))};")
    pairs = D.arcs() if directed else D.edges()
    op = "->" if directed else "--"
    for x, y in sorted(pairs):
        lines.append(f"  {_quote(D.label(x))} {op} {_quote(D.label(y))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
