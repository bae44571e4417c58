"""Brute-force automorphism search, independent of the subgroup machinery.

The search only looks at the graph: vertices are mapped in ascending index
order, candidates must share the degree signature and agree on adjacency
with every vertex already mapped.  Nothing here knows about cyclic
subgroups, generator classes or P(G).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .automorphisms import (
    aut_directed,
    aut_undirected,
    decompose_directed,
    decompose_undirected,
    reglue_directed,
    reglue_undirected,
    structure,
)
from .group import FiniteGroup
from .perm import ClosureTooLarge, Perm, closure, group_order
from .power_graph import PowerDigraph, PowerGraph

DEFAULT_AUT_CAP = 10**6
DEFAULT_CLOSURE_CAP = 10**7


class CapExceeded(RuntimeError):
    def __init__(self, cap: int, partial: int):
        super().__init__(f"more than {cap} automorphisms (stopped after {partial})")
        self.cap = cap
        self.partial = partial


@dataclass(frozen=True)
class AutomorphismSet:
    perms: tuple[Perm, ...]

    @property
    def count(self) -> int:
        return len(self.perms)


@dataclass(frozen=True)
class AutomorphismChain:
    """Exact group order as a product of orbit lengths along a base."""

    order: int
    generators: tuple[Perm, ...]
    base: tuple[int, ...]
    orbit_sizes: tuple[int, ...]


class _Matcher:
    def __init__(self, n: int, relations: Sequence[Sequence[int]], signature: Sequence):
        self.n = n
        self.relations = [tuple(r) for r in relations]
        classes: dict = {}
        for v, sig in enumerate(signature):
            classes[sig] = classes.get(sig, 0) | (1 << v)
        self.cands = [classes[sig] for sig in signature]

    def _candidates(self, v: int, f: list[int], done: list[int], used: int) -> int:
        cand = self.cands[v] & ~used
        for u in done:
            fu = f[u]
            for rel in self.relations:
                if (rel[u] >> v) & 1:
                    cand &= rel[fu]
                else:
                    cand &= ~rel[fu]
            if not cand:
                break
        return cand

    def search(self, fixed: dict[int, int] | None = None) -> Iterator[Perm]:
        f = [-1] * self.n
        used = 0
        done: list[int] = []
        for v, w in (fixed or {}).items():
            if not (self._candidates(v, f, done, used) >> w) & 1:
                return
            f[v] = w
            used |= 1 << w
            done.append(v)
        todo = [v for v in range(self.n) if f[v] < 0]
        yield from self._extend(f, used, done, todo, 0)

    def _extend(self, f, used, done, todo, pos):
        if pos == len(todo):
            yield tuple(f)
            return
        v = todo[pos]
        cand = self._candidates(v, f, done, used)
        while cand:
            low = cand & -cand
            cand ^= low
            f[v] = low.bit_length() - 1
            done.append(v)
            yield from self._extend(f, used | low, done, todo, pos + 1)
            done.pop()
        f[v] = -1

    def enumerate(self, cap: int) -> AutomorphismSet:
        found = []
        for p in self.search():
            found.append(p)
            if len(found) > cap:
                raise CapExceeded(cap, len(found))
        return AutomorphismSet(tuple(sorted(found)))

    def chain(self) -> AutomorphismChain:
        n = self.n
        gens: list[Perm] = []
        sizes = [1] * n
        for i in range(n - 1, -1, -1):
            prefix = {a: a for a in range(i)}
            orbit = _orbit(i, gens)
            dead: set[int] = set()
            for w in range(i, n):
                if not (self.cands[i] >> w) & 1 or w in orbit or w in dead:
                    continue
                p = next(self.search({**prefix, i: w}), None)
                if p is None:
                    dead |= _orbit(w, gens)
                else:
                    gens.append(p)
                    orbit = _orbit(i, gens)
            sizes[i] = len(orbit)
        order = 1
        for s in sizes:
            order *= s
        return AutomorphismChain(order, tuple(gens), tuple(range(n)), tuple(sizes))


def _orbit(point: int, gens: Sequence[Perm]) -> set[int]:
    orbit = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            if g[x] not in orbit:
                orbit.add(g[x])
                stack.append(g[x])
    return orbit


def _digraph_matcher(D: PowerDigraph) -> _Matcher:
    sig = [(len(D.in_adj[v]), len(D.out_adj[v])) for v in range(D.n)]
    return _Matcher(D.n, [D.out_bits, D.in_bits], sig)


def _graph_matcher(P: PowerGraph) -> _Matcher:
    return _Matcher(P.n, [P.adj_bits], [len(a) for a in P.adj])


def digraph_automorphisms(D: PowerDigraph, cap: int = DEFAULT_AUT_CAP) -> AutomorphismSet:
    return _digraph_matcher(D).enumerate(cap)


def graph_automorphisms(P: PowerGraph, cap: int = DEFAULT_AUT_CAP) -> AutomorphismSet:
    return _graph_matcher(P).enumerate(cap)


def digraph_automorphism_chain(D: PowerDigraph) -> AutomorphismChain:
    return _digraph_matcher(D).chain()


def graph_automorphism_chain(P: PowerGraph) -> AutomorphismChain:
    return _graph_matcher(P).chain()


def closure_order(gens: Sequence[Perm], cap: int = DEFAULT_CLOSURE_CAP,
                  degree: int | None = None) -> int:
    gens = [tuple(g) for g in gens]
    if degree is None:
        if not gens:
            return 1
        degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise ValueError("generators of different degrees")
    return len(closure(gens, degree, cap))


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    group: str
    size: int
    directed_order: int
    undirected_order: int
    brute_directed: int
    brute_undirected: int
    exhaustive_directed: bool
    exhaustive_undirected: bool
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "size": self.size,
            "directed_order": str(self.directed_order),
            "undirected_order": str(self.undirected_order),
            "brute_directed": str(self.brute_directed),
            "brute_undirected": str(self.brute_undirected),
            "exhaustive": {"directed": self.exhaustive_directed,
                           "undirected": self.exhaustive_undirected},
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in self.checks],
            "ok": self.ok,
        }

    def to_text(self) -> str:
        mode = {True: "every automorphism", False: "strong generators"}
        lines = [
            f"group {self.group} (order {self.size})",
            f"  digraph: computed {self.directed_order}, search {self.brute_directed}"
            f" [{mode[self.exhaustive_directed]}]",
            f"  graph:   computed {self.undirected_order}, search {self.brute_undirected}"
            f" [{mode[self.exhaustive_undirected]}]",
        ]
        for c in self.checks:
            lines.append(f"  {'PASS' if c.passed else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else ""))
        lines.append("all checks pass" if self.ok else "FAILED")
        return "\n".join(lines)


def _first_failure(perms, test) -> str:
    for p in perms:
        try:
            msg = test(p)
        except Exception as exc:  # witness for the report
            return f"{p}: {exc}"
        if msg:
            return f"{p}: {msg}"
    return ""


def _class_images_ok(p: Perm, S) -> str:
    by_set = {frozenset(c.elements): c for c in S.classes}
    for c in S.classes:
        img = by_set.get(frozenset(p[x] for x in c.elements))
        if img is None:
            return f"class {c.id} is not mapped onto a class"
        if img.kind is not c.kind or img.params != c.params:
            return f"class {c.id} ({c.kind.value}, {c.params}) -> class {img.id} ({img.kind.value}, {img.params})"
    return ""


def verify_group(G: FiniteGroup, cap: int = DEFAULT_AUT_CAP,
                 closure_cap: int = DEFAULT_CLOSURE_CAP, strict: bool = False) -> VerifyReport:
    """Compare the description built from the subgroup poset with a graph search.

    When a graph has at most ``cap`` automorphisms every one is enumerated
    and checked.  Otherwise the checks run over the strong generating set of
    the search chain: together with matching orders this proves the same
    set equality, and class-type preservation is closed under products.
    With ``strict`` an oversized group raises :class:`CapExceeded` instead.
    """
    S = structure(G)
    n = G.size
    ad, au = aut_directed(G), aut_undirected(G)
    dmatch, gmatch = _digraph_matcher(S.digraph), _graph_matcher(S.graph)
    dchain, gchain = dmatch.chain(), gmatch.chain()
    ex_d, ex_u = dchain.order <= cap, gchain.order <= cap
    if strict and not (ex_d and ex_u):
        raise CapExceeded(cap, min(max(dchain.order, gchain.order), cap + 1))
    dperms = dmatch.enumerate(cap).perms if ex_d else dchain.generators
    gperms = gmatch.enumerate(cap).perms if ex_u else gchain.generators

    rep = VerifyReport(G.name, n, ad.order, au.order, dchain.order, gchain.order, ex_d, ex_u)
    checks = rep.checks

    detail = f"{dchain.order} vs {ad.order}"
    if ex_d and len(dperms) != dchain.order:
        detail += f"; enumeration found {len(dperms)}"
    checks.append(Check("directed order", dchain.order == ad.order and
                        (not ex_d or len(dperms) == dchain.order), detail))
    detail = f"{gchain.order} vs {au.order}"
    if ex_u and len(gperms) != gchain.order:
        detail += f"; enumeration found {len(gperms)}"
    checks.append(Check("undirected order", gchain.order == au.order and
                        (not ex_u or len(gperms) == gchain.order), detail))

    problems = []
    for desc, graph, perms, exhaustive, brute_order, decomp in (
        (ad, S.digraph, dperms, ex_d, dchain.order, lambda p: decompose_directed(p, G)),
        (au, S.graph, gperms, ex_u, gchain.order, lambda p: decompose_undirected(p, G)),
    ):
        bad = [g for g in desc.generators if not graph.is_automorphism(g)]
        if bad:
            problems.append(f"{desc.variant}: generator {bad[0]} is not an automorphism")
            continue
        if exhaustive:
            try:
                generated = closure(desc.generators, n, closure_cap)
            except ClosureTooLarge as exc:
                problems.append(f"{desc.variant}: closure cap {exc.cap} exceeded")
                continue
            if generated != set(perms):
                problems.append(f"{desc.variant}: closure has {len(generated)} elements, "
                                f"search found {len(perms)}; sets differ")
        else:
            got = group_order(desc.generators, n)
            if got != brute_order:
                problems.append(f"{desc.variant}: generated order {got} != {brute_order}")
            msg = _first_failure(perms, lambda p: "" if decomp(p) else "no decomposition")
            if msg:
                problems.append(f"{desc.variant}: search generator outside the computed group: {msg}")
    checks.append(Check("generator closure", not problems, "; ".join(problems)))

    def round_trip_d(p):
        xi, sigma = decompose_directed(p, G)
        return "" if reglue_directed(xi, sigma, G) == p else "reglued permutation differs"

    def round_trip_u(p):
        tau, xi, sigma = decompose_undirected(p, G)
        return "" if reglue_undirected(tau, xi, sigma, G) == p else "reglued permutation differs"

    msg = "; ".join(m for m in (_first_failure(dperms, round_trip_d),
                                _first_failure(gperms, round_trip_u)) if m)
    checks.append(Check("decomposition round-trip", not msg, msg))

    msg = _first_failure(gperms, lambda p: _class_images_ok(p, S))
    checks.append(Check("class types preserved", not msg, msg))
    return rep
