"""Permutations of ``0..n-1`` stored as tuples of images.

Products are read left to right: ``compose(a, b)`` applies ``a`` first and
then ``b``, so ``compose(a, b)[x] == b[a[x]]``.  This matches right actions,
where ``x^(ab) = (x^a)^b``.
"""
from __future__ import annotations

import re
from collections import deque
from typing import Iterable, Sequence

Perm = tuple[int, ...]


class PermutationError(ValueError):
    pass


class ClosureTooLarge(RuntimeError):
    """Raised when a breadth-first closure grows past its cap."""

    def __init__(self, cap: int, partial: int):
        super().__init__(f"closure exceeded cap of {cap} elements")
        self.cap = cap
        self.partial = partial


def identity(n: int) -> Perm:
    return tuple(range(n))


def check_perm(p: Sequence[int], n: int | None = None) -> Perm:
    p = tuple(int(v) for v in p)
    if n is not None and len(p) != n:
        raise PermutationError(f"expected degree {n}, got {len(p)}")
    if sorted(p) != list(range(len(p))):
        raise PermutationError(f"not a permutation: {p}")
    return p


def compose(*perms: Perm) -> Perm:
    """Product of ``perms``, the leftmost applied first."""
    if not perms:
        raise PermutationError("compose needs at least one permutation")
    out = perms[0]
    for q in perms[1:]:
        out = tuple(q[v] for v in out)
    return out


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def is_identity(p: Perm) -> bool:
    return all(i == v for i, v in enumerate(p))


def transposition(n: int, a: int, b: int) -> Perm:
    p = list(range(n))
    p[a], p[b] = b, a
    return tuple(p)


def from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Perm:
    p = list(range(n))
    seen: set[int] = set()
    for cyc in cycles:
        for v in cyc:
            if not 0 <= v < n:
                raise PermutationError(f"point {v} outside 0..{n - 1}")
            if v in seen:
                raise PermutationError(f"point {v} appears twice")
            seen.add(v)
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]] if cyc else []):
            p[a] = b
    return tuple(p)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Perm:
    """Parse cycle notation such as ``(0 1 2)(3 4)``; commas also separate points."""
    text = text.strip()
    if text in ("", "()"):
        return identity(n)
    rest = _CYCLE_RE.sub("", text).strip()
    if rest:
        raise PermutationError(f"unexpected text {rest!r} in cycle notation")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        points = [tok for tok in re.split(r"[\s,]+", body.strip()) if tok]
        try:
            cycles.append([int(tok) for tok in points])
        except ValueError:
            raise PermutationError(f"bad cycle ({body})") from None
    return from_cycles(cycles, n)


def format_cycles(p: Perm) -> str:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def closure(gens: Iterable[Perm], n: int, cap: int = 10**7) -> set[Perm]:
    """All products of ``gens`` by breadth-first search from the identity."""
    gens = [tuple(g) for g in gens]
    e = identity(n)
    seen = {e}
    queue = deque([e])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(g[v] for v in p)
            if q not in seen:
                seen.add(q)
                if len(seen) > cap:
                    raise ClosureTooLarge(cap, len(seen))
                queue.append(q)
    return seen


def closure_order(gens: Iterable[Perm], n: int, cap: int = 10**7) -> int:
    return len(closure(gens, n, cap))


class _Level:
    __slots__ = ("base", "gens", "trans")

    def __init__(self, base: int, n: int):
        self.base = base
        self.gens: list[Perm] = []
        # point -> permutation taking base to that point
        self.trans: dict[int, Perm] = {base: identity(n)}


def stabilizer_chain(gens: Iterable[Perm], n: int) -> list[_Level]:
    """Deterministic Schreier-Sims.

    Every Schreier generator is sifted into the next level, so the chain is
    complete on return and the group order is the product of orbit lengths.
    """
    levels: list[_Level] = []

    def sift(g: Perm, start: int) -> tuple[Perm, int]:
        for i in range(start, len(levels)):
            lv = levels[i]
            x = g[lv.base]
            t = lv.trans.get(x)
            if t is None:
                return g, i
            g = compose(g, inverse(t))
        return g, len(levels)

    def add(g: Perm, i: int) -> None:
        # g lies in the group of level i; its residue h fixes the bases of
        # levels i..j-1, so it belongs to the generating sets of all of them
        h, j = sift(g, i)
        if is_identity(h):
            return
        if j == len(levels):
            moved = next(v for v in range(n) if h[v] != v)
            levels.append(_Level(moved, n))
        for m in range(j, i - 1, -1):
            lv = levels[m]
            lv.gens.append(h)
            queue = deque(lv.trans)
            while queue:
                x = queue.popleft()
                for s in lv.gens:
                    y = s[x]
                    if y not in lv.trans:
                        lv.trans[y] = compose(lv.trans[x], s)
                        queue.append(y)
            for x, t in list(lv.trans.items()):
                for s in list(lv.gens):
                    schreier = compose(t, s, inverse(lv.trans[s[x]]))
                    if not is_identity(schreier):
                        add(schreier, m + 1)

    for g in gens:
        add(tuple(g), 0)
    return levels


def group_order(gens: Iterable[Perm], n: int) -> int:
    """Order of the group generated by ``gens`` (Schreier-Sims)."""
    order = 1
    for lv in stabilizer_chain(gens, n):
        order *= len(lv.trans)
    return order


def contains(levels: list[_Level], g: Perm) -> bool:
    for lv in levels:
        t = lv.trans.get(g[lv.base])
        if t is None:
            return False
        g = compose(g, inverse(t))
    return is_identity(g)
