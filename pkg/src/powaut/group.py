"""Finite groups as explicit multiplication tables.

Elements are always the indices ``0..n-1`` and the identity is index 0.
"""
from __future__ import annotations

from collections import Counter
from pathlib import Path
from typing import Sequence

import numpy as np

from .numtheory import is_prime
from .perm import Perm, check_perm, identity

DEFAULT_CLOSURE_CAP = 5000
EXHAUSTIVE_ASSOC_LIMIT = 64
SAMPLED_TRIPLES = 10_000


class GroupError(ValueError):
    """Invalid group data or constructor arguments."""


class GroupTooLarge(GroupError):
    def __init__(self, cap: int):
        super().__init__(f"group too large: closure exceeded {cap} elements")
        self.cap = cap


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``mul[a, b]`` is the index of the product ``ab``.  The table must have
    the identity at index 0; use :func:`from_table` for arbitrary tables.
    """

    def __init__(self, mul, name: str = "G", labels: Sequence[str] | None = None,
                 validate: bool = True):
        table = np.array(mul, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupError("multiplication table must be a non-empty square matrix")
        table.setflags(write=False)
        self.mul = table
        self.size = int(table.shape[0])
        self.identity = 0
        self.name = name
        if labels is not None and len(labels) != self.size:
            raise GroupError("one label per element required")
        self.labels = tuple(labels) if labels is not None else None
        self._rows: list[list[int]] = table.tolist()
        if validate:
            validate_group(self)
        self.inv: tuple[int, ...] = tuple(row.index(0) for row in self._rows)
        self.elem_order: tuple[int, ...] = tuple(len(self.powers(x)) for x in range(self.size))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.size})"

    def __len__(self) -> int:
        return self.size

    def op(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        out = 0
        row = self._rows
        base = x
        while k:
            if k & 1:
                out = row[out][base]
            base = row[base][base]
            k >>= 1
        return out

    def powers(self, x: int) -> list[int]:
        """``[x^0, x^1, ..., x^(|x|-1)]``."""
        row = self._rows
        out = [0]
        cur = x
        while cur != 0:
            out.append(cur)
            cur = row[cur][x]
            if len(out) > self.size:
                raise GroupError(f"element {x} never returns to the identity")
        return out

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def order_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.elem_order).items()))


def validate_group(G: FiniteGroup, seed: int = 0) -> None:
    """Check the Latin square, identity, inverse and associativity laws."""
    M = G.mul
    n = G.size
    full = np.arange(n)
    if M.min() < 0 or M.max() >= n:
        raise GroupError("table entries out of range")
    if not (np.sort(M, axis=1) == full).all():
        raise GroupError("a row is not a permutation (not a Latin square)")
    if not (np.sort(M, axis=0) == full[:, None]).all():
        raise GroupError("a column is not a permutation (not a Latin square)")
    if not ((M[0] == full).all() and (M[:, 0] == full).all()):
        raise GroupError("index 0 is not a two-sided identity")
    if n <= EXHAUSTIVE_ASSOC_LIMIT:
        lhs = M[M]  # lhs[a, b, c] = (ab)c
        rhs = M[full[:, None, None], M[None, :, :]]  # a(bc)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            a, b, c = bad[0]
            raise GroupError(f"associativity fails at ({a}, {b}, {c})")
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, SAMPLED_TRIPLES))
        bad = np.nonzero(M[M[a, b], c] != M[a, M[b, c]])[0]
        if len(bad):
            i = bad[0]
            raise GroupError(f"associativity fails at ({a[i]}, {b[i]}, {c[i]})")


def from_table(table, name: str = "G", labels: Sequence[str] | None = None) -> FiniteGroup:
    """Build a group from any Cayley table, moving the identity to index 0."""
    M = np.array(table, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise GroupError("multiplication table must be a non-empty square matrix")
    n = M.shape[0]
    if M.min() < 0 or M.max() >= n:
        raise GroupError("table entries out of range")
    full = np.arange(n)
    ids = [e for e in range(n) if (M[e] == full).all() and (M[:, e] == full).all()]
    if not ids:
        raise GroupError("table has no identity element")
    e = ids[0]
    # swap e <-> 0
    relabel = full.copy()
    relabel[0], relabel[e] = e, 0  # new index -> old index, and it is an involution
    M = relabel[M[np.ix_(relabel, relabel)]]
    if labels is not None:
        labels = [labels[int(relabel[i])] for i in range(n)]
    return FiniteGroup(M, name=name, labels=labels)


def read_table(path: str | Path, name: str | None = None) -> FiniteGroup:
    """Read ``n`` on the first line followed by an n x n matrix of 0-based indices."""
    tokens = Path(path).read_text().split()
    if not tokens:
        raise GroupError(f"{path}: empty table file")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise GroupError(f"{path}: non-integer entry ({exc})") from None
    n = values[0]
    if n < 1 or len(values) != 1 + n * n:
        raise GroupError(f"{path}: expected {n * n} entries after n={n}, got {len(values) - 1}")
    return from_table(np.array(values[1:]).reshape(n, n), name=name or f"table:{path}")


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, name=f"Z_{n}",
                       labels=[str(k) for k in range(n)])


def _word(gen: str, i: int) -> str:
    if i == 0:
        return ""
    return gen if i == 1 else f"{gen}^{i}"


def make_dihedral(n: int) -> FiniteGroup:
    """D_2n with a^i at index i and a^i b at index n + i."""
    if n < 3:
        raise GroupError("dihedral group D_2n needs n >= 3")
    size = 2 * n
    M = np.empty((size, size), dtype=np.int64)
    for s in (0, 1):
        for i in range(n):
            for t in (0, 1):
                for j in range(n):
                    # (a^i b^s)(a^j b^t) = a^(i + (-1)^s j) b^(s+t)
                    k = (i + (j if s == 0 else -j)) % n
                    M[s * n + i, t * n + j] = ((s + t) % 2) * n + k
    labels = []
    for s in (0, 1):
        for i in range(n):
            w = " ".join(x for x in (_word("a", i), "b" if s else "") if x)
            labels.append(w or "e")
    return FiniteGroup(M, name=f"D_{size}", labels=labels)


def make_quaternion(n: int) -> FiniteGroup:
    """Q_4n = <x, y | x^2n = e, x^n = y^2, y^-1 x y = x^-1>; x^i y at index 2n + i."""
    if n < 2:
        raise GroupError("generalized quaternion group Q_4n needs n >= 2")
    m = 2 * n
    size = 2 * m
    M = np.empty((size, size), dtype=np.int64)
    for s in (0, 1):
        for i in range(m):
            for t in (0, 1):
                for j in range(m):
                    # y x^j = x^-j y and y^2 = x^n
                    k = i + (j if s == 0 else -j)
                    if s and t:
                        k += n
                    M[s * m + i, t * m + j] = ((s + t) % 2) * m + k % m
    labels = []
    for s in (0, 1):
        for i in range(m):
            w = " ".join(x for x in (_word("x", i), "y" if s else "") if x)
            labels.append(w or "e")
    return FiniteGroup(M, name=f"Q_{size}", labels=labels)


def make_elementary_abelian(p: int, k: int) -> FiniteGroup:
    """Z_p^k; index = sum of coordinates times powers of p, coordinate 0 lowest."""
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    if k < 1:
        raise GroupError("elementary abelian group needs k >= 1")
    size = p**k
    digits = np.array([[(v // p**d) % p for d in range(k)] for v in range(size)])
    weights = p ** np.arange(k)
    summed = (digits[:, None, :] + digits[None, :, :]) % p
    labels = ["(" + ",".join(map(str, row)) + ")" for row in digits]
    return FiniteGroup(summed @ weights, name=f"Z_{p}^{k}", labels=labels)


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """A x B with (a, b) at index a * |B| + b."""
    nb = B.size
    ia = np.repeat(np.arange(A.size), nb)
    ib = np.tile(np.arange(nb), A.size)
    M = A.mul[np.ix_(ia, ia)] * nb + B.mul[np.ix_(ib, ib)]
    labels = None
    if A.labels is not None or B.labels is not None:
        labels = [f"({A.label(a)},{B.label(b)})" for a, b in zip(ia, ib)]
    return FiniteGroup(M, name=f"{A.name} x {B.name}", labels=labels)


def from_permutation_generators(degree: int, gens: Sequence[Sequence[int]],
                                cap: int = DEFAULT_CLOSURE_CAP,
                                name: str | None = None) -> FiniteGroup:
    """Closure of ``gens`` under composition, elements sorted lexicographically.

    The product ``gh`` applies ``g`` first (right action).  The identity is
    the lexicographically smallest permutation so it lands at index 0.
    """
    if degree < 1:
        raise GroupError("degree must be positive")
    gens = [check_perm(g, degree) for g in gens]
    e = identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[v] for v in p)
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        raise GroupTooLarge(cap)
                    nxt.append(q)
        frontier = nxt
    elems: list[Perm] = sorted(seen)
    index = {p: i for i, p in enumerate(elems)}
    M = [[index[tuple(b[v] for v in a)] for b in elems] for a in elems]
    return FiniteGroup(M, name=name or f"perm:{degree}", validate=True)


def cyclic_subgroup_of(G: FiniteGroup, x: int) -> tuple[int, ...]:
    return tuple(sorted(G.powers(x)))


def is_cyclic(G: FiniteGroup) -> bool:
    return max(G.elem_order) == G.size
