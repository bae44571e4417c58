from collections import Counter
from math import gcd, lcm

import numpy as np
import pytest

from powaut.group import (
    GroupError,
    GroupTooLarge,
    cyclic_subgroup_of,
    direct_product,
    from_permutation_generators,
    from_table,
    make_cyclic,
    make_dihedral,
    make_elementary_abelian,
    make_quaternion,
    read_table,
    validate_group,
)

from conftest import SMALL_GROUPS


def order_multiset(G):
    return sorted(G.elem_order)


def brute_order(G, x):
    m, cur = 1, x
    while cur != 0:
        cur = G.op(cur, x)
        m += 1
    return m


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=lambda G: G.name)
def test_group_laws(G):
    validate_group(G)
    n = G.size
    for x in range(n):
        assert G.op(x, G.inv[x]) == 0 == G.op(G.inv[x], x)
        assert G.elem_order[x] == brute_order(G, x)
        assert n % G.elem_order[x] == 0


def test_cyclic():
    assert make_cyclic(1).size == 1
    assert make_cyclic(6).elem_order == (1, 6, 3, 2, 3, 6)
    assert make_cyclic(4).elem_order == (1, 4, 2, 4)
    for n in range(1, 30):
        G = make_cyclic(n)
        assert G.elem_order == tuple(n // gcd(n, k) for k in range(n))
    with pytest.raises(GroupError):
        make_cyclic(0)


def test_dihedral():
    D6 = make_dihedral(3)
    assert Counter(D6.elem_order) == {1: 1, 2: 3, 3: 2}
    D8 = make_dihedral(4)
    assert Counter(D8.elem_order)[2] == 5
    for n in range(3, 10):
        D = make_dihedral(n)
        b = n
        a = 1
        assert D.elem_order[a] == n and D.elem_order[b] == 2
        assert D.op(D.op(b, a), b) == D.inv[a]
        for i in range(n):
            assert D.inv[i] == (n - i) % n
            assert D.inv[n + i] == n + i
            assert D.elem_order[n + i] == 2
            assert D.op(i, b) == n + i
    with pytest.raises(GroupError):
        make_dihedral(2)


def test_quaternion():
    Q8 = make_quaternion(2)
    assert Counter(Q8.elem_order) == {1: 1, 2: 1, 4: 6}
    Q12 = make_quaternion(3)
    assert Q12.elem_order[3] == 2 and Q12.elem_order[1] == 6
    assert Counter(Q12.elem_order)[2] == 1
    assert all(Q12.elem_order[6 + i] == 4 for i in range(6))
    for n in range(2, 8):
        Q = make_quaternion(n)
        m = 2 * n
        involutions = [x for x in range(Q.size) if Q.elem_order[x] == 2]
        assert involutions == [n]
        x, y = 1, m
        assert Q.power(y, 2) == n
        assert Q.op(Q.op(Q.inv[y], x), y) == Q.inv[x]
        for i in range(m):
            assert Q.power(m + i, 2) == n
            # (x^i y)^-1 = x^(i+n) y follows from y^2 = x^n and y x y^-1 = x^-1
            assert Q.inv[m + i] == m + (i + n) % m
    with pytest.raises(GroupError):
        make_quaternion(1)


def test_elementary_abelian():
    V = make_elementary_abelian(2, 2)
    assert Counter(V.elem_order) == {1: 1, 2: 3}
    E = make_elementary_abelian(3, 2)
    assert Counter(E.elem_order) == {1: 1, 3: 8}
    assert np.array_equal(make_elementary_abelian(2, 1).mul, make_cyclic(2).mul)
    with pytest.raises(GroupError):
        make_elementary_abelian(4, 2)


@pytest.mark.parametrize("a,b", [(2, 2), (2, 3), (2, 4), (3, 4), (4, 6)])
def test_direct_product_orders(a, b):
    A, B = make_cyclic(a), make_cyclic(b)
    P = direct_product(A, B)
    assert P.size == a * b
    expected = sorted(lcm(x, y) for x in A.elem_order for y in B.elem_order)
    assert order_multiset(P) == expected


def test_direct_product_examples():
    Z = make_cyclic
    assert order_multiset(direct_product(Z(2), Z(2))) == order_multiset(make_elementary_abelian(2, 2))
    assert order_multiset(direct_product(Z(2), Z(3))) == order_multiset(Z(6))
    assert order_multiset(direct_product(Z(2), Z(4))) == [1, 2, 2, 2, 4, 4, 4, 4]


def test_permutation_generators():
    C3 = from_permutation_generators(3, [(1, 2, 0)])
    assert C3.size == 3 and sorted(C3.elem_order) == [1, 3, 3]
    S3 = from_permutation_generators(3, [(1, 0, 2), (1, 2, 0)])
    assert order_multiset(S3) == order_multiset(make_dihedral(3))
    assert from_permutation_generators(4, []).size == 1
    with pytest.raises(GroupTooLarge):
        from_permutation_generators(6, [(1, 2, 3, 4, 5, 0), (1, 0, 2, 3, 4, 5)], cap=100)


def test_cyclic_subgroup_of():
    assert cyclic_subgroup_of(make_cyclic(6), 2) == (0, 2, 4)
    Q8 = make_quaternion(2)
    assert cyclic_subgroup_of(Q8, 0) == (0,)
    for x in range(Q8.size):
        if Q8.elem_order[x] == 4:
            sub = cyclic_subgroup_of(Q8, x)
            assert len(sub) == 4 and 0 in sub and 2 in sub and x in sub


def test_from_table_relabels_identity(tmp_path):
    # Z_3 with identity stored at index 2
    table = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    G = from_table(table)
    assert sorted(G.elem_order) == [1, 3, 3]
    path = tmp_path / "z3.txt"
    path.write_text("3\n" + "\n".join(" ".join(map(str, r)) for r in table) + "\n")
    assert sorted(read_table(path).elem_order) == [1, 3, 3]


def test_bad_tables_rejected():
    with pytest.raises(GroupError, match="Latin"):
        from_table([[0, 1], [1, 1]])
    # x*y = -x-y mod 3 is a Latin square with no identity
    with pytest.raises(GroupError, match="identity"):
        from_table([[0, 2, 1], [2, 1, 0], [1, 0, 2]])
    # a loop of order 5 with every element self-inverse cannot be Z_5
    loop = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError, match="associativity"):
        from_table(loop)
