import random
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powaut.automorphisms import (
    NotAnAutomorphism,
    aut_directed,
    aut_undirected,
    conjecture_order,
    conjecture_zn,
    decompose_directed,
    decompose_undirected,
    directed_equals_undirected,
    fixes_classes,
    reglue_directed,
    reglue_undirected,
    structure,
)
from powaut.group import (
    direct_product,
    make_cyclic,
    make_dihedral,
    make_elementary_abelian,
    make_quaternion,
)
from powaut.oracle import digraph_automorphisms, graph_automorphisms
from powaut.perm import compose, identity, inverse, transposition
from powaut.pgroup import compute_pg, fixes_generator_classes, lift

from conftest import SMALL_GROUPS, TINY_GROUPS


@pytest.mark.parametrize("G,directed,undirected", [
    (make_cyclic(4), 2, 24),
    (make_cyclic(6), 4, 12),
    (make_quaternion(2), 48, 96),
    (make_quaternion(3), 192, 192),
    (make_quaternion(4), 18432, 552960),
    (make_dihedral(4), 48, 144),
    (make_dihedral(5), 2880, 2880),
    (make_elementary_abelian(2, 2), 6, 6),
    (make_elementary_abelian(3, 2), 384, 384),
], ids=lambda v: getattr(v, "name", str(v)))
def test_orders(G, directed, undirected):
    assert aut_directed(G).order == directed
    assert aut_undirected(G).order == undirected


def test_json_shape():
    data = aut_directed(make_quaternion(2)).to_json()
    assert data["variant"] == "directed"
    assert data["order"] == "48" and data["pg_order"] == "6"
    assert data["block_sizes"] == [1, 1, 2, 2, 2]
    assert data["factored"] == "6 * 1!*1!*2!*2!*2!"


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=lambda G: G.name)
def test_product_law_and_soundness(G):
    S = structure(G)
    for desc, graph in ((aut_directed(G), S.digraph), (aut_undirected(G), S.graph)):
        assert desc.order == desc.pg_order * prod(factorial(b) for b in desc.block_sizes)
        assert sum(desc.block_sizes) == G.size
        for g in desc.generators:
            assert graph.is_automorphism(g)
    for g in aut_directed(G).generators:
        assert S.graph.is_automorphism(g)


@pytest.mark.parametrize("G", TINY_GROUPS, ids=lambda G: G.name)
def test_normalization(G):
    T = structure(G).table
    xis = [transposition(G.size, c.generators[0], c.generators[1])
           for c in T.subgroups if len(c.generators) > 1]
    for s in compute_pg(T)[:24]:
        L = lift(s, T)
        for xi in xis:
            assert fixes_generator_classes(compose(inverse(L), xi, L), T)


def test_directed_identity_and_lift():
    G = make_quaternion(2)
    T = structure(G).table
    e = identity(8)
    assert decompose_directed(e, G) == (e, (0, 1, 2, 3, 4))
    for s in compute_pg(T):
        assert decompose_directed(lift(s, T), G) == (e, s)


def test_directed_q8_exhaustive():
    G = make_quaternion(2)
    perms = digraph_automorphisms(structure(G).digraph).perms
    assert len(perms) == 48
    for p in perms:
        xi, sigma = decompose_directed(p, G)
        assert reglue_directed(xi, sigma, G) == p
        assert fixes_generator_classes(xi, structure(G).table)


def test_undirected_identity():
    G = make_quaternion(3)
    e = identity(12)
    tau, xi, sigma = decompose_undirected(e, G)
    assert tau == xi == e and sigma == tuple(range(structure(G).table.k))


def test_undirected_q8_identity_swap():
    G = make_quaternion(2)
    pi = transposition(8, 0, 2)
    tau, xi, sigma = decompose_undirected(pi, G)
    assert tau == pi
    assert xi == identity(8) and sigma == (0, 1, 2, 3, 4)
    assert reglue_undirected(tau, xi, sigma, G) == pi


def test_undirected_z6_exhaustive():
    G = make_cyclic(6)
    perms = graph_automorphisms(structure(G).graph).perms
    assert len(perms) == 12
    for p in perms:
        tau, xi, sigma = decompose_undirected(p, G)
        assert fixes_classes(tau, G)
        assert reglue_undirected(tau, xi, sigma, G) == p


def test_q16_type_three_correction():
    G = make_quaternion(4)
    S = structure(G)
    rng = random.Random(7)
    desc = aut_undirected(G)
    for _ in range(40):
        p = identity(G.size)
        for _ in range(6):
            p = compose(p, rng.choice(desc.generators))
        tau, xi, sigma = decompose_undirected(p, G)
        assert fixes_classes(tau, G)
        assert S.digraph.is_automorphism(compose(tau, p))
        assert reglue_undirected(tau, xi, sigma, G) == p


@pytest.mark.parametrize("G", [make_quaternion(2), make_dihedral(4), make_elementary_abelian(2, 2)],
                         ids=lambda G: G.name)
def test_composite_consistency(G):
    # (xi1 L1)(xi2 L2) = xi1 (L1 xi2 L1^-1) L1 L2
    T = structure(G).table
    perms = digraph_automorphisms(structure(G).digraph).perms
    rng = random.Random(1)
    for _ in range(30):
        a, b = rng.choice(perms), rng.choice(perms)
        xa, sa = decompose_directed(a, G)
        xb, sb = decompose_directed(b, G)
        xab, sab = decompose_directed(compose(a, b), G)
        La = lift(sa, T)
        assert sab == compose(sa, sb)
        assert xab == compose(xa, La, xb, inverse(La))


def test_rejects_non_automorphisms():
    G = make_cyclic(6)
    with pytest.raises(NotAnAutomorphism):
        decompose_directed(transposition(6, 0, 1), G)
    with pytest.raises(NotAnAutomorphism):
        decompose_undirected(transposition(6, 0, 3), G)
    with pytest.raises(ValueError):
        decompose_directed((0, 1, 2), G)


@pytest.mark.parametrize("G,expected", [
    (make_elementary_abelian(2, 2), True),
    (make_cyclic(6), False),
    (make_cyclic(5), False),
    (make_dihedral(4), False),
    (make_dihedral(5), True),
    (make_dihedral(6), True),
    (make_quaternion(3), True),
    (make_quaternion(2), False),
    (direct_product(make_cyclic(2), make_dihedral(3)), True),
], ids=lambda v: getattr(v, "name", str(v)))
def test_directed_equals_undirected(G, expected):
    assert directed_equals_undirected(G) is expected


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=lambda G: G.name)
def test_directed_equals_undirected_consistent(G):
    # raises if the class criterion and the orders disagree
    directed_equals_undirected(G)


def test_conjecture_examples():
    r9 = conjecture_zn(9)
    assert (r9.conjecture_order, r9.computed_order) == (10080, 362880)
    assert r9.verdict == "fails (prime power)" and r9.consistent
    assert r9.brute_order == 362880
    r6 = conjecture_zn(6)
    assert (r6.conjecture_order, r6.computed_order, r6.verdict) == (12, 12, "holds")
    r2 = conjecture_zn(2)
    assert (r2.conjecture_order, r2.computed_order, r2.verdict) == (2, 2, "holds")
    assert conjecture_zn(30, brute=False).brute_order is None
    with pytest.raises(ValueError):
        conjecture_zn(1)


def test_conjecture_order_formula():
    # phi(12)=4; proper divisors 2,3,4,6 have phi 1,2,2,2
    assert conjecture_order(12) == factorial(5) * 1 * 2 * 2 * 2


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SMALL_GROUPS), st.lists(st.integers(min_value=0), max_size=12))
def test_random_words_reglue(G, word):
    desc = aut_undirected(G)
    p = identity(G.size)
    if desc.generators:
        for i in word:
            p = compose(p, desc.generators[i % len(desc.generators)])
    tau, xi, sigma = decompose_undirected(p, G)
    assert fixes_classes(tau, G)
    assert reglue_undirected(tau, xi, sigma, G) == p
    xi2, sigma2 = decompose_directed(compose(tau, p), G)
    assert (xi2, sigma2) == (xi, sigma)
