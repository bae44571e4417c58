import random
from math import factorial

import pytest

from powaut.automorphisms import aut_directed, structure
from powaut.group import make_cyclic, make_dihedral, make_quaternion
from powaut.oracle import (
    CapExceeded,
    closure_order,
    digraph_automorphism_chain,
    digraph_automorphisms,
    graph_automorphism_chain,
    graph_automorphisms,
    verify_group,
)
from powaut.perm import ClosureTooLarge, compose, inverse, transposition
from powaut.power_graph import PowerDigraph, PowerGraph, underlying_graph

from conftest import TINY_GROUPS


def edgeless(m):
    return PowerGraph(m, tuple(() for _ in range(m)))


def relabel(D, perm):
    out = [[] for _ in range(D.n)]
    for x, y in D.arcs():
        out[perm[x]].append(perm[y])
    return PowerDigraph.from_out_adjacency(out)


def test_small_examples():
    assert digraph_automorphisms(structure(make_cyclic(3)).digraph).perms == ((0, 1, 2), (0, 2, 1))
    assert digraph_automorphisms(structure(make_quaternion(2)).digraph).count == 48
    assert digraph_automorphisms(structure(make_cyclic(1)).digraph).count == 1
    assert graph_automorphisms(structure(make_cyclic(4)).graph).count == 24
    assert graph_automorphisms(structure(make_cyclic(6)).graph).count == 12
    for m in range(1, 7):
        assert graph_automorphisms(edgeless(m)).count == factorial(m)
        assert graph_automorphism_chain(edgeless(m)).order == factorial(m)


def test_closure_order():
    assert closure_order([]) == 1
    assert closure_order([transposition(5, 1, 3)]) == 2
    assert closure_order(aut_directed(make_quaternion(2)).generators) == 48
    with pytest.raises(ValueError):
        closure_order([(0, 1), (0, 1, 2)])
    with pytest.raises(ClosureTooLarge):
        closure_order([(1, 2, 3, 4, 5, 6, 0), transposition(7, 0, 1)], cap=100)


def test_cap_exceeded():
    with pytest.raises(CapExceeded) as info:
        graph_automorphisms(edgeless(6), cap=100)
    assert info.value.partial == 101


@pytest.mark.parametrize("G", TINY_GROUPS, ids=lambda G: G.name)
def test_oracle_self_consistency(G):
    S = structure(G)
    dorder = digraph_automorphism_chain(S.digraph).order
    if dorder > 50000:
        pytest.skip(f"{dorder} digraph automorphisms")
    dset = digraph_automorphisms(S.digraph).perms
    assert dorder == len(dset)
    gorder = graph_automorphism_chain(S.graph).order
    if gorder <= 50000:
        gset = set(graph_automorphisms(S.graph).perms)
        assert len(gset) == gorder
        assert set(dset) <= gset
    else:
        assert all(S.graph.is_automorphism(p) for p in dset)
    rng = random.Random(G.size)
    dlist = list(dset)
    members = set(dset)
    for _ in range(50):
        a, b = rng.choice(dlist), rng.choice(dlist)
        assert compose(a, b) in members
        assert inverse(a) in members


@pytest.mark.parametrize("G", [make_quaternion(2), make_dihedral(4), make_cyclic(12)],
                         ids=lambda G: G.name)
def test_relabel_invariance(G):
    D = structure(G).digraph
    rng = random.Random(3)
    perm = list(range(D.n))
    rng.shuffle(perm)
    R = relabel(D, perm)
    assert digraph_automorphisms(R).count == digraph_automorphisms(D).count
    assert graph_automorphisms(underlying_graph(R)).count == graph_automorphisms(structure(G).graph).count


def test_verify_examples():
    r = verify_group(make_cyclic(6))
    assert (r.brute_directed, r.brute_undirected) == (4, 12)
    assert r.ok and len(r.checks) == 5
    r = verify_group(make_quaternion(2))
    assert (r.brute_directed, r.brute_undirected) == (48, 96)
    assert r.ok and r.exhaustive_directed and r.exhaustive_undirected
    assert r.to_json()["ok"] is True
    assert "all checks pass" in r.to_text()


def test_verify_generator_mode():
    r = verify_group(make_quaternion(4), cap=1000)
    assert not r.exhaustive_undirected
    assert r.brute_undirected == 552960 and r.ok
    with pytest.raises(CapExceeded):
        verify_group(make_quaternion(4), cap=1000, strict=True)
