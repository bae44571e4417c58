"""Automorphism groups of power digraphs and power graphs of finite groups."""
from .automorphisms import (
    AutDescription,
    aut_directed,
    aut_undirected,
    conjecture_zn,
    decompose_directed,
    decompose_undirected,
    directed_equals_undirected,
    structure,
)
from .cyclic import enumerate_cyclic_subgroups, generator_class, invariant_vector
from .equivalence import ClassKind, EquivalenceClass, classify_class, equivalence_classes
from .group import (
    FiniteGroup,
    cyclic_subgroup_of,
    direct_product,
    from_permutation_generators,
    from_table,
    make_cyclic,
    make_dihedral,
    make_elementary_abelian,
    make_quaternion,
)
from .groupspec import parse_group
from .oracle import digraph_automorphisms, graph_automorphisms, verify_group
from .pgroup import compute_pg, lift, pg_order
from .power_graph import closed_neighborhood, power_digraph, power_graph, underlying_graph

__version__ = "0.1.0"
