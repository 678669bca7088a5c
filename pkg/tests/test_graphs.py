import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rtlab.graphs import (
    Graph,
    GraphError,
    brute_clique_number,
    brute_d_independence_number,
    brute_independence_number,
    clique_number,
    common_neighborhood,
    complete_graph,
    contains_clique,
    cycle_graph,
    d_independence_number,
    empty_graph,
    gnp_graph,
    independence_number,
    induced_subgraph,
    is_clique,
    mask_of,
    petersen_graph,
    vertices_of,
)

from _oracles import brute_invariants


def test_edge_count_examples():
    assert empty_graph(5).edge_count() == 0
    assert complete_graph(6).edge_count() == 15
    from rtlab.constructions import turan

    assert turan(10, 3).edge_count() == 33


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (1, 0))  # self-loop at vertex 0
    with pytest.raises(GraphError):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (2,))  # out of range


def test_complement():
    assert complete_graph(5).complement() == empty_graph(5)
    c5 = cycle_graph(5)
    comp = c5.complement()
    # the pentagon is self-complementary
    from rtlab.canon import is_isomorphic

    assert is_isomorphic(c5, comp)
    g = gnp_graph(12, 0.4, 99)
    assert g.complement().complement() == g


def test_contains_clique_examples():
    assert not contains_clique(cycle_graph(5), 3)
    from rtlab.constructions import compose_turan, turan

    t10 = turan(10, 3)
    assert contains_clique(t10, 3)
    assert not contains_clique(t10, 4)
    cp = compose_turan(20, 2, petersen_graph())
    assert not contains_clique(cp, 5)


def test_clique_number_examples():
    assert clique_number(complete_graph(7)) == 7
    assert clique_number(cycle_graph(5)) == 2
    assert clique_number(petersen_graph()) == 2


def test_independence_examples():
    assert independence_number(empty_graph(9)) == 9
    assert independence_number(cycle_graph(5)) == 2
    assert independence_number(petersen_graph()) == 4


def test_d_independence_examples():
    c5 = cycle_graph(5)
    assert d_independence_number(c5, 2) == 2
    assert d_independence_number(c5, 3) == 5
    assert d_independence_number(complete_graph(4), 3) == 2


def test_common_neighborhood_examples():
    k4 = complete_graph(4)
    assert common_neighborhood(k4, mask_of([0, 1])) == mask_of([2, 3])
    c5 = cycle_graph(5)
    assert common_neighborhood(c5, mask_of([0, 2])) == mask_of([1])
    from rtlab.constructions import turan

    k55 = turan(10, 2)
    left = vertices_of(k55.rows[0] ^ k55.full_mask() ^ 1)  # same side as 0
    assert common_neighborhood(k55, mask_of(list(left)[:2])).bit_count() == 5
    with pytest.raises(GraphError):
        common_neighborhood(k4, 0)


def test_induced_subgraph_examples():
    k6 = complete_graph(6)
    sub, labels = induced_subgraph(k6, mask_of([1, 3, 5]))
    assert sub == complete_graph(3)
    assert labels == (1, 3, 5)
    c5 = cycle_graph(5)
    sub, _ = induced_subgraph(c5, mask_of([0, 1, 2]))
    assert sub.edge_count() == 2  # path on 3 vertices
    from rtlab.constructions import turan, turan_classes

    t10 = turan(10, 3)
    part = turan_classes(10, 3)[0]
    sub, _ = induced_subgraph(t10, part)
    assert sub.edge_count() == 0


def test_witness_masks_are_cliques():
    g = gnp_graph(14, 0.6, 5)
    size, witness = clique_number(g, with_witness=True)
    assert witness.bit_count() == size
    assert is_clique(g, witness)
    found, w = contains_clique(g, 3, with_witness=True)
    assert found and is_clique(g, w) and w.bit_count() == 3


def test_witness_deterministic():
    g = gnp_graph(13, 0.5, 21)
    a = clique_number(g, with_witness=True)
    b = clique_number(g, with_witness=True)
    assert a == b


@st.composite
def small_graphs(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    edges = draw(
        st.sets(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda e: e[0] < e[1]
            ),
            max_size=n * (n - 1) // 2,
        )
    )
    return Graph.from_edges(n, edges)


@given(small_graphs())
@settings(max_examples=120, deadline=None)
def test_duality_property(g):
    assert independence_number(g) == clique_number(g.complement())


@given(small_graphs(max_n=9))
@settings(max_examples=80, deadline=None)
def test_solvers_match_subset_enumeration(g):
    ref = brute_invariants(g, ds=(3,))
    assert clique_number(g) == ref["omega"]
    assert independence_number(g) == ref["alpha"]
    assert d_independence_number(g, 3) == ref["alpha_3"]


@given(small_graphs(max_n=9))
@settings(max_examples=60, deadline=None)
def test_d_chain_property(g):
    omega = clique_number(g)
    values = [d_independence_number(g, d) for d in range(2, omega + 2)]
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert values[-1] == g.n  # alpha_{omega+1} = n


def test_edge_monotonicity():
    rng = random.Random(3)
    g = gnp_graph(10, 0.3, 17)
    for _ in range(20):
        u, v = rng.sample(range(10), 2)
        if g.has_edge(u, v):
            continue
        g2 = g.add_edge(u, v)
        assert clique_number(g2) >= clique_number(g)
        assert independence_number(g2) <= independence_number(g)
        g = g2


def test_brute_force_helpers_agree():
    for seed in range(5):
        g = gnp_graph(8, 0.5, seed)
        assert brute_clique_number(g) == clique_number(g)
        assert brute_independence_number(g) == independence_number(g)
        assert brute_d_independence_number(g, 3) == d_independence_number(g, 3)
