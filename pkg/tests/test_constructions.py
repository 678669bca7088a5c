import math
import random

import pytest

from rtlab.canon import is_isomorphic
from rtlab.constructions import (
    ConstructionSpec,
    be_part_sizes,
    bollobas_erdos,
    build_spec,
    compose_turan,
    join,
    lower_be,
    turan,
    turan_class_sizes,
    turan_classes,
)
from rtlab.graph6 import to_graph6
from rtlab.graphs import (
    GraphError,
    clique_number,
    complete_graph,
    contains_clique,
    cycle_graph,
    empty_graph,
    gnp_graph,
    independence_number,
    petersen_graph,
)


def test_turan_examples():
    t = turan(6, 3)
    assert t.edge_count() == 12
    from rtlab.graphs import Graph

    three_edges = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
    assert is_isomorphic(t, three_edges.complement())
    assert clique_number(t) == 3
    assert turan(5, 1) == empty_graph(5)
    t92 = turan(9, 2)
    assert t92.edge_count() == 20
    assert turan_class_sizes(9, 2) == [5, 4]
    with pytest.raises(GraphError):
        turan(3, 4)
    with pytest.raises(GraphError):
        turan(3, 0)


def test_turan_maximizes_parts():
    # e(T(n,r)) is the r-partite maximum: balanced sizes
    for n, r in ((10, 3), (11, 4), (7, 2)):
        sizes = turan_class_sizes(n, r)
        assert sum(sizes) == n and max(sizes) - min(sizes) <= 1
        expected = (n * n - sum(s * s for s in sizes)) // 2
        assert turan(n, r).edge_count() == expected


def test_compose_turan_examples():
    g = compose_turan(10, 2, cycle_graph(5))
    assert g.edge_count() == 35
    assert clique_number(g) == 4
    assert independence_number(g) == 2
    gp = compose_turan(20, 2, petersen_graph())
    assert gp.edge_count() == 130
    assert not contains_clique(gp, 5)
    assert independence_number(gp) == 4
    assert compose_turan(9, 3, None) == turan(9, 3)
    with pytest.raises(GraphError):
        compose_turan(10, 3, cycle_graph(5))  # class sizes 4,3,3 mismatch


def test_compose_turan_invariants_random():
    rng = random.Random(7)
    for _ in range(12):
        r = rng.randint(1, 4)
        n = rng.randint(r, 24)

        def tri_free(size, rng=rng):
            g = empty_graph(size)
            for _ in range(size * 2):
                if size < 2:
                    break
                u, v = rng.sample(range(size), 2)
                if not g.has_edge(u, v) and not (g.rows[u] & g.rows[v]):
                    g = g.add_edge(u, v)
            return g

        g = compose_turan(n, r, tri_free)
        assert not contains_clique(g, 2 * r + 1)
        # alpha equals the max over the installed interiors
        interiors = []
        from rtlab.graphs import induced_subgraph

        for mask in turan_classes(n, r):
            sub, _ = induced_subgraph(g, mask)
            interiors.append(independence_number(sub))
        assert independence_number(g) == max(interiors)


def test_join_examples():
    assert join(complete_graph(2), complete_graph(3)) == complete_graph(5)
    k33 = join(empty_graph(3), empty_graph(3))
    assert is_isomorphic(k33, turan(6, 2))
    c5c5 = join(cycle_graph(5), cycle_graph(5))
    assert independence_number(c5c5) == 2
    assert clique_number(c5c5) == clique_number(cycle_graph(5)) * 2


def test_lower_be_examples():
    g = lower_be(14, 3, cycle_graph(8), lambda k: cycle_graph(k) if k >= 3 else empty_graph(k), h=8)
    assert g.n == 14
    assert not contains_clique(g, 6)
    # degenerate: n == h returns B itself
    b = cycle_graph(8)
    assert lower_be(8, 3, b, None, h=8) == b
    with pytest.raises(GraphError):
        lower_be(14, 3, cycle_graph(5), None, h=8)
    h, k = be_part_sizes(14, 3)
    assert h == 8 and k == 6


def test_lower_be_with_spherical_b():
    b = bollobas_erdos(24, 8, seed=5)
    assert not contains_clique(b, 4)
    g = lower_be(42, 3, b, None, h=24)
    assert not contains_clique(g, 6)


def test_bollobas_erdos_generator():
    g = bollobas_erdos(40, 12, seed=3)
    assert g.n == 40
    assert not contains_clique(g, 4)
    # determinism per seed
    assert to_graph6(g) == to_graph6(bollobas_erdos(40, 12, seed=3))
    assert to_graph6(g) != to_graph6(bollobas_erdos(40, 12, seed=4))
    # vanishing cross threshold: no cross edges at all
    tiny = bollobas_erdos(20, 6, theta_cross=1e-9, seed=1)
    half = tiny.n // 2
    for u in range(half):
        assert tiny.rows[u] >> half == 0
    with pytest.raises(GraphError):
        bollobas_erdos(21, 6)
    with pytest.raises(GraphError):
        bollobas_erdos(20, 6, theta_cross=2.0)


def test_construction_spec_roundtrip():
    spec = ConstructionSpec("compose", {"n": 20, "r": 2, "inner": "petersen"})
    again = ConstructionSpec.from_json(spec.to_json())
    assert again == spec
    g1, g2 = build_spec(spec), build_spec(again)
    assert to_graph6(g1) == to_graph6(g2)
    be = ConstructionSpec("bollobas-erdos", {"h": 30, "dim": 9, "seed": 11})
    assert to_graph6(build_spec(be)) == to_graph6(build_spec(be))
