import pytest

from rtlab.canon import is_isomorphic
from rtlab.constructions import compose_turan, turan
from rtlab.generate import CapExceeded
from rtlab.graphs import cycle_graph, petersen_graph
from rtlab.rtsolve import RTInstance, rt_check_witness, rt_exact, rt_lower_search


def test_instance_validation():
    with pytest.raises(ValueError):
        RTInstance(5, 2, 3)
    with pytest.raises(ValueError):
        RTInstance(5, 3, 7)
    with pytest.raises(ValueError):
        RTInstance(0, 3, 1)


def test_rt_exact_examples():
    res = rt_exact(RTInstance(5, 3, 3))
    assert res.feasible and res.max_edges == 5
    assert is_isomorphic(res.witness, cycle_graph(5))

    res = rt_exact(RTInstance(6, 3, 7))
    assert res.max_edges == 9  # Mantel: K_{3,3}

    res = rt_exact(RTInstance(6, 3, 3))
    assert res.status == "infeasible"
    assert res.max_edges is None and res.witness is None


def test_rt_exact_cap():
    with pytest.raises(CapExceeded):
        rt_exact(RTInstance(11, 3, 12))


def test_rt_exact_monotone_in_m():
    values = []
    for m in range(2, 7):
        res = rt_exact(RTInstance(6, 3, m))
        values.append(res.max_edges if res.feasible else -1)
    assert values == sorted(values)


def test_rt_exact_monotone_in_s():
    for n in (6, 7):
        res3 = rt_exact(RTInstance(n, 3, 4))
        res4 = rt_exact(RTInstance(n, 4, 4))
        if res3.feasible and res4.feasible:
            assert res3.max_edges <= res4.max_edges


def test_turan_ceiling():
    for n in range(1, 10):
        res = rt_exact(RTInstance(n, 3, n + 1))
        assert res.max_edges == n * n // 4
    for s in (3, 4, 5):
        for n in range(s - 1, 10):
            res = rt_exact(RTInstance(n, s, n + 1))
            assert res.max_edges == turan(n, s - 1).edge_count()


def test_check_witness_examples():
    assert rt_check_witness(cycle_graph(5), RTInstance(5, 3, 3))
    assert not rt_check_witness(turan(6, 2), RTInstance(6, 3, 3))  # alpha = 3
    g = compose_turan(10, 2, cycle_graph(5))
    assert rt_check_witness(g, RTInstance(10, 5, 3))
    with pytest.raises(ValueError):
        rt_check_witness(cycle_graph(5), RTInstance(6, 3, 3))


def test_search_floor_from_warm_start():
    warm = compose_turan(20, 2, petersen_graph())
    res = rt_lower_search(RTInstance(20, 5, 5), budget=3000, seed=1, warm_start=warm)
    assert res.feasible and res.max_edges >= 130
    assert rt_check_witness(res.witness, RTInstance(20, 5, 5))


def test_search_matches_exact_small():
    exact = rt_exact(RTInstance(10, 3, 5)).max_edges
    res = rt_lower_search(RTInstance(10, 3, 5), budget=60_000, seed=3)
    assert res.feasible and res.max_edges == exact


def test_search_reports_infeasible():
    res = rt_lower_search(RTInstance(6, 3, 3), budget=2000, seed=0)
    assert res.status == "infeasible-not-found"


def test_search_deterministic_per_seed():
    a = rt_lower_search(RTInstance(12, 4, 5), budget=5000, seed=42)
    b = rt_lower_search(RTInstance(12, 4, 5), budget=5000, seed=42)
    assert a.max_edges == b.max_edges
    assert a.witness == b.witness


def test_search_rejects_bad_warm_start():
    with pytest.raises(ValueError):
        rt_lower_search(RTInstance(6, 3, 3), warm_start=turan(6, 2))
