import math

import pytest

from rtlab.canon import is_isomorphic
from rtlab.generate import count_classes, exists_graph
from rtlab.graphs import (
    contains_clique,
    cycle_graph,
    independence_number,
    petersen_graph,
)
from rtlab.ramsey import (
    RamseyCache,
    min_alpha_graph,
    q_bounds,
    q_exact,
    ramsey_exact,
)


def test_generation_matches_known_counts():
    # all graphs up to isomorphism: OEIS A000088
    assert count_classes(99, None, 6) == [1, 2, 4, 11, 34, 156]
    # triangle-free graphs up to isomorphism: OEIS A006785
    assert count_classes(3, None, 8) == [1, 2, 3, 7, 14, 38, 107, 410]


def test_exists_graph_certificates():
    # no triangle-free graph on 6 vertices with alpha <= 2 (that is R(3,3)=6)
    assert exists_graph(3, 2, 6) is None
    w = exists_graph(3, 2, 5)
    assert w is not None and is_isomorphic(w, cycle_graph(5))


def test_ramsey_exact_values():
    assert ramsey_exact(2, 9).value == 9
    assert ramsey_exact(5, 2).value == 5
    assert ramsey_exact(3, 3).value == 6
    rec = ramsey_exact(3, 4, n_max=12)
    assert rec.value == 9 and rec.provenance == "exact-search"


def test_ramsey_interval_when_capped():
    rec = ramsey_exact(3, 4, n_max=5)
    assert not rec.exact
    assert rec.lo == 6 and rec.hi == math.comb(5, 2)
    assert rec.provenance == "formula-bound"


def test_q_exact_values():
    assert q_exact(2, 7).value == 7
    expected = [1, 1, 2, 2, 2, 3, 3, 3, 4]
    got = [q_exact(3, n).value for n in range(1, 10)]
    assert got == expected
    rec = q_exact(3, 5)
    assert is_isomorphic(rec.witness, cycle_graph(5))
    assert q_exact(3, 9).value == 4  # consistent with R(3,4) = 9


def test_q_witnesses_verified():
    for n in range(2, 10):
        rec = q_exact(3, n)
        assert not contains_clique(rec.witness, 3)
        assert independence_number(rec.witness) == rec.value


def test_q_monotonicity():
    values = [q_exact(3, n).value for n in range(1, 13)]
    assert all(a <= b for a, b in zip(values, values[1:]))
    for n in (5, 8):
        assert q_exact(4, n).value <= q_exact(3, n).value


def test_inverse_relation_with_ramsey():
    # R(3, Q(3,n)) <= n < R(3, Q(3,n)+1) in the monotone-threshold sense
    r_values = {m: ramsey_exact(3, m, n_max=12).value for m in (2, 3, 4)}
    for n in range(1, 13):
        q = q_exact(3, n).value
        if q in r_values:
            assert r_values[q] <= n
        if q + 1 in r_values:
            assert n < r_values[q + 1]


def test_q_bounds_formulas():
    lo, hi = q_bounds(3, 1024)
    base = math.sqrt(1024 * 10)
    assert lo == pytest.approx(base / math.sqrt(2))
    assert hi == pytest.approx(base * math.sqrt(2))
    lo4, _ = q_bounds(4, 1024)
    assert lo4 == pytest.approx(1024 ** (1 / 3) * 10 ** (2 / 3))
    # exact values respect the asserted t=3 constants on the exhaustive range
    for n in (8, 10, 12):
        lo, hi = q_bounds(3, n)
        assert math.floor(lo) <= q_exact(3, n).value


def test_min_alpha_graph():
    g, alpha, certified = min_alpha_graph(3, 5)
    assert certified and alpha == 2 and is_isomorphic(g, cycle_graph(5))
    g, alpha, certified = min_alpha_graph(3, 10)
    assert certified and alpha == 4
    assert not contains_clique(g, 3)
    assert independence_number(g) == 4  # Petersen or equivalent
    g, alpha, certified = min_alpha_graph(4, 8)
    assert alpha <= 3 and not contains_clique(g, 4)
    assert independence_number(g) == alpha


def test_min_alpha_heuristic_mode():
    g, alpha, certified = min_alpha_graph(3, 20, budget=5000, allow_exact=False)
    assert not certified
    assert not contains_clique(g, 3)
    assert independence_number(g) == alpha


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = RamseyCache(path)
    rec1 = cache.get_r(3, 3)
    assert rec1.value == 6
    q1 = cache.get_q(3, 5)
    assert q1.value == 2
    # a fresh cache instance re-reads and re-verifies the witnesses
    cache2 = RamseyCache(path)
    assert cache2.get_r(3, 3).provenance == "cached-exact"
    assert cache2.get_q(3, 5).value == 2


def test_cache_drops_corrupt_witness(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = RamseyCache(path)
    cache.get_q(3, 5)
    lines = path.read_text().splitlines()
    doc = lines[0].replace('"lo": 2, "hi": 2', '"lo": 1, "hi": 1')
    path.write_text(doc + "\n")
    cache2 = RamseyCache(path)
    # corrupt record rejected on load: recomputed fresh
    assert cache2.get_q(3, 5).value == 2
