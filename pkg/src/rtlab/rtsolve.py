"""Exact and heuristic computation of the central quantity: the maximum
number of edges of a K_s-free graph on n vertices with independence number
strictly below m."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from typing import Optional

from .constructions import turan
from .generate import CapExceeded, LevelGenerator, _has_independent_in
from .graphs import (
    Graph,
    clique_in_mask,
    contains_clique,
    d_independence_number,
    independence_number,
)

EXACT_CAP = 10


@dataclass(frozen=True)
class RTInstance:
    n: int
    s: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.s < 3:
            raise ValueError("s must be at least 3")
        if not 1 <= self.m <= self.n + 1:
            raise ValueError("m must lie in [1, n+1]")


@dataclass(frozen=True)
class RTResult:
    status: str  # "feasible" | "infeasible" | "infeasible-not-found"
    max_edges: Optional[int]
    witness: Optional[Graph]
    method: str
    stats: dict = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


def rt_check_witness(g: Graph, inst: RTInstance) -> bool:
    """True iff g is K_s-free on n vertices with alpha(g) < m (strict)."""
    if g.n != inst.n:
        raise ValueError(f"graph has {g.n} vertices, instance wants {inst.n}")
    if contains_clique(g, inst.s):
        return False
    return independence_number(g) < inst.m


def _edge_count_rows(rows) -> int:
    return sum(r.bit_count() for r in rows) // 2


def _completion_bound(rows, k: int, n: int, s: int, cap_now: int) -> int:
    """Upper bound on edges addable past a k-vertex prefix.

    Each later vertex's back-neighborhood induces no K_{s-1}, so its back
    degree is at most the prefix's (s-1)-independence number, which grows by
    at most one per added vertex.
    """
    extra = 0
    for j in range(k, n):
        extra += min(j, cap_now + (j - k))
    return extra


def rt_exact(inst: RTInstance, budget: int = 30_000_000) -> RTResult:
    """Exact maximum by orderly generation with pruning (default cap n <= 10).

    Branches already containing K_s or violating alpha < m are never
    generated; prefixes whose optimistic completion cannot beat the incumbent
    are dropped before extension.
    """
    n, s, m = inst.n, inst.s, inst.m
    if n > EXACT_CAP:
        raise CapExceeded(
            f"rt_exact is capped at n <= {EXACT_CAP}; use rt_lower_search for n = {n}"
        )
    start = time.monotonic()
    gen = LevelGenerator(s, m - 1, budget)
    best_edges = -1
    best_witness: Optional[Graph] = None

    seed = turan(n, min(s - 1, n))
    if rt_check_witness(seed, inst):
        best_edges = seed.edge_count()
        best_witness = seed

    reps = gen.initial_level()
    stats = {"levels": [], "pruned": 0}
    for k in range(1, n + 1):
        if not reps:
            break
        stats["levels"].append(len(reps))
        if k == n:
            for rows in reps:
                e = _edge_count_rows(rows)
                if e > best_edges:
                    best_edges = e
                    best_witness = Graph(n, rows)
            break
        kept = []
        for rows in reps:
            cap_now = d_independence_number(Graph(k, rows), s - 1) if s > 2 else 0
            if s == 3 and m <= n:
                cap_now = min(cap_now, m - 1)
            bound = _edge_count_rows(rows) + _completion_bound(rows, k, n, s, cap_now)
            if bound <= best_edges:
                stats["pruned"] += 1
                continue
            kept.append(rows)
        reps = gen.extend_level(kept, dedup=(k + 1 < n))
    stats["wall_time"] = time.monotonic() - start
    stats["candidates"] = gen.candidates_seen
    if best_witness is None:
        return RTResult("infeasible", None, None, "exact", stats)
    return RTResult("feasible", best_edges, best_witness, "exact", stats)


# ---------------------------------------------------------------------------
# heuristic search


def _creates_clique(rows, u: int, v: int, s: int) -> bool:
    """Would adding edge uv create a K_s?  Needs a K_{s-2} in N(u) & N(v)."""
    common = rows[u] & rows[v]
    if common.bit_count() < s - 2:
        return False
    g = Graph(len(rows), tuple(rows))
    return clique_in_mask(g, common, s - 2) is not None


def _breaks_alpha(rows, n: int, u: int, v: int, m: int) -> bool:
    """Would removing edge uv push alpha to >= m?  Any new independent m-set
    must contain both endpoints."""
    if m > n:
        return False
    full = (1 << n) - 1
    rows2 = list(rows)
    rows2[u] &= ~(1 << v)
    rows2[v] &= ~(1 << u)
    avoid = rows2[u] | rows2[v] | (1 << u) | (1 << v)
    return _has_independent_in(rows2, full & ~avoid, m - 2)


def _feasible_start(inst: RTInstance, warm: Optional[Graph], rng: random.Random):
    """A graph satisfying both constraints, or None if none was found."""
    n, s, m = inst.n, inst.s, inst.m
    candidates = []
    if warm is not None:
        candidates.append(warm)
    candidates.append(Graph(n, (0,) * n))
    if s - 1 <= n:
        candidates.append(turan(n, s - 1))
    for g in candidates:
        if rt_check_witness(g, inst):
            return g
    # repair loop: add edges inside independent m-sets while avoiding K_s
    base = candidates[-1]
    rows = list(base.rows)
    full = (1 << n) - 1
    for _ in range(4 * n * n):
        g = Graph(n, tuple(rows))
        if contains_clique(g, s):
            return None
        alpha, wit = independence_number(g, with_witness=True)
        if alpha < m:
            return g
        members = [v for v in range(n) if wit >> v & 1]
        rng.shuffle(members)
        fixed = False
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                u, v = members[i], members[j]
                if not _creates_clique(rows, u, v, s):
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                    fixed = True
                    break
            if fixed:
                break
        if not fixed:
            return None
    return None


def rt_lower_search(
    inst: RTInstance,
    budget: int = 200_000,
    seed: int = 0,
    warm_start: Optional[Graph] = None,
    t_start: float = 1.5,
    t_end: float = 0.01,
) -> RTResult:
    """Seeded simulated annealing over edge toggles, restricted to feasible
    states (toggles that would introduce a K_s or raise alpha to >= m are
    rejected outright; see the recorded config defaults).

    Always returns a verified feasible witness, never less than the warm
    start, or the status "infeasible-not-found".
    """
    if warm_start is not None and not rt_check_witness(warm_start, inst):
        raise ValueError("warm start graph violates the instance constraints")
    n, s, m = inst.n, inst.s, inst.m
    rng = random.Random(seed)
    start_time = time.monotonic()
    current = _feasible_start(inst, warm_start, rng)
    stats = {"budget": budget, "seed": seed, "proposals": 0, "accepted": 0}
    if current is None:
        stats["wall_time"] = time.monotonic() - start_time
        return RTResult("infeasible-not-found", None, None, "heuristic-lower-bound", stats)
    rows = list(current.rows)
    cur_edges = current.edge_count()
    best_rows = tuple(rows)
    best_edges = cur_edges
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    cooling = (t_end / t_start) ** (1.0 / max(budget, 1))
    temp = t_start
    for _ in range(budget):
        stats["proposals"] += 1
        temp *= cooling
        u, v = pairs[rng.randrange(len(pairs))]
        has = rows[u] >> v & 1
        if has:
            delta = -1
            if delta < 0 and rng.random() >= math.exp(delta / temp):
                continue
            if _breaks_alpha(rows, n, u, v, m):
                continue
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        else:
            if _creates_clique(rows, u, v, s):
                continue
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        cur_edges += -1 if has else 1
        stats["accepted"] += 1
        if cur_edges > best_edges:
            best_edges = cur_edges
            best_rows = tuple(rows)
    witness = Graph(n, best_rows)
    if not rt_check_witness(witness, inst):
        raise AssertionError("feasible-space invariant violated")
    stats["wall_time"] = time.monotonic() - start_time
    return RTResult("feasible", best_edges, witness, "heuristic-lower-bound", stats)
