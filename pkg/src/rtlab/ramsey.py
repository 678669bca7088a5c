"""Exact small-scale Ramsey numbers R(s,t), the inverse function Q(t,n),
witness graphs with minimum independence number, and the asymptotic bound
formulas with their constants exposed."""

from __future__ import annotations

import json
import math
import random
import threading
from dataclasses import dataclass, field
from typing import Optional

from .generate import CapExceeded, LevelGenerator, exists_graph
from .graph6 import from_graph6, to_graph6
from .graphs import Graph, clique_number, contains_clique, independence_number

DEFAULT_Q_REACH = {2: None, 3: 12}  # t >= 4 defaults to 10
DEFAULT_BUDGET = 3_000_000


@dataclass(frozen=True)
class RamseyRecord:
    s: int
    t: int
    lo: int
    hi: Optional[int]
    provenance: str
    params: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.hi is not None and self.lo == self.hi

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.exact else None


@dataclass(frozen=True)
class QRecord:
    t: int
    n: int
    lo: int
    hi: int
    witness: Optional[Graph]
    provenance: str
    certified: bool

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.exact else None


def ramsey_exact(s: int, t: int, n_max: int = 10, budget: int = DEFAULT_BUDGET) -> RamseyRecord:
    """R(s, t) by exhaustive search with isomorph rejection, capped at n_max.

    The search walks K_s-free graphs with independence number < t one vertex
    at a time; R(s, t) is one more than the largest order reached.  Interval
    results are returned when the cap or budget is hit, never a wrong exact
    value.
    """
    if s < 2 or t < 2:
        raise ValueError("ramsey_exact needs s, t >= 2")
    if s == 2 or t == 2:
        value = t if s == 2 else s
        return RamseyRecord(s, t, value, value, "formula-bound", {"rule": "R(2,m)=m"})
    gen = LevelGenerator(s, t - 1, budget)
    reps = gen.initial_level()
    params = {"n_max": n_max, "budget": budget}
    try:
        k = 1
        while reps and k < n_max:
            reps = gen.extend_level(reps)
            k += 1
        if reps:
            hi = math.comb(s + t - 2, s - 1)
            return RamseyRecord(s, t, n_max + 1, hi, "formula-bound", params)
        return RamseyRecord(s, t, k, k, "exact-search", params)
    except CapExceeded:
        hi = math.comb(s + t - 2, s - 1)
        return RamseyRecord(s, t, k, hi, "formula-bound", params)


def q_reach(t: int) -> int | None:
    return DEFAULT_Q_REACH.get(t, 10)


def q_exact(t: int, n: int, budget: int = DEFAULT_BUDGET, max_n: int | None = None) -> QRecord:
    """Exact minimum independence number over K_t-free graphs on n vertices.

    Scans alpha ceilings upward; the first ceiling admitting a graph is the
    answer, and the failed searches below it are exhaustive.  Out-of-reach
    calls fall back to the formula interval plus the best heuristic witness.
    """
    if t < 2 or n < 0:
        raise ValueError("q_exact needs t >= 2 and n >= 0")
    if n == 0:
        return QRecord(t, 0, 0, 0, Graph(0, ()), "exact-search", True)
    if t == 2:
        return QRecord(t, n, n, n, Graph(n, (0,) * n), "exact-search", True)
    reach = max_n if max_n is not None else q_reach(t)
    if reach is not None and n > reach:
        return _q_fallback(t, n, budget)
    try:
        for m in range(1, n + 1):
            witness = exists_graph(t, m, n, budget)
            if witness is not None:
                return QRecord(t, n, m, m, witness, "exact-search", True)
    except CapExceeded:
        return _q_fallback(t, n, budget)
    raise AssertionError("the empty graph always qualifies; unreachable")


def _q_fallback(t: int, n: int, budget: int) -> QRecord:
    witness, alpha, _ = min_alpha_graph(t, n, budget=min(budget, 20000), allow_exact=False)
    lo_f, _ = q_bounds(t, n)
    lo = max(1, math.floor(lo_f)) if t == 3 else 1
    return QRecord(t, n, min(lo, alpha), alpha, witness, "formula-bound", False)


def q_bounds(t: int, n: int, c1: float = 1.0, c2: float = 1.0):
    """Evaluated bound pair for Q(t, n); logs are base 2.

    For t = 3 the constants (1/sqrt2, sqrt2) are asserted by the literature;
    for t >= 4 the bounds hold up to unspecified constants, exposed here as
    c1/c2 with default 1 and clearly labelled by callers.
    """
    if t < 3 or n < 2:
        raise ValueError("q_bounds needs t >= 3 and n >= 2")
    log_n = math.log2(n)
    if t == 3:
        base = math.sqrt(n * log_n)
        return base / math.sqrt(2), base * math.sqrt(2)
    lo = c1 * n ** (1 / (t - 1)) * log_n ** ((t - 2) / (t - 1))
    hi = c2 * n ** (2 / (t + 1)) * log_n ** (1 - 2 / ((t - 2) * (t + 1)))
    return lo, hi


def min_alpha_graph(
    t: int,
    n: int,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    allow_exact: bool = True,
):
    """A K_t-free graph on n vertices minimizing alpha within budget.

    Returns (graph, alpha, certified).  When the exact search is in reach the
    witness is optimal and certified; otherwise a local search over K_t-free
    edge additions reports its best find.
    """
    if allow_exact:
        reach = q_reach(t)
        if reach is None or n <= reach:
            try:
                rec = q_exact(t, n, budget)
                if rec.certified:
                    return rec.witness, rec.lo, True
            except CapExceeded:
                pass
    rng = random.Random(seed)
    rows = [0] * n
    best_alpha = n

    def try_add_edges(rows, passes: int):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for _ in range(passes):
            rng.shuffle(pairs)
            added = False
            for u, v in pairs:
                if rows[u] >> v & 1:
                    continue
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                g = Graph(n, tuple(rows))
                if contains_clique(g, t):
                    rows[u] &= ~(1 << v)
                    rows[v] &= ~(1 << u)
                else:
                    added = True
            if not added:
                break
        return rows

    rows = try_add_edges(rows, 3)
    g = Graph(n, tuple(rows))
    best = g
    best_alpha = independence_number(g)
    spent = n * n
    while spent < budget:
        rows = [0] * n
        rows = try_add_edges(rows, 2)
        g = Graph(n, tuple(rows))
        alpha = independence_number(g)
        spent += n * n
        if alpha < best_alpha:
            best, best_alpha = g, alpha
    return best, best_alpha, False


class RamseyCache:
    """JSON-lines cache of R and Q records; witnesses re-verified on load."""

    def __init__(self, path=None):
        self.path = path
        self._lock = threading.Lock()
        self.r_records: dict[tuple[int, int], RamseyRecord] = {}
        self.q_records: dict[tuple[int, int], QRecord] = {}
        if path is not None:
            self._load()

    def _load(self):
        try:
            with open(self.path) as fh:
                lines = fh.readlines()
        except FileNotFoundError:
            return
        for line in lines:
            line = line.strip()
            if not line:
                continue
            try:
                doc = json.loads(line)
                if doc["kind"] == "R":
                    rec = RamseyRecord(
                        doc["s"], doc["t"], doc["lo"], doc["hi"], doc["provenance"],
                        doc.get("params", {}),
                    )
                    self.r_records[(rec.s, rec.t)] = rec
                elif doc["kind"] == "Q":
                    witness = None
                    if doc.get("witness"):
                        witness = from_graph6(doc["witness"])
                        if not self._witness_ok(doc["t"], doc["lo"], doc["hi"], witness):
                            continue
                    rec = QRecord(
                        doc["t"], doc["n"], doc["lo"], doc["hi"], witness,
                        doc["provenance"], doc.get("certified", False),
                    )
                    self.q_records[(rec.t, rec.n)] = rec
            except (KeyError, ValueError):
                continue

    @staticmethod
    def _witness_ok(t: int, lo: int, hi: int, witness: Graph) -> bool:
        if contains_clique(witness, t):
            return False
        return independence_number(witness) == hi

    def _append(self, doc: dict):
        if self.path is None:
            return
        with self._lock, open(self.path, "a") as fh:
            fh.write(json.dumps(doc) + "\n")

    def get_r(self, s: int, t: int, **kwargs) -> RamseyRecord:
        key = (s, t)
        if key not in self.r_records:
            rec = ramsey_exact(s, t, **kwargs)
            self.r_records[key] = rec
            self._append(
                {"kind": "R", "s": s, "t": t, "lo": rec.lo, "hi": rec.hi,
                 "provenance": rec.provenance, "params": rec.params}
            )
        rec = self.r_records[key]
        if rec.provenance == "exact-search":
            rec = RamseyRecord(rec.s, rec.t, rec.lo, rec.hi, "cached-exact", rec.params)
        return rec

    def get_q(self, t: int, n: int, **kwargs) -> QRecord:
        key = (t, n)
        if key not in self.q_records:
            rec = q_exact(t, n, **kwargs)
            self.q_records[key] = rec
            self._append(
                {"kind": "Q", "t": t, "n": n, "lo": rec.lo, "hi": rec.hi,
                 "witness": to_graph6(rec.witness) if rec.witness else None,
                 "provenance": rec.provenance, "certified": rec.certified}
            )
        return self.q_records[key]
