"""Density and regularity checking for vertex-set pairs, cluster-graph
assembly from a given partition, and transversal clique counting.

The regularity lemma itself is not implemented; partitions are inputs.
Exact regularity checking enumerates every qualifying subset pair, which is
exponential, so it is capped at 16 vertices per side; beyond that a sampled
mode can refute regularity or report that no violation was found."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .graphs import Graph, GraphError, bits, mask_of, vertices_of

EXACT_SIDE_CAP = 16


@dataclass(frozen=True)
class Partition:
    """Disjoint equal-size classes covering part of V(G), plus the remainder."""

    classes: tuple
    exceptional: int = 0

    def __post_init__(self):
        seen = 0
        for m in self.classes:
            if m & seen:
                raise GraphError("partition classes overlap")
            seen |= m
        if seen & self.exceptional:
            raise GraphError("exceptional set overlaps a class")

    @classmethod
    def from_lists(cls, lists, exceptional=()) -> "Partition":
        return cls(tuple(mask_of(c) for c in lists), mask_of(exceptional))

    def to_json(self) -> str:
        return json.dumps(
            {
                "classes": [list(vertices_of(m)) for m in self.classes],
                "exceptional": list(vertices_of(self.exceptional)),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        doc = json.loads(text)
        return cls.from_lists(doc["classes"], doc.get("exceptional", ()))


def pair_density(g: Graph, a_mask: int, b_mask: int) -> Fraction:
    """e(A, B) / (|A| |B|) as an exact rational; A and B must be disjoint."""
    if a_mask == 0 or b_mask == 0:
        raise GraphError("pair density needs nonempty sides")
    if a_mask & b_mask:
        raise GraphError("sides overlap")
    edges = sum((g.rows[v] & b_mask).bit_count() for v in bits(a_mask))
    return Fraction(edges, a_mask.bit_count() * b_mask.bit_count())


@dataclass(frozen=True)
class RegularityVerdict:
    regular: bool
    mode: str  # "exact" | "sampled"
    witness: Optional[tuple] = None  # (X mask, Y mask) violating pair
    samples: int = 0

    def __bool__(self) -> bool:
        return self.regular


def _subset_masks(members, threshold: int):
    """All subsets of the member list with at least ``threshold`` vertices,
    as (global mask, size) pairs."""
    out = []
    k = len(members)
    for sub in range(1 << k):
        size = sub.bit_count()
        if size >= threshold and size > 0:
            m = 0
            for i in range(k):
                if sub >> i & 1:
                    m |= 1 << members[i]
            out.append((m, size))
    return out


def is_regular_pair(
    g: Graph,
    a_mask: int,
    b_mask: int,
    rho: Fraction,
    mode: str = "exact",
    samples: int = 2000,
    seed: int = 0,
) -> RegularityVerdict:
    """Check |d(X, Y) - d(A, B)| <= rho over all X in A, Y in B with
    |X| >= rho |A| and |Y| >= rho |B|.

    Exact mode enumerates every qualifying pair (sides capped at 16
    vertices) with all comparisons done in integers; sampled mode can only
    refute, or report that no violation was found in the given number of
    samples.
    """
    rho = Fraction(rho)
    if rho <= 0:
        raise GraphError("rho must be positive")
    if a_mask & b_mask:
        raise GraphError("sides overlap")
    a_vs = list(bits(a_mask))
    b_vs = list(bits(b_mask))
    na, nb = len(a_vs), len(b_vs)
    if na == 0 or nb == 0:
        raise GraphError("empty side")
    e_ab = sum((g.rows[v] & b_mask).bit_count() for v in bits(a_mask))
    thr_a = max(1, -((-rho.numerator * na) // rho.denominator))  # ceil(rho * na)
    thr_b = max(1, -((-rho.numerator * nb) // rho.denominator))
    if mode == "exact":
        if na > EXACT_SIDE_CAP or nb > EXACT_SIDE_CAP:
            raise GraphError(f"exact mode is capped at {EXACT_SIDE_CAP} per side")
        return _exact_check(g, a_vs, b_vs, e_ab, rho, thr_a, thr_b)
    if mode == "sampled":
        return _sampled_check(g, a_vs, b_vs, e_ab, rho, thr_a, thr_b, samples, seed)
    raise GraphError("mode must be 'exact' or 'sampled'")


def _exact_check(g, a_vs, b_vs, e_ab, rho, thr_a, thr_b):
    na, nb = len(a_vs), len(b_vs)
    # cross adjacency of A vertices into B, in B-local bit positions
    local_rows = []
    for v in a_vs:
        r = 0
        for j, u in enumerate(b_vs):
            if g.rows[v] >> u & 1:
                r |= 1 << j
        local_rows.append(r)
    pop = np.zeros(1 << nb, dtype=np.int64)
    for y in range(1, 1 << nb):
        pop[y] = pop[y & (y - 1)] + 1
    y_all = np.arange(1 << nb, dtype=np.int64)
    y_sizes = pop
    y_ok = y_sizes >= thr_b
    # deg[v][Y] = |N(v) & Y| via subset DP per A-vertex
    deg = np.zeros((na, 1 << nb), dtype=np.int16)
    for i, r in enumerate(local_rows):
        row = deg[i]
        for y in range(1, 1 << nb):
            low = y & -y
            row[y] = row[y ^ low] + ((r >> (low.bit_length() - 1)) & 1)
    num, den = rho.numerator, rho.denominator
    ab = na * nb
    block = max(1, (1 << 23) // (1 << nb))
    for x_start in range(0, 1 << na, block):
        x_vals = np.arange(x_start, min(x_start + block, 1 << na), dtype=np.int64)
        x_sizes = pop[x_vals] if na == nb else np.array([int(x).bit_count() for x in x_vals], dtype=np.int64)
        x_keep = x_sizes >= thr_a
        if not x_keep.any():
            continue
        x_vals = x_vals[x_keep]
        x_sizes = x_sizes[x_keep]
        x_bits = np.zeros((len(x_vals), na), dtype=np.int16)
        for i in range(na):
            x_bits[:, i] = (x_vals >> i) & 1
        exy = x_bits @ deg  # (#X, 2^nb)
        xy = x_sizes[:, None] * y_sizes[None, :]
        lhs = np.abs(exy.astype(np.int64) * ab - e_ab * xy) * den
        rhs = num * xy * ab
        viol = (lhs > rhs) & y_ok[None, :]
        if viol.any():
            xi, yi = np.argwhere(viol)[0]
            x_mask = 0
            xv = int(x_vals[xi])
            for i in range(na):
                if xv >> i & 1:
                    x_mask |= 1 << a_vs[i]
            y_mask = 0
            yv = int(y_all[yi])
            for j in range(nb):
                if yv >> j & 1:
                    y_mask |= 1 << b_vs[j]
            return RegularityVerdict(False, "exact", (x_mask, y_mask))
    return RegularityVerdict(True, "exact")


def _sampled_check(g, a_vs, b_vs, e_ab, rho, thr_a, thr_b, samples, seed):
    rng = random.Random(seed)
    na, nb = len(a_vs), len(b_vs)
    ab = na * nb
    for _ in range(samples):
        ka = rng.randint(thr_a, na)
        kb = rng.randint(thr_b, nb)
        xs = rng.sample(a_vs, ka)
        ys = rng.sample(b_vs, kb)
        y_mask = mask_of(ys)
        exy = sum((g.rows[v] & y_mask).bit_count() for v in xs)
        if abs(Fraction(exy, ka * kb) - Fraction(e_ab, ab)) > rho:
            return RegularityVerdict(False, "sampled", (mask_of(xs), y_mask), samples)
    return RegularityVerdict(True, "sampled", None, samples)


@dataclass(frozen=True)
class ClusterGraphResult:
    graph: Graph
    pair_info: dict = field(default_factory=dict)  # (i, j) -> {density, mode, regular}


def cluster_graph(
    g: Graph,
    partition: Partition,
    rho: Fraction,
    d_min: Fraction,
    samples: int = 2000,
    seed: int = 0,
) -> ClusterGraphResult:
    """One vertex per class; edge iff the pair is rho-regular (exact when the
    class size is within the cap, else sampled no-violation) and its density
    is at least d_min.  Metadata records which mode decided each pair."""
    sizes = {m.bit_count() for m in partition.classes}
    if len(sizes) > 1:
        raise GraphError("cluster graph needs equal-size classes")
    k = len(partition.classes)
    rows = [0] * k
    info = {}
    for i in range(k):
        for j in range(i + 1, k):
            a, b = partition.classes[i], partition.classes[j]
            mode = "exact" if a.bit_count() <= EXACT_SIDE_CAP else "sampled"
            verdict = is_regular_pair(g, a, b, rho, mode=mode, samples=samples, seed=seed)
            dens = pair_density(g, a, b)
            edge = bool(verdict) and dens >= d_min
            info[(i, j)] = {"density": dens, "mode": verdict.mode, "regular": bool(verdict)}
            if edge:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return ClusterGraphResult(Graph(k, rows), info)


def count_transversal_cliques(g: Graph, part_masks) -> int:
    """Exact count of transversal cliques (one vertex per part)."""
    seen = 0
    for m in part_masks:
        if m & seen:
            raise GraphError("parts overlap")
        seen |= m
    q = len(part_masks)
    count = 0

    def rec(idx: int, common: int):
        nonlocal count
        if idx == q:
            count += 1
            return
        for v in bits(part_masks[idx] & common):
            rec(idx + 1, common & g.rows[v])

    rec(0, g.full_mask())
    return count
