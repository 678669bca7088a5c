"""Hypergraph dependent random choice and the full clique-embedding pipeline.

The pipeline reduces an r-uniform r-partite clique hypergraph one part at a
time by sampling, lands on a bipartite graph, extracts the first two clique
blocks there, and walks back up through the extension sets.  Every returned
vertex set is verified to span the target clique; failures report the stage
that died."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .drc import DRCParams, drc_find
from .graphs import Graph, bits, clique_in_mask, is_clique, mask_of

CENSUS_CAP = 10_000_000


class PartiteHypergraph:
    """r-uniform r-partite hypergraph with equal part sizes.

    Parts hold global vertex ids; edges are transversal r-tuples in part
    order.  Immutable after construction.
    """

    def __init__(self, parts, edges):
        parts = tuple(tuple(p) for p in parts)
        if not parts:
            raise ValueError("need at least one part")
        size = len(parts[0])
        if any(len(p) != size for p in parts):
            raise ValueError("unequal part sizes")
        seen = set()
        for p in parts:
            for v in p:
                if v in seen:
                    raise ValueError("parts are not disjoint")
                seen.add(v)
        part_sets = [set(p) for p in parts]
        edges = frozenset(tuple(e) for e in edges)
        for e in edges:
            if len(e) != len(parts):
                raise ValueError("edge arity does not match part count")
            for i, v in enumerate(e):
                if v not in part_sets[i]:
                    raise ValueError(f"edge vertex {v} outside part {i}")
        self.parts = parts
        self.edges = edges
        self.r = len(parts)
        self.size = size

    def edge_count(self) -> int:
        return len(self.edges)

    def density(self) -> Fraction:
        return Fraction(len(self.edges), self.size**self.r) if self.size else Fraction(0)


def edge_set_weight(edge_set) -> int:
    """Number of vertices in the union of an edge set."""
    return len({v for e in edge_set for v in e})


def transversal_clique_hypergraph(g: Graph, part_masks) -> PartiteHypergraph:
    """H^0: edges are exactly the transversal q-tuples spanning cliques in g."""
    parts = [tuple(bits(m)) for m in part_masks]
    sizes = {len(p) for p in parts}
    if len(sizes) != 1:
        raise ValueError("unequal part sizes")
    edges = []
    q = len(parts)

    def rec(idx: int, chosen: list, common: int):
        if idx == q:
            edges.append(tuple(chosen))
            return
        for v in parts[idx]:
            if common >> v & 1:
                chosen.append(v)
                rec(idx + 1, chosen, common & g.rows[v])
                chosen.pop()

    rec(0, [], g.full_mask())
    return PartiteHypergraph(parts, edges)


def hdrc_step(
    h: PartiteHypergraph,
    s: int,
    seed: int = 0,
    retries: int = 12,
    target: Optional[Fraction] = None,
):
    """One reduction: sample s vertices of the first part with repetition and
    keep the (r-1)-tuples extended by every sampled vertex.

    Retries with fresh samples until the surviving edge count reaches the
    target (default: the lemma's (eps^s / 2) N^{r-1} with eps the measured
    density of h).  Returns (reduced hypergraph, stats dict); stats carry the
    per-attempt counts, and the attempt that met the target.
    """
    if h.r < 2:
        raise ValueError("cannot reduce a 1-uniform hypergraph")
    n_part = h.size
    eps = h.density()
    if target is None:
        target = (eps**s / 2) * n_part ** (h.r - 1)
    by_head: dict[int, set] = {v: set() for v in h.parts[0]}
    for e in h.edges:
        by_head[e[0]].add(e[1:])
    rng = random.Random(seed)
    attempts = []
    best_edges: Optional[frozenset] = None
    best_count = -1
    for attempt in range(retries):
        sample = [h.parts[0][rng.randrange(n_part)] for _ in range(s)] if n_part else []
        surviving = None
        for v in sample:
            tails = by_head[v]
            surviving = set(tails) if surviving is None else surviving & tails
            if not surviving:
                break
        surviving = surviving or set()
        attempts.append({"sample": sample, "edges": len(surviving)})
        if len(surviving) > best_count:
            best_count = len(surviving)
            best_edges = frozenset(surviving)
        if len(surviving) >= target:
            break
    reduced = PartiteHypergraph(h.parts[1:], best_edges or ())
    stats = {
        "input_edges": h.edge_count(),
        "input_density": eps,
        "target": target,
        "attempts": attempts,
        "output_edges": reduced.edge_count(),
        "met_target": best_count >= target,
    }
    return reduced, stats


def _extension_mask(h_prev: PartiteHypergraph, index_of: dict, edge_set) -> int:
    """Bitmask (over first-part positions of h_prev) of vertices extending
    every edge in edge_set into h_prev."""
    prev_by_tail: dict = getattr(h_prev, "_by_tail", None)
    if prev_by_tail is None:
        prev_by_tail = {}
        for e in h_prev.edges:
            prev_by_tail.setdefault(e[1:], 0)
            prev_by_tail[e[1:]] |= 1 << index_of[e[0]]
        h_prev._by_tail = prev_by_tail
    acc = (1 << h_prev.size) - 1
    for e in edge_set:
        acc &= prev_by_tail.get(tuple(e), 0)
        if not acc:
            break
    return acc


def dangerous_count(
    h_prev: PartiteHypergraph,
    h: PartiteHypergraph,
    delta: int,
    beta: Fraction,
    w: int,
) -> int:
    """Exact census of dangerous edge sets: sets S of at most delta edges of
    h with weight w whose common extension set back into h_prev has fewer
    than beta * N vertices of the dropped part."""
    if h.parts != h_prev.parts[1:]:
        raise ValueError("h must live on the tail parts of h_prev")
    edges = sorted(h.edges)
    total = sum(math.comb(len(edges), k) for k in range(1, delta + 1))
    if total > CENSUS_CAP:
        raise RuntimeError(
            f"{total} candidate sets exceed the census cap; shrink the instance"
        )
    index_of = {v: i for i, v in enumerate(h_prev.parts[0])}
    threshold = beta * h_prev.size
    count = 0
    for k in range(1, delta + 1):
        for combo in combinations(edges, k):
            if edge_set_weight(combo) != w:
                continue
            ext = _extension_mask(h_prev, index_of, combo)
            if ext.bit_count() < threshold:
                count += 1
    return count


# ---------------------------------------------------------------------------
# embedding pipeline


@dataclass(frozen=True)
class EmbedParams:
    """Clique factorization (p, q), threshold fraction beta, sample size s,
    and the base-stage common-neighborhood threshold for the pq-1 variant
    (a finite surrogate for the Ramsey-based quantity in the proof)."""

    p: int
    q: int
    beta: Fraction
    s: int
    base_m: Optional[int] = None
    alpha_bound: Optional[int] = None

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValueError("need p, q >= 2")
        if not 0 < self.beta <= 1:
            raise ValueError("beta must be in (0, 1]")
        if self.s < 1:
            raise ValueError("s must be positive")


def schedule_for(variant: str, p: int, q: int):
    """Per-step (r_i, Delta_i, w_i) for i = 1..q-2, by variant."""
    rows = []
    for i in range(1, q - 1):
        r_i = q - i
        if variant == "pq":
            rows.append({"i": i, "r": r_i, "delta": p**r_i, "w": p * r_i})
        elif variant == "pq-1":
            rows.append(
                {"i": i, "r": r_i, "delta": p ** (r_i - 1) * (p - 1), "w": p * r_i - 1}
            )
        else:
            raise ValueError("variant must be 'pq' or 'pq-1'")
    return rows


def eps_schedule_main(eps0: float, n: int, q: int):
    """Preset epsilon recursion in the main-text style:
    eps_i = eps0^(log^(i/q) n) * 2^-((s^i - 1)/(s - 1)) with s = log^(1/q) n."""
    log_n = math.log2(n)
    s = log_n ** (1 / q)
    out = []
    for i in range(q - 1):
        geom = (s**i - 1) / (s - 1) if s != 1 else i
        out.append({"i": i, "eps": eps0 ** (log_n ** (i / q)) * 2.0**-geom, "style": "main"})
    return out


def eps_schedule_appendix(eps0: float, n: int, q: int):
    """Preset epsilon recursion in the appendix style:
    eps_i = eps0^(s^i) / 2^((s^i - 1)/(s - 1)) with s = log^(1/(q-1)) n."""
    log_n = math.log2(n)
    s = log_n ** (1 / (q - 1))
    out = []
    for i in range(q - 1):
        geom = (s**i - 1) / (s - 1) if s != 1 else i
        out.append({"i": i, "eps": eps0 ** (s**i) / 2.0**geom, "style": "appendix"})
    return out


def _bipartite_graph(h: PartiteHypergraph) -> tuple[Graph, list]:
    """The 2-uniform hypergraph as a bipartite Graph with local labels;
    returns (graph, local -> global vertex list)."""
    if h.r != 2:
        raise ValueError("not bipartite")
    labels = list(h.parts[0]) + list(h.parts[1])
    pos = {v: i for i, v in enumerate(labels)}
    rows = [0] * len(labels)
    for a, b in h.edges:
        rows[pos[a]] |= 1 << pos[b]
        rows[pos[b]] |= 1 << pos[a]
    return Graph(len(labels), rows), labels


def embed_kpq(
    g: Graph,
    part_masks,
    params: EmbedParams,
    variant: str = "pq",
    seed: int = 0,
    step_retries: int = 12,
    base_retries: int = 8,
    pipeline_restarts: int = 5,
):
    """Full embedding pipeline; returns (clique_mask_or_None, trace).

    Builds the transversal clique hypergraph on the given parts, reduces it
    q-2 times, finds the two base clique blocks via dependent random choice
    on the bipartite remainder, then climbs back up choosing each block
    inside the extension set of the current complete-multipartite witness.
    Output is verified as a clique of the target size; soundness is
    unconditional, completeness only probabilistic.
    """
    if variant not in ("pq", "pq-1"):
        raise ValueError("variant must be 'pq' or 'pq-1'")
    p, q = params.p, params.q
    target_size = p * q if variant == "pq" else p * q - 1
    schedule = schedule_for(variant, p, q)
    rng = random.Random(seed)
    trace: dict = {"variant": variant, "target_size": target_size, "restarts": []}

    h0 = transversal_clique_hypergraph(g, part_masks)
    n_part = h0.size
    beta_n = max(1, math.ceil(params.beta * n_part))
    trace["h0_edges"] = h0.edge_count()
    trace["h0_density"] = h0.density()
    trace["beta_n"] = beta_n

    for restart in range(pipeline_restarts):
        run: dict = {"stages": []}
        trace["restarts"].append(run)
        result = _embed_once(
            g, h0, params, variant, schedule, rng, run,
            beta_n, step_retries, base_retries,
        )
        if result is not None:
            if not is_clique(g, result) or result.bit_count() != target_size:
                raise AssertionError("embedding output failed clique verification")
            trace["success"] = True
            return result, trace
    trace["success"] = False
    return None, trace


def _embed_once(
    g, h0, params, variant, schedule, rng, run,
    beta_n, step_retries, base_retries,
):
    p, q = params.p, params.q
    hyper = [h0]
    for row in schedule:
        reduced, stats = hdrc_step(
            hyper[-1], params.s, seed=rng.randrange(2**62), retries=step_retries
        )
        run["stages"].append({"stage": f"hdrc_step_{row['i']}", **{
            k: stats[k] for k in ("input_edges", "target", "output_edges", "met_target")
        }})
        if reduced.edge_count() == 0:
            run["failed_at"] = f"hdrc_step_{row['i']}"
            return None
        hyper.append(reduced)

    base = hyper[-1]
    bip, labels = _bipartite_graph(base)
    m_base = beta_n if variant == "pq" else (params.base_m if params.base_m is not None else 1)
    a_base = max(p, 2 * beta_n)
    drc_params = DRCParams(t=params.s, r=p, m=m_base, a=a_base)
    side0 = mask_of(range(base.size))
    side1 = mask_of(range(base.size, 2 * base.size))

    blocks = None
    for _ in range(base_retries):
        u_mask = drc_find(bip, drc_params, trials=4, seed=rng.randrange(2**62))
        if u_mask is None:
            continue
        for primary_first in (True, False):
            primary, other = (side0, side1) if primary_first else (side1, side0)
            u_side = u_mask & primary
            if u_side.bit_count() < p:
                continue
            global_side = mask_of(labels[i] for i in bits(u_side))
            a_first = clique_in_mask(g, global_side, p)
            if a_first is None:
                continue
            local_first = mask_of(i for i, v in enumerate(labels) if a_first >> v & 1)
            w_local = other
            for i in bits(local_first):
                w_local &= bip.rows[i]
            w_global = mask_of(labels[i] for i in bits(w_local))
            second_size = p if variant == "pq" else p - 1
            a_second = clique_in_mask(g, w_global, second_size)
            if a_second is None:
                continue
            blocks = (a_first, a_second, w_local.bit_count(), primary_first)
            break
        if blocks:
            break
    run["stages"].append({
        "stage": "bipartite_base", "found": blocks is not None,
        "w_size": blocks[2] if blocks else 0, "m_base": m_base,
    })
    if blocks is None:
        run["failed_at"] = "bipartite_base"
        return None

    # blocks per part, indexed like parts; base fills the last two, and the
    # found pair is assigned to whichever sides it actually landed on
    a_sets: list[Optional[int]] = [None] * q
    if blocks[3]:
        a_sets[q - 2], a_sets[q - 1] = blocks[0], blocks[1]
    else:
        a_sets[q - 2], a_sets[q - 1] = blocks[1], blocks[0]

    for j in range(q - 3, -1, -1):
        h_prev = hyper[j]
        witness_tuples = _witness_tuples(a_sets[j + 1 :])
        index_of = {v: i for i, v in enumerate(h_prev.parts[0])}
        ext = _extension_mask(h_prev, index_of, witness_tuples)
        b_global = mask_of(h_prev.parts[0][i] for i in bits(ext))
        not_dangerous = ext.bit_count() >= beta_n
        a_next = clique_in_mask(g, b_global, p) if b_global else None
        run["stages"].append({
            "stage": f"extend_part_{j}", "B_size": ext.bit_count(),
            "beta_n": beta_n, "not_dangerous": not_dangerous,
            "found_block": a_next is not None,
        })
        if a_next is None:
            run["failed_at"] = f"extend_part_{j}"
            return None
        a_sets[j] = a_next

    result = 0
    for mask in a_sets:
        result |= mask
    return result


def _witness_tuples(a_masks) -> list[tuple]:
    """All transversal tuples over the chosen blocks (the witness edge set)."""
    lists = [sorted(bits(m)) for m in a_masks]
    tuples = [()]
    for lst in lists:
        tuples = [t + (v,) for t in tuples for v in lst]
    return tuples
