"""Independent brute-force oracles used by the tests.

The vectorized routines compute, for batches of graphs on up to ~13
vertices, the exact clique number, independence number, and d-independence
numbers by dynamic programming over all vertex subsets; they share no code
with the production solvers.
"""

from __future__ import annotations

import numpy as np

from rtlab.graphs import Graph


def subset_max_clique_table(rows: list[int], n: int) -> list[int]:
    """mc[S] = clique number of the induced subgraph on subset S (pure python)."""
    mc = [0] * (1 << n)
    for s_mask in range(1, 1 << n):
        low = s_mask & -s_mask
        v = low.bit_length() - 1
        rest = s_mask ^ low
        mc[s_mask] = max(mc[rest], 1 + mc[rest & rows[v]])
    return mc


def brute_invariants(g: Graph, ds=()) -> dict:
    """Exact {omega, alpha, alpha_d...} by subset DP."""
    mc = subset_max_clique_table(list(g.rows), g.n)
    comp = g.complement()
    mi = subset_max_clique_table(list(comp.rows), g.n)
    full = (1 << g.n) - 1
    out = {"omega": mc[full], "alpha": mi[full]}
    for d in ds:
        best = 0
        for s_mask in range(1 << g.n):
            if mc[s_mask] < d:
                size = s_mask.bit_count()
                if size > best:
                    best = size
        out[f"alpha_{d}"] = best
    return out


def batch_invariants(graphs: list[Graph], d: int) -> np.ndarray:
    """Vectorized (omega, alpha, alpha_d) for a batch of same-order graphs."""
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise ValueError("batch must share the vertex count")
    count = len(graphs)
    size = 1 << n
    rows = np.array([g.rows for g in graphs], dtype=np.int64)
    crows = np.array([g.complement().rows for g in graphs], dtype=np.int64)
    pop = np.zeros(size, dtype=np.int16)
    for s_mask in range(1, size):
        pop[s_mask] = pop[s_mask & (s_mask - 1)] + 1
    idx = np.arange(count)

    def table(adj):
        mc = np.zeros((count, size), dtype=np.int8)
        for s_mask in range(1, size):
            low = s_mask & -s_mask
            v = low.bit_length() - 1
            rest = s_mask ^ low
            take = 1 + mc[idx, rest & adj[:, v]]
            mc[:, s_mask] = np.maximum(mc[:, rest], take)
        return mc

    mc = table(rows)
    mi = table(crows)
    omega = mc[:, size - 1].astype(np.int32)
    alpha = mi[:, size - 1].astype(np.int32)
    ok = mc < d
    sizes = np.where(ok, pop[None, :], -1)
    alpha_d = sizes.max(axis=1).astype(np.int32)
    return np.stack([omega, alpha, alpha_d], axis=1)
