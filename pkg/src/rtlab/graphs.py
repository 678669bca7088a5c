"""Dense simple graphs over bitset adjacency rows, with exact solvers.

Vertex sets are plain Python ints used as bitmasks (bit v set <=> vertex v
is a member).  This is the fastest dense representation available in pure
Python and every other module builds on it.  Graphs are immutable after
construction, so all operations here are pure and safe to call concurrently.
"""

from __future__ import annotations

import random
from itertools import combinations

MAX_VERTICES = 4096


class GraphError(ValueError):
    """Invalid graph construction or operation parameters."""


def mask_of(vertices) -> int:
    """Bitmask for an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def vertices_of(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


class Graph:
    """Immutable simple graph on vertices 0..n-1 with one bitmask row per vertex."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows):
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        rows = tuple(rows)
        if len(rows) != n:
            raise GraphError("row count does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & (1 << v):
                raise GraphError(f"self-loop at vertex {v}")
            if row & ~full:
                raise GraphError(f"row {v} has bits outside the vertex range")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] & (1 << v):
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.rows = rows
        self._hash = hash((n, rows))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside vertex range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count()})"

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self):
        for u in range(self.n):
            for v in bits(self.rows[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] & (1 << v))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def complement(self) -> "Graph":
        full = self.full_mask()
        return Graph(self.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(self.rows)))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError("self-loop")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)


# ---------------------------------------------------------------------------
# basic generators


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with a dedicated RNG per call."""
    rng = random.Random(seed)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


# ---------------------------------------------------------------------------
# exact clique / independence solvers


def _greedy_color_order(rows, cand: int, cutoff: int):
    """Order candidate vertices by greedy coloring; returns (vertices, bounds).

    bounds[i] is the color number of vertices[i]; scanning the list from the
    end gives the standard Tomita-style pruning bound.  Vertices with color
    number < cutoff are omitted since they can never improve the incumbent.
    """
    order = []
    bound = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            b = avail & -avail
            v = b.bit_length() - 1
            avail &= ~b
            avail &= ~rows[v]
            rest ^= b
            if color >= cutoff:
                order.append(v)
                bound.append(color)
    return order, bound


def _max_clique(rows, start_mask: int, lower: int = 0, target: int | None = None):
    """Exact maximum clique inside ``start_mask`` by branch and bound.

    Returns (size, witness_mask).  If ``target`` is given, stops as soon as a
    clique of that size is found (witness still exact).  ``lower`` seeds the
    incumbent and prunes branches that cannot beat it.
    """
    best = lower
    best_mask = 0
    found = False

    def expand(rmask: int, rsize: int, cand: int):
        nonlocal best, best_mask, found
        if found:
            return
        cutoff = best - rsize + 1
        order, bound = _greedy_color_order(rows, cand, max(cutoff, 1))
        for i in range(len(order) - 1, -1, -1):
            if rsize + bound[i] <= best:
                return
            v = order[i]
            bit = 1 << v
            new_r = rmask | bit
            new_cand = cand & rows[v]
            if rsize + 1 > best:
                best = rsize + 1
                best_mask = new_r
                if target is not None and best >= target:
                    found = True
                    return
            if new_cand:
                expand(new_r, rsize + 1, new_cand)
                if found:
                    return
            cand &= ~bit

    if start_mask:
        expand(0, 0, start_mask)
    return best, best_mask


def _degree_ordered_rows(g: Graph):
    """Relabel vertices by descending degree (ties by index) for better pruning."""
    perm = sorted(range(g.n), key=lambda v: (-g.rows[v].bit_count(), v))
    pos = [0] * g.n
    for i, v in enumerate(perm):
        pos[v] = i
    rows = [0] * g.n
    for v in range(g.n):
        r = 0
        for u in bits(g.rows[v]):
            r |= 1 << pos[u]
        rows[pos[v]] = r
    return rows, perm


def clique_number(g: Graph, with_witness: bool = False):
    """Exact clique number, optionally with a witness vertex mask."""
    if g.n == 0:
        return (0, 0) if with_witness else 0
    rows, perm = _degree_ordered_rows(g)
    size, mask = _max_clique(rows, (1 << g.n) - 1)
    if not with_witness:
        return size
    witness = mask_of(perm[i] for i in bits(mask))
    return size, witness


def contains_clique(g: Graph, s: int, with_witness: bool = False):
    """True iff the graph has a clique on ``s`` vertices (exact search)."""
    if s < 1:
        raise GraphError("clique size must be positive")
    if s == 1:
        result, mask = g.n >= 1, 1 if g.n else 0
    elif s > g.n:
        result, mask = False, 0
    else:
        rows, perm = _degree_ordered_rows(g)
        size, m = _max_clique(rows, (1 << g.n) - 1, lower=s - 1, target=s)
        result = size >= s
        mask = mask_of(perm[i] for i in bits(m)) if result else 0
    if with_witness:
        return result, (mask if result else None)
    return result


def clique_in_mask(g: Graph, mask: int, s: int):
    """Witness mask of an s-clique inside ``mask``, or None (exact)."""
    if s == 0:
        return 0
    sub = [g.rows[v] & mask for v in range(g.n)]
    size, wmask = _max_clique(sub, mask, lower=s - 1, target=s)
    return wmask if size >= s else None


def independence_number(g: Graph, with_witness: bool = False):
    """alpha(G) via clique duality on the complement."""
    return clique_number(g.complement(), with_witness=with_witness)


def independent_set_in_mask(g: Graph, mask: int, size: int):
    """Witness mask of an independent set of ``size`` inside ``mask``, or None."""
    return clique_in_mask(g.complement(), mask, size)


def d_independence_number(g: Graph, d: int, with_witness: bool = False):
    """Largest vertex set whose induced subgraph has no K_d (exact, d >= 2).

    alpha_2 coincides with the independence number.  Branch and bound over
    vertices: adding v to the current set is allowed only when v's back
    neighborhood inside the set has no K_{d-1}.  Intended for n <= ~60.
    """
    if d < 2:
        raise GraphError("d must be at least 2")
    if d == 2:
        return independence_number(g, with_witness=with_witness)
    if clique_number(g) < d:
        full = g.full_mask()
        return (g.n, full) if with_witness else g.n
    rows = g.rows
    n = g.n
    best = 0
    best_mask = 0

    def extend(chosen: int, size: int, start: int):
        nonlocal best, best_mask
        if size + (n - start) <= best:
            return
        if size > best:
            best = size
            best_mask = chosen
        for v in range(start, n):
            if size + (n - v) <= best:
                return
            back = chosen & rows[v]
            if back.bit_count() < d - 1 or clique_in_mask(g, back, d - 1) is None:
                extend(chosen | (1 << v), size + 1, v + 1)

    extend(0, 0, 0)
    return (best, best_mask) if with_witness else best


def is_clique(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if mask & ~(g.rows[v] | (1 << v)):
            return False
    return True


def is_independent(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if mask & g.rows[v]:
            return False
    return True


def common_neighborhood(g: Graph, query: int) -> int:
    """Intersection of the neighbor masks over the query set (an int bitmask)."""
    if query == 0:
        raise GraphError("empty query set")
    acc = g.full_mask()
    for v in bits(query):
        acc &= g.rows[v]
    return acc


def induced_subgraph(g: Graph, mask: int):
    """Induced subgraph on ``mask``; returns (graph, old_labels) with old_labels[i]
    the original index of new vertex i (labels are relabeled in increasing order)."""
    if mask == 0:
        raise GraphError("empty vertex set")
    old = vertices_of(mask)
    pos = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        r = 0
        for u in bits(g.rows[v] & mask):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph(len(old), rows), old


# ---------------------------------------------------------------------------
# brute-force oracles (subset enumeration; used by tests and cross-checks)


def brute_clique_number(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        if size <= best:
            break
        for combo in combinations(range(g.n), size):
            if is_clique(g, mask_of(combo)):
                best = size
                break
        if best == size:
            break
    return best


def brute_independence_number(g: Graph) -> int:
    return brute_clique_number(g.complement())


def brute_d_independence_number(g: Graph, d: int) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        if size <= best:
            break
        for combo in combinations(range(g.n), size):
            sub, _ = induced_subgraph(g, mask_of(combo))
            if brute_clique_number(sub) < d:
                best = size
                break
        if best == size:
            break
    return best
