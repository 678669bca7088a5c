"""Canonical forms and isomorphism tests for small graphs.

Canonical labeling by iterated color refinement plus individualization
backtracking.  Twin vertices (equal open or closed neighborhoods) are
contracted to weighted quotient vertices first; the extremal families this
package enumerates are full of blowup structure (Turan graphs, complete
multipartite tops, empty prefixes), and contraction turns their huge
automorphism groups into trivial quotients.  Adequate for n <= ~16.
"""

from __future__ import annotations

from itertools import permutations

from .graphs import Graph, bits


def _twin_classes(rows, n: int, closed: bool):
    """Partition vertices into classes of equal (open or closed) neighborhoods."""
    groups: dict[int, list[int]] = {}
    for v in range(n):
        key = rows[v] | (1 << v) if closed else rows[v]
        groups.setdefault(key, []).append(v)
    return list(groups.values())


def _contract(rows, n: int, labels, closed: bool):
    """One round of twin contraction; returns (rows, n, labels) of the quotient."""
    classes = _twin_classes(rows, n, closed)
    if len(classes) == n:
        return rows, n, labels, False
    kind = b"T" if closed else b"F"
    reps = [cls[0] for cls in classes]
    index = {}
    for i, cls in enumerate(classes):
        for v in cls:
            index[v] = i
    new_rows = []
    new_labels = []
    for i, cls in enumerate(classes):
        mask = 0
        for u in bits(rows[cls[0]]):
            j = index[u]
            if j != i:
                mask |= 1 << j
        new_rows.append(mask)
        if len(cls) == 1:
            new_labels.append(labels[cls[0]])
        else:
            merged = b"".join(sorted(labels[v] for v in cls))
            new_labels.append(kind + bytes([len(cls)]) + merged)
    return new_rows, len(classes), new_labels, True


def _reduce(rows, n: int):
    """Contract false then true twins repeatedly until stable."""
    rows = list(rows)
    labels = [b"v"] * n
    changed = True
    while changed and n > 1:
        changed = False
        for closed in (False, True):
            rows, n, labels, did = _contract(rows, n, labels, closed)
            changed = changed or did
    return rows, n, labels


def _refine(rows, n: int, colors):
    """Iterated 1-WL refinement; returns a stable coloring as a list of ints."""
    colors = list(colors)
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(colors[u] for u in bits(rows[v]))
            sigs.append((colors[v], tuple(nbr)))
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _signature(rows, n: int, labels, perm) -> bytes:
    out = bytearray()
    for i in range(n):
        lab = labels[perm[i]]
        out.append(len(lab))
        out += lab
    acc = 0
    count = 0
    for i in range(n):
        ri = rows[perm[i]]
        for j in range(i + 1, n):
            acc = (acc << 1) | ((ri >> perm[j]) & 1)
            count += 1
            if count == 8:
                out.append(acc)
                acc = count = 0
    if count:
        out.append(acc << (8 - count))
    return bytes(out)


def _search(rows, n: int, labels, colors, best: list):
    colors = _refine(rows, n, colors)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    target = None
    for c in sorted(cells):
        if len(cells[c]) > 1:
            target = cells[c]
            break
    if target is None:
        perm = sorted(range(n), key=lambda v: colors[v])
        sig = _signature(rows, n, labels, perm)
        if best[0] is None or sig < best[0]:
            best[0] = sig
        return
    fresh = n + max(colors) + 1
    for v in target:
        branched = list(colors)
        branched[v] = fresh
        _search(rows, n, labels, branched, best)


def _initial_colors(labels):
    ranking = {lab: i for i, lab in enumerate(sorted(set(labels)))}
    return [ranking[lab] for lab in labels]


def canonical_form_rows(rows, n: int) -> bytes:
    """Canonical signature straight from adjacency rows (hot path)."""
    if n == 0:
        return b""
    qrows, qn, labels = _reduce(rows, n)
    best: list = [None]
    _search(qrows, qn, labels, _initial_colors(labels), best)
    return bytes([n & 0xFF, n >> 8]) + best[0]


def canonical_form(g: Graph) -> bytes:
    """Canonical signature: equal iff graphs are isomorphic."""
    return canonical_form_rows(g.rows, g.n)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    return canonical_form(g1) == canonical_form(g2)


def brute_canonical_form(g: Graph) -> bytes:
    """Reference form minimizing over all vertex permutations (tests only)."""
    n = g.n
    if n == 0:
        return b""
    labels = [b"v"] * n
    best = min(_signature(g.rows, n, labels, perm) for perm in permutations(range(n)))
    return bytes([n & 0xFF, n >> 8]) + best
