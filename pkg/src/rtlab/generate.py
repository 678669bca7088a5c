"""Orderly generation of graphs under hereditary constraints.

Graphs are built one vertex at a time.  Both constraints used here
(K_t-freeness and a ceiling on the independence number) are hereditary, so
every target graph is reachable through a chain of constrained prefixes;
keeping one canonical representative per isomorphism class at each level
makes the search exhaustive without duplication.
"""

from __future__ import annotations

from .canon import canonical_form_rows
from .graphs import Graph


class CapExceeded(RuntimeError):
    """An exhaustive search hit its configured resource cap."""


def _has_clique_in(rows, mask: int, size: int) -> bool:
    """True iff ``mask`` contains a clique of ``size`` vertices (early exit)."""
    if size <= 0:
        return True
    if mask.bit_count() < size:
        return False

    def rec(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            if rec(cand & rows[v], need - 1):
                return True
        return False

    return rec(mask, size)


def _has_independent_in(rows, mask: int, size: int) -> bool:
    """True iff ``mask`` contains an independent set of ``size`` vertices."""
    if size <= 0:
        return True
    if mask.bit_count() < size:
        return False

    def rec(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            if rec(cand & ~rows[v], need - 1):
                return True
        return False

    return rec(mask, size)


def admissible_neighborhoods(rows, k: int, t: int, alpha_max):
    """Masks N over vertices 0..k-1 such that appending a vertex with
    neighborhood N keeps the graph K_t-free and alpha <= alpha_max.

    K_t-freeness needs N to induce no K_{t-1}; the alpha bound needs no
    independent set of alpha_max vertices avoiding N (such a set plus the
    new vertex would be independent of size alpha_max + 1).
    """
    full = (1 << k) - 1
    out = []

    def alpha_ok(chosen: int) -> bool:
        if alpha_max is None or alpha_max > k:
            return True
        return not _has_independent_in(rows, full & ~chosen, alpha_max)

    def rec(v: int, chosen: int):
        if v == k:
            if alpha_ok(chosen):
                out.append(chosen)
            return
        rec(v + 1, chosen)
        back = chosen & rows[v]
        if t >= 3 and not _has_clique_in(rows, back, t - 2):
            rec(v + 1, chosen | (1 << v))

    if t == 2:
        if alpha_ok(0):
            out.append(0)
        return out
    rec(0, 0)
    return out


class LevelGenerator:
    """Level-by-level canonical generation of K_t-free graphs with alpha <= alpha_max.

    ``budget`` caps the total number of candidate extensions examined; going
    over raises CapExceeded so callers can degrade to interval answers
    instead of reporting a wrong exact value.
    """

    def __init__(self, t: int, alpha_max, budget: int | None = None):
        if t < 2:
            raise ValueError("forbidden clique size must be at least 2")
        self.t = t
        self.alpha_max = alpha_max
        self.budget = budget
        self.candidates_seen = 0

    def _charge(self, amount: int = 1):
        self.candidates_seen += amount
        if self.budget is not None and self.candidates_seen > self.budget:
            raise CapExceeded(
                f"generation exceeded budget of {self.budget} candidates"
            )

    def initial_level(self):
        if self.alpha_max is not None and self.alpha_max < 1:
            return []
        return [(0,)]

    def extend_level(self, reps, dedup: bool = True, keep=None):
        """All admissible one-vertex extensions of ``reps``.

        With ``dedup`` one canonical representative per isomorphism class is
        kept.  ``keep`` optionally filters candidate rows before dedup (used
        for objective pruning by the callers).
        """
        seen: set[bytes] = set()
        nxt = []
        for rep in reps:
            k = len(rep)
            for mask in admissible_neighborhoods(rep, k, self.t, self.alpha_max):
                self._charge()
                rows = [r | ((mask >> v & 1) << k) for v, r in enumerate(rep)]
                rows.append(mask)
                cand = tuple(rows)
                if keep is not None and not keep(cand):
                    continue
                if dedup:
                    sig = canonical_form_rows(cand, k + 1)
                    if sig in seen:
                        continue
                    seen.add(sig)
                nxt.append(cand)
        return nxt

    def first_extension(self, reps):
        """First admissible one-vertex extension, or None (early-exit probe)."""
        for rep in reps:
            k = len(rep)
            masks = admissible_neighborhoods(rep, k, self.t, self.alpha_max)
            if masks:
                self._charge()
                rows = [r | ((masks[0] >> v & 1) << k) for v, r in enumerate(rep)]
                rows.append(masks[0])
                return tuple(rows)
        return None


def exists_graph(t: int, alpha_max: int, n: int, budget: int | None = None):
    """Search for a K_t-free graph on n vertices with alpha <= alpha_max.

    Returns a witness Graph or None; None is an exhaustive certificate
    (unless CapExceeded is raised first).
    """
    gen = LevelGenerator(t, alpha_max, budget)
    reps = gen.initial_level()
    if n == 0:
        return Graph(0, ())
    if not reps:
        return None
    for k in range(1, n):
        if k == n - 1:
            rows = gen.first_extension(reps)
            return Graph(n, rows) if rows is not None else None
        reps = gen.extend_level(reps)
        if not reps:
            return None
    return Graph(1, (0,))


def count_classes(t: int, alpha_max, n: int, budget: int | None = None):
    """Number of isomorphism classes per level up to n (testing/diagnostics)."""
    gen = LevelGenerator(t, alpha_max, budget)
    reps = gen.initial_level()
    counts = []
    for _ in range(n):
        if not reps:
            counts.append(0)
            continue
        counts.append(len(reps))
        reps = gen.extend_level(reps)
    return counts
