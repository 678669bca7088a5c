"""Dependent random choice: the average-degree predicate, a randomized
witness finder whose outputs are always certified by enumeration, and the
two-stage clique amplification built on it."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Union

from .graphs import Graph, bits, clique_in_mask, common_neighborhood, is_clique

VERIFY_CAP = 10_000_000

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class DRCParams:
    """t: sample size; r: subset size; m: common-neighborhood threshold;
    a: target set size."""

    t: int
    r: int
    m: int
    a: int

    def __post_init__(self):
        if min(self.t, self.r, self.m, self.a) < 1:
            raise ValueError("all parameters must be positive")
        if self.r > self.a:
            raise ValueError("r must not exceed a")


def drc_predicate(n: int, d: Number, params: DRCParams) -> tuple[bool, Number]:
    """Evaluate d^t/n^{t-1} - C(n,r) (m/n)^t and compare with a.

    Exact rational arithmetic whenever d and m are rational; the returned
    slack is the evaluated quantity itself.
    """
    t, r, m, a = params.t, params.r, params.m, params.a
    if n < 1:
        raise ValueError("n must be positive")
    if m > n:
        raise ValueError("m cannot exceed n")
    exact = not (isinstance(d, float) or isinstance(m, float))
    if exact:
        d_val: Number = Fraction(d)
        slack = d_val**t / Fraction(n ** (t - 1)) - math.comb(n, r) * Fraction(m, n) ** t
    else:
        slack = float(d) ** t / n ** (t - 1) - math.comb(n, r) * (m / n) ** t
    return slack >= a, slack


def trial_bound(n: int, a: int, failure_prob: float = math.exp(-3)) -> int:
    """Repetition count turning the expectation guarantee into a failure
    probability: ceil((2n/a) ln(1/delta))."""
    return math.ceil((2 * n / a) * math.log(1 / failure_prob))


def _verify_drc_set(g: Graph, members: list[int], r: int, m: int) -> bool:
    """Independent enumeration of the postcondition: every r-subset of the
    set has at least m common neighbors."""
    if math.comb(len(members), r) > VERIFY_CAP:
        raise RuntimeError("witness too large to certify")
    for combo in combinations(members, r):
        acc = g.full_mask()
        for v in combo:
            acc &= g.rows[v]
        if acc.bit_count() < m:
            return False
    return True


def drc_find(
    g: Graph,
    params: DRCParams,
    trials: Optional[int] = None,
    seed: int = 0,
    with_repetition: bool = True,
) -> Optional[int]:
    """Randomized witness finder for the common-neighborhood property.

    Per trial: sample t vertices uniformly (with repetition by default), take
    the common neighborhood A of the sample, then walk the r-subsets of A in
    lexicographic order deleting the highest-indexed vertex of any subset
    with fewer than m common neighbors.  The first surviving set U with
    |U| >= a whose postcondition passes independent enumeration is returned
    as a bitmask; None means no trial succeeded (which certifies nothing).
    """
    t, r, m, a = params.t, params.r, params.m, params.a
    n = g.n
    if n == 0:
        return None
    if trials is None:
        trials = trial_bound(n, a)
    rng = random.Random(seed)
    for _ in range(trials):
        if with_repetition:
            sample = [rng.randrange(n) for _ in range(t)]
        else:
            sample = rng.sample(range(n), min(t, n))
        acc = g.full_mask()
        for v in sample:
            acc &= g.rows[v]
        members = list(bits(acc))
        if len(members) < a:
            continue
        alive = set(members)
        for combo in combinations(members, r):
            if not all(v in alive for v in combo):
                continue
            cn = g.full_mask()
            for v in combo:
                cn &= g.rows[v]
            if cn.bit_count() < m:
                alive.discard(max(combo))
        if len(alive) < a:
            continue
        survivors = sorted(alive)
        if _verify_drc_set(g, survivors, r, m):
            mask = 0
            for v in survivors:
                mask |= 1 << v
            return mask
    return None


def clique_amplify(
    g: Graph,
    r: int,
    m: int,
    t: int,
    trials: int = 32,
    seed: int = 0,
    second: int = 2,
) -> Optional[int]:
    """Two-stage clique construction: find U via drc_find, search a K_r
    inside U, then search a K_{second} in the common neighborhood of that
    K_r; together they span a verified K_{r+second}.

    The preset second=2 with r=3 mirrors the triangle-then-edge split; the
    alternate split is r=2, second=3.  Sound but incomplete: None does not
    certify absence.
    """
    params = DRCParams(t=t, r=r, m=m, a=max(r, 2))
    rng = random.Random(seed)
    for trial in range(trials):
        u_mask = drc_find(g, params, trials=1, seed=rng.randrange(2**62))
        if u_mask is None:
            continue
        base = clique_in_mask(g, u_mask, r)
        if base is None:
            continue
        w_mask = common_neighborhood(g, base)
        top = clique_in_mask(g, w_mask, second)
        if top is None:
            continue
        result = base | top
        if not is_clique(g, result):
            raise AssertionError("amplified set failed clique verification")
        return result
    return None
