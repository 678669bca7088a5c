"""Generators for the lower-bound constructions: Turan graphs, Turan graphs
with Ramsey-graph interiors, the sphere-based two-part generator, and the
join composition of the two."""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .graphs import MAX_VERTICES, Graph, GraphError

InnerSource = Union[Graph, Callable[[int], Graph]]


def turan(n: int, r: int) -> Graph:
    """Complete r-partite Turan graph T(n, r), class sizes as equal as possible.

    Remainder vertices go to the first n mod r classes, so classes come out
    in weakly decreasing size; class c holds a contiguous vertex block.
    """
    if r < 1 or r > n:
        raise GraphError(f"turan requires 1 <= r <= n, got n={n}, r={r}")
    sizes = turan_class_sizes(n, r)
    rows = [0] * n
    start = 0
    full = (1 << n) - 1
    for size in sizes:
        block = ((1 << size) - 1) << start
        for v in range(start, start + size):
            rows[v] = full & ~block
        start += size
    return Graph(n, rows)


def turan_class_sizes(n: int, r: int) -> list[int]:
    k, rem = divmod(n, r)
    return [k + 1] * rem + [k] * (r - rem)


def turan_classes(n: int, r: int) -> list[int]:
    """Class bitmasks of turan(n, r), in construction order."""
    masks = []
    start = 0
    for size in turan_class_sizes(n, r):
        masks.append(((1 << size) - 1) << start)
        start += size
    return masks


def _inner_graph(inner: Optional[InnerSource], size: int) -> Graph:
    if inner is None:
        return Graph(size, (0,) * size)
    if isinstance(inner, Graph):
        if inner.n != size:
            raise GraphError(
                f"inner graph has {inner.n} vertices but the class needs {size}"
            )
        return inner
    g = inner(size)
    if g.n != size:
        raise GraphError(f"inner generator returned {g.n} vertices for class size {size}")
    return g


def compose_turan(n: int, r: int, inner: Optional[InnerSource]) -> Graph:
    """T(n, r) with a copy of ``inner`` installed inside each class.

    ``inner`` may be a fixed graph (all class sizes must then agree with its
    order) or a callable size -> graph.  With K_{t+1}-free interiors the
    result is K_{rt+1}-free, and its independence number is the maximum over
    the installed copies, since distinct classes are completely joined.
    """
    base = turan(n, r)
    rows = list(base.rows)
    start = 0
    for size in turan_class_sizes(n, r):
        g_in = _inner_graph(inner, size)
        for v in range(size):
            rows[start + v] |= g_in.rows[v] << start
        start += size
    return Graph(n, rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphError("join exceeds the vertex cap")
    mask1 = (1 << g1.n) - 1
    mask2 = ((1 << g2.n) - 1) << g1.n
    rows = [row | mask2 for row in g1.rows]
    rows += [(row << g1.n) | mask1 for row in g2.rows]
    return Graph(n, rows)


def be_part_sizes(n: int, r: int) -> tuple[int, int]:
    """(h, k) from the join construction: h = floor(4n/(3r-2)), k = floor(3n/(3r-2))."""
    return 4 * n // (3 * r - 2), 3 * n // (3 * r - 2)


def lower_be(
    n: int,
    r: int,
    b_graph: Graph,
    inner: Optional[InnerSource],
    h: Optional[int] = None,
) -> Graph:
    """Join of a K_4-free two-part graph B with T(n-h, r-2) carrying K_3-free
    interiors.  If B is K_4-free and the interiors are triangle-free the
    result is K_{2r}-free.

    ``h`` defaults to floor(4n/(3r-2)); the formula maximizes edges only
    asymptotically, so an override is accepted.
    """
    if r < 3:
        raise GraphError("lower_be requires r >= 3")
    if h is None:
        h = be_part_sizes(n, r)[0]
    if b_graph.n != h:
        raise GraphError(f"B has {b_graph.n} vertices, expected h = {h}")
    rest = n - h
    if rest < 0:
        raise GraphError("h exceeds n")
    if rest == 0:
        return b_graph
    return join(b_graph, compose_turan(rest, r - 2, inner))


@dataclass(frozen=True)
class BESpec:
    """Parameters of the sphere-based two-part generator."""

    h: int
    dim: int
    theta_cross: float
    theta_within: float
    seed: int

    def validate(self) -> None:
        if self.h <= 0 or self.h % 2:
            raise GraphError("h must be positive and even")
        if self.dim < 2:
            raise GraphError("dim must be at least 2")
        if not (0 < self.theta_cross < math.pi / 2 < self.theta_within < math.pi):
            raise GraphError("need 0 < theta_cross < pi/2 < theta_within < pi")


DEFAULT_THETA_CROSS = math.pi / 2 - 0.12
DEFAULT_THETA_WITHIN = math.pi - 0.12


def bollobas_erdos(
    h: int,
    dim: int,
    theta_cross: float = DEFAULT_THETA_CROSS,
    theta_within: float = DEFAULT_THETA_WITHIN,
    seed: int = 0,
) -> Graph:
    """Two-part spherical graph: h/2 seeded unit vectors per part on S^dim;
    cross edges for near-orthogonal pairs (angle < theta_cross), within-part
    edges for near-antipodal pairs (angle > theta_within).

    The spherical-geometry argument makes suitable parameter choices K_4-free,
    but callers verify K_4-freeness by exact search rather than assuming it.
    """
    spec = BESpec(h, dim, theta_cross, theta_within, seed)
    spec.validate()
    rng = random.Random(seed)
    points = []
    for _ in range(h):
        vec = [rng.gauss(0.0, 1.0) for _ in range(dim + 1)]
        norm = math.sqrt(sum(x * x for x in vec)) or 1.0
        points.append([x / norm for x in vec])
    half = h // 2
    cos_cross = math.cos(theta_cross)
    cos_within = math.cos(theta_within)
    rows = [0] * h
    for u in range(h):
        for v in range(u + 1, h):
            dot = sum(a * b for a, b in zip(points[u], points[v]))
            same_part = (u < half) == (v < half)
            if same_part:
                edge = dot < cos_within
            else:
                edge = dot > cos_cross
            if edge:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(h, rows)


# ---------------------------------------------------------------------------
# declarative construction specs (JSON round-trippable)


@dataclass(frozen=True)
class ConstructionSpec:
    """Declarative description of a construction, for reproducible generation.

    kind: "turan" | "compose" | "be-join" | "bollobas-erdos" | "named"
    """

    kind: str
    params: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "params": self.params}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ConstructionSpec":
        doc = json.loads(text)
        return cls(kind=doc["kind"], params=doc["params"])

    def build(self) -> Graph:
        return build_spec(self)


_NAMED: dict[str, Callable[[], Graph]] = {}


def _register_named() -> None:
    from . import graphs

    _NAMED.update(
        {
            "petersen": graphs.petersen_graph,
            "c5": lambda: graphs.cycle_graph(5),
        }
    )


_register_named()


def _inner_from_spec(doc) -> Optional[InnerSource]:
    if doc is None:
        return None
    if isinstance(doc, str):
        if doc == "empty":
            return None
        if doc in _NAMED:
            return _NAMED[doc]()
        raise GraphError(f"unknown named inner graph {doc!r}")
    spec = ConstructionSpec(kind=doc["kind"], params=doc["params"])
    return build_spec(spec)


def build_spec(spec: ConstructionSpec) -> Graph:
    p = spec.params
    if spec.kind == "turan":
        return turan(int(p["n"]), int(p["r"]))
    if spec.kind == "compose":
        return compose_turan(int(p["n"]), int(p["r"]), _inner_from_spec(p.get("inner")))
    if spec.kind == "bollobas-erdos":
        return bollobas_erdos(
            int(p["h"]),
            int(p["dim"]),
            float(p.get("theta_cross", DEFAULT_THETA_CROSS)),
            float(p.get("theta_within", DEFAULT_THETA_WITHIN)),
            int(p.get("seed", 0)),
        )
    if spec.kind == "be-join":
        b_doc = p["b"]
        b_graph = _inner_from_spec(b_doc)
        if not isinstance(b_graph, Graph):
            raise GraphError("be-join needs a concrete B graph spec")
        return lower_be(
            int(p["n"]),
            int(p["r"]),
            b_graph,
            _inner_from_spec(p.get("inner")),
            h=p.get("h"),
        )
    if spec.kind == "named":
        name = p["name"]
        if name not in _NAMED:
            raise GraphError(f"unknown named graph {name!r}")
        return _NAMED[name]()
    raise GraphError(f"unknown construction kind {spec.kind!r}")
