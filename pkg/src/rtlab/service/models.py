"""Pydantic request/response models for the lab service."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class GraphPayload(BaseModel):
    graph6: str


class GraphStatsResponse(BaseModel):
    n: int
    edges: int
    clique_number: int
    independence_number: int
    graph6: str


class CliqueRequest(BaseModel):
    graph6: str
    s: int = Field(ge=1)


class CliqueResponse(BaseModel):
    contains: bool
    witness: Optional[list[int]] = None


class IndependenceResponse(BaseModel):
    alpha: int
    witness: list[int]


class DIndependenceRequest(BaseModel):
    graph6: str
    d: int = Field(ge=2)


class ValueResponse(BaseModel):
    value: int


class TuranRequest(BaseModel):
    n: int = Field(ge=1)
    r: int = Field(ge=1)
    save: bool = False


class ComposeTuranRequest(BaseModel):
    n: int = Field(ge=1)
    r: int = Field(ge=1)
    inner: Optional[str] = None  # named graph, "empty", or a graph6 string
    save: bool = False


class LowerBERequest(BaseModel):
    n: int
    r: int = Field(ge=3)
    b_graph6: str
    inner: Optional[str] = None
    h: Optional[int] = None
    save: bool = False


class BollobasErdosRequest(BaseModel):
    h: int = Field(ge=2)
    dim: int = Field(ge=2)
    theta_cross: Optional[float] = None
    theta_within: Optional[float] = None
    seed: int = 0
    save: bool = False


class JoinRequest(BaseModel):
    graph6_a: str
    graph6_b: str
    save: bool = False


class ConstructionResponse(BaseModel):
    graph6: str
    n: int
    edges: int
    clique_number: Optional[int] = None
    independence_number: Optional[int] = None
    artifact: Optional[str] = None
    sidecar: Optional[str] = None


class RamseyRequest(BaseModel):
    s: int = Field(ge=2)
    t: int = Field(ge=2)
    n_max: int = 10
    budget: int = 3_000_000


class RamseyResponse(BaseModel):
    s: int
    t: int
    lo: int
    hi: Optional[int]
    exact: bool
    provenance: str


class QExactRequest(BaseModel):
    t: int = Field(ge=2)
    n: int = Field(ge=0)
    budget: int = 3_000_000


class QExactResponse(BaseModel):
    t: int
    n: int
    lo: int
    hi: int
    certified: bool
    provenance: str
    witness_graph6: Optional[str]


class QBoundsRequest(BaseModel):
    t: int = Field(ge=3)
    n: int = Field(ge=2)
    c1: float = 1.0
    c2: float = 1.0


class QBoundsResponse(BaseModel):
    lower: float
    upper: float
    up_to_constants: bool


class MinAlphaRequest(BaseModel):
    t: int = Field(ge=3)
    n: int = Field(ge=1)
    budget: int = 200_000
    seed: int = 0


class MinAlphaResponse(BaseModel):
    graph6: str
    alpha: int
    certified: bool


class RTRequest(BaseModel):
    n: int = Field(ge=1)
    s: int = Field(ge=3)
    m: int = Field(ge=1)


class RTSearchRequest(RTRequest):
    budget: int = 200_000
    seed: int = 0
    warm_start: Optional[str] = None  # graph6


class RTResponse(BaseModel):
    status: str
    max_edges: Optional[int]
    witness_graph6: Optional[str]
    method: str
    stats: dict


class RTCheckRequest(BaseModel):
    graph6: str
    n: int
    s: int
    m: int


class BoolResponse(BaseModel):
    value: bool


class DRCPredicateRequest(BaseModel):
    n: int = Field(ge=1)
    d: str  # rational or float, e.g. "8" or "8.5" or "17/2"
    t: int = Field(ge=1)
    r: int = Field(ge=1)
    m: int = Field(ge=1)
    a: int = Field(ge=1)


class DRCPredicateResponse(BaseModel):
    holds: bool
    slack: str


class DRCFindRequest(BaseModel):
    graph6: str
    t: int
    r: int
    m: int
    a: int
    trials: Optional[int] = None
    seed: int = 0


class WitnessResponse(BaseModel):
    witness: Optional[list[int]]
    certified: bool
    trials_used: Optional[int] = None


class AmplifyRequest(BaseModel):
    graph6: str
    r: int
    m: int
    t: int
    trials: int = 32
    seed: int = 0
    second: int = 2


class HypergraphDoc(BaseModel):
    parts: list[list[int]]
    edges: list[list[int]]


class HdrcStepRequest(BaseModel):
    hypergraph: HypergraphDoc
    s: int = Field(ge=1)
    seed: int = 0
    retries: int = 12
    target: Optional[str] = None  # rational


class HdrcStepResponse(BaseModel):
    hypergraph: HypergraphDoc
    stats: dict


class DangerousCountRequest(BaseModel):
    prev: HypergraphDoc
    reduced: HypergraphDoc
    delta: int = Field(ge=1)
    beta: str
    w: int = Field(ge=1)


class EmbedRequest(BaseModel):
    graph6: str
    parts: list[list[int]]
    p: int = Field(ge=2)
    q: int = Field(ge=2)
    beta: str = "1/6"
    s: int = 2
    base_m: Optional[int] = None
    variant: str = "pq"
    seed: int = 0


class EmbedResponse(BaseModel):
    witness: Optional[list[int]]
    target_size: int
    success: bool
    trace: dict


class PairDensityRequest(BaseModel):
    graph6: str
    a: list[int]
    b: list[int]


class RegularPairRequest(BaseModel):
    graph6: str
    a: list[int]
    b: list[int]
    rho: str
    mode: str = "exact"
    samples: int = 2000
    seed: int = 0


class RegularPairResponse(BaseModel):
    regular: bool
    mode: str
    witness_x: Optional[list[int]] = None
    witness_y: Optional[list[int]] = None


class ClusterRequest(BaseModel):
    graph6: str
    partition: list[list[int]]
    rho: str
    d_min: str
    samples: int = 2000
    seed: int = 0


class ClusterResponse(BaseModel):
    cluster_graph6: str
    pairs: list[dict]


class TransversalRequest(BaseModel):
    graph6: str
    parts: list[list[int]]


class DensityLookupRequest(BaseModel):
    s: int = Field(ge=3)
    f: str
    assume_conjecture_2_3b: bool = False


class DensityLookupResponse(BaseModel):
    kind: str
    value: Optional[str]
    lower: str
    upper: str
    sources: list[str]
    assumptions: list[str]


class DensityTableRequest(BaseModel):
    assume_conjecture_2_3b: bool = False
    format: str = "json"  # json | text | html


class PTRequest(BaseModel):
    s: int = Field(ge=3)
    f: str
    g: str
    assume_conjecture_2_3b: bool = False


class PTResponse(BaseModel):
    verdict: str
    lower_at_f: str
    upper_at_g: str
    assumptions: list[str]


class StrongPTRequest(BaseModel):
    s: int = Field(ge=3)
    t: int = Field(ge=2)


class StrongPTResponse(BaseModel):
    holds: bool
    r: int
    ell: int
