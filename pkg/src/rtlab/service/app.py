"""FastAPI service wrapping the lab: one endpoint per operation, experiment
records appended to the JSON-lines log, graph artifacts written under the
output root."""

from __future__ import annotations

import json
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import densities, drc, hdrc, ramsey, regularity, rtsolve
from .. import constructions as cons
from .. import graphs as gr
from ..experiments import ExperimentLog, run_dir
from ..generate import CapExceeded
from ..graph6 import from_graph6, to_graph6
from ..graphs import Graph, GraphError, mask_of, vertices_of
from . import models as m


class ServiceError(Exception):
    def __init__(self, kind: str, message: str):
        self.kind = kind
        self.message = message
        super().__init__(message)


def _frac(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ServiceError("parameter", f"bad rational {text!r}: {exc}") from exc


def _graph(text: str) -> Graph:
    try:
        return from_graph6(text)
    except (GraphError, ValueError) as exc:
        raise ServiceError("parameter", f"bad graph6 payload: {exc}") from exc


def _mask_list(mask: Optional[int]) -> Optional[list[int]]:
    return None if mask is None else list(vertices_of(mask))


def _hyper(doc: m.HypergraphDoc) -> hdrc.PartiteHypergraph:
    try:
        return hdrc.PartiteHypergraph(doc.parts, [tuple(e) for e in doc.edges])
    except ValueError as exc:
        raise ServiceError("parameter", str(exc)) from exc


def _hyper_doc(h: hdrc.PartiteHypergraph) -> m.HypergraphDoc:
    return m.HypergraphDoc(
        parts=[list(p) for p in h.parts], edges=sorted(list(e) for e in h.edges)
    )


def _inner_source(spec: Optional[str]):
    if spec is None or spec == "empty":
        return None
    named = {"petersen": gr.petersen_graph, "c5": lambda: gr.cycle_graph(5)}
    if spec in named:
        return named[spec]()
    return _graph(spec)


def create_app(output_root: Optional[Path] = None) -> FastAPI:
    app = FastAPI(title="rtlab", description="Ramsey-Turan laboratory service")
    log = ExperimentLog(output_root)
    app.state.log = log
    app.state.ramsey_cache = ramsey.RamseyCache(
        log.root / "ramsey-cache.jsonl" if output_root is not None else None
    )

    @app.exception_handler(ServiceError)
    async def service_error(_req: Request, exc: ServiceError):
        return JSONResponse(
            status_code=422, content={"error": {"type": exc.kind, "message": exc.message}}
        )

    @app.exception_handler(CapExceeded)
    async def cap_error(_req: Request, exc: CapExceeded):
        return JSONResponse(
            status_code=422, content={"error": {"type": "cap-exceeded", "message": str(exc)}}
        )

    @app.exception_handler(GraphError)
    async def graph_error(_req: Request, exc: GraphError):
        return JSONResponse(
            status_code=422, content={"error": {"type": "parameter", "message": str(exc)}}
        )

    @app.exception_handler(ValueError)
    async def value_error(_req: Request, exc: ValueError):
        return JSONResponse(
            status_code=422, content={"error": {"type": "parameter", "message": str(exc)}}
        )

    def record(command: str, params: dict, outputs: dict, seed=None, t0=None, artifacts=None):
        log.record(
            command,
            params,
            outputs,
            seed=seed,
            wall_time=0.0 if t0 is None else time.monotonic() - t0,
            artifacts=artifacts,
        )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    # -- graph core ---------------------------------------------------------

    @app.post("/graph/stats", response_model=m.GraphStatsResponse)
    def graph_stats(req: m.GraphPayload):
        t0 = time.monotonic()
        g = _graph(req.graph6)
        out = m.GraphStatsResponse(
            n=g.n,
            edges=g.edge_count(),
            clique_number=gr.clique_number(g),
            independence_number=gr.independence_number(g),
            graph6=to_graph6(g),
        )
        record("graph stats", req.model_dump(), out.model_dump(), t0=t0)
        return out

    @app.post("/graph/clique", response_model=m.CliqueResponse)
    def graph_clique(req: m.CliqueRequest):
        t0 = time.monotonic()
        g = _graph(req.graph6)
        found, witness = gr.contains_clique(g, req.s, with_witness=True)
        out = m.CliqueResponse(contains=found, witness=_mask_list(witness))
        record("graph clique", req.model_dump(), out.model_dump(), t0=t0)
        return out

    @app.post("/graph/independence", response_model=m.IndependenceResponse)
    def graph_independence(req: m.GraphPayload):
        t0 = time.monotonic()
        g = _graph(req.graph6)
        alpha, witness = gr.independence_number(g, with_witness=True)
        out = m.IndependenceResponse(alpha=alpha, witness=_mask_list(witness))
        record("graph independence", req.model_dump(), out.model_dump(), t0=t0)
        return out

    @app.post("/graph/d-independence", response_model=m.ValueResponse)
    def graph_d_independence(req: m.DIndependenceRequest):
        t0 = time.monotonic()
        g = _graph(req.graph6)
        out = m.ValueResponse(value=gr.d_independence_number(g, req.d))
        record("graph d-independence", req.model_dump(), out.model_dump(), t0=t0)
        return out

    # -- constructions ------------------------------------------------------

    def _construct_response(command: str, params: dict, g: Graph, save: bool, stats=True):
        t0 = time.monotonic()
        artifact = sidecar = None
        omega = gr.clique_number(g) if stats and g.n <= 200 else None
        alpha = gr.independence_number(g) if stats and g.n <= 200 else None
        if save:
            dest = run_dir(log.root, tag=command.replace(" ", "-"))
            artifact = str(dest / "graph.g6")
            Path(artifact).write_text(to_graph6(g) + "\n")
            sidecar = str(dest / "stats.json")
            Path(sidecar).write_text(
                json.dumps(
                    {
                        "spec": params,
                        "n": g.n,
                        "edges": g.edge_count(),
                        "clique_number": omega,
                        "independence_number": alpha,
                    },
                    indent=2,
                )
            )
        out = m.ConstructionResponse(
            graph6=to_graph6(g),
            n=g.n,
            edges=g.edge_count(),
            clique_number=omega,
            independence_number=alpha,
            artifact=artifact,
            sidecar=sidecar,
        )
        record(command, params, {"n": g.n, "edges": g.edge_count()}, t0=t0,
               artifacts=[artifact] if artifact else None)
        return out

    @app.post("/construct/turan", response_model=m.ConstructionResponse)
    def construct_turan(req: m.TuranRequest):
        return _construct_response(
            "construct turan", req.model_dump(), cons.turan(req.n, req.r), req.save
        )

    @app.post("/construct/compose-turan", response_model=m.ConstructionResponse)
    def construct_compose(req: m.ComposeTuranRequest):
        g = cons.compose_turan(req.n, req.r, _inner_source(req.inner))
        return _construct_response("construct compose-turan", req.model_dump(), g, req.save)

    @app.post("/construct/lower-be", response_model=m.ConstructionResponse)
    def construct_lower_be(req: m.LowerBERequest):
        g = cons.lower_be(req.n, req.r, _graph(req.b_graph6), _inner_source(req.inner), h=req.h)
        return _construct_response("construct lower-be", req.model_dump(), g, req.save)

    @app.post("/construct/bollobas-erdos", response_model=m.ConstructionResponse)
    def construct_be(req: m.BollobasErdosRequest):
        g = cons.bollobas_erdos(
            req.h,
            req.dim,
            req.theta_cross if req.theta_cross is not None else cons.DEFAULT_THETA_CROSS,
            req.theta_within if req.theta_within is not None else cons.DEFAULT_THETA_WITHIN,
            req.seed,
        )
        return _construct_response("construct bollobas-erdos", req.model_dump(), g, req.save)

    @app.post("/construct/join", response_model=m.ConstructionResponse)
    def construct_join(req: m.JoinRequest):
        g = cons.join(_graph(req.graph6_a), _graph(req.graph6_b))
        return _construct_response("construct join", req.model_dump(), g, req.save)

    # -- ramsey oracle ------------------------------------------------------

    @app.post("/ramsey/exact", response_model=m.RamseyResponse)
    def ramsey_r(req: m.RamseyRequest):
        t0 = time.monotonic()
        rec = app.state.ramsey_cache.get_r(req.s, req.t, n_max=req.n_max, budget=req.budget)
        out = m.RamseyResponse(
            s=rec.s, t=rec.t, lo=rec.lo, hi=rec.hi, exact=rec.exact, provenance=rec.provenance
        )
        record("ramsey exact", req.model_dump(), out.model_dump(), t0=t0)
        return out

    @app.post("/ramsey/q-exact", response_model=m.QExactResponse)
    def ramsey_q(req: m.QExactRequest):
        t0 = time.monotonic()
        rec = app.state.ramsey_cache.get_q(req.t, req.n, budget=req.budget)
        out = m.QExactResponse(
            t=rec.t, n=rec.n, lo=rec.lo, hi=rec.hi, certified=rec.certified,
            provenance=rec.provenance,
            witness_graph6=to_graph6(rec.witness) if rec.witness else None,
        )
        record("ramsey q-exact", req.model_dump(), out.model_dump(), t0=t0)
        return out

    @app.post("/ramsey/q-bounds", response_model=m.QBoundsResponse)
    def ramsey_q_bounds(req: m.QBoundsRequest):
        lo, hi = ramsey.q_bounds(req.t, req.n, req.c1, req.c2)
        out = m.QBoundsResponse(lower=lo, upper=hi, up_to_constants=req.t >= 4)
        record("ramsey q-bounds", req.model_dump(), out.model_dump())
        return out

    @app.post("/ramsey/min-alpha", response_model=m.MinAlphaResponse)
    def ramsey_min_alpha(req: m.MinAlphaRequest):
        t0 = time.monotonic()
        g, alpha, certified = ramsey.min_alpha_graph(req.t, req.n, req.budget, req.seed)
        out = m.MinAlphaResponse(graph6=to_graph6(g), alpha=alpha, certified=certified)
        record("ramsey min-alpha", req.model_dump(), out.model_dump(), seed=req.seed, t0=t0)
        return out

    # -- rt solver -----------------------------------------------------------

    def _rt_response(res: rtsolve.RTResult) -> m.RTResponse:
        stats = {k: v for k, v in res.stats.items() if k != "levels"}
        return m.RTResponse(
            status=res.status,
            max_edges=res.max_edges,
            witness_graph6=to_graph6(res.witness) if res.witness else None,
            method=res.method,
            stats=json.loads(json.dumps(stats, default=str)),
        )

    @app.post("/rt/exact", response_model=m.RTResponse)
    def rt_exact_ep(req: m.RTRequest):
        t0 = time.monotonic()
        res = rtsolve.rt_exact(rtsolve.RTInstance(req.n, req.s, req.m))
        out = _rt_response(res)
        record("rt exact", req.model_dump(), out.model_dump(exclude={"stats"}), t0=t0)
        return out

    @app.post("/rt/search", response_model=m.RTResponse)
    def rt_search_ep(req: m.RTSearchRequest):
        t0 = time.monotonic()
        warm = _graph(req.warm_start) if req.warm_start else None
        res = rtsolve.rt_lower_search(
            rtsolve.RTInstance(req.n, req.s, req.m),
            budget=req.budget, seed=req.seed, warm_start=warm,
        )
        out = _rt_response(res)
        record("rt search", req.model_dump(), out.model_dump(exclude={"stats"}),
               seed=req.seed, t0=t0)
        return out

    @app.post("/rt/check", response_model=m.BoolResponse)
    def rt_check_ep(req: m.RTCheckRequest):
        g = _graph(req.graph6)
        out = m.BoolResponse(
            value=rtsolve.rt_check_witness(g, rtsolve.RTInstance(req.n, req.s, req.m))
        )
        record("rt check", req.model_dump(), out.model_dump())
        return out

    # -- dependent random choice ---------------------------------------------

    @app.post("/drc/predicate", response_model=m.DRCPredicateResponse)
    def drc_predicate_ep(req: m.DRCPredicateRequest):
        d = _frac(req.d) if "/" in req.d or req.d.isdigit() else float(req.d)
        holds, slack = drc.drc_predicate(
            req.n, d, drc.DRCParams(t=req.t, r=req.r, m=req.m, a=req.a)
        )
        out = m.DRCPredicateResponse(holds=holds, slack=str(slack))
        record("drc predicate", req.model_dump(), out.model_dump())
        return out

    @app.post("/drc/find", response_model=m.WitnessResponse)
    def drc_find_ep(req: m.DRCFindRequest):
        t0 = time.monotonic()
        g = _graph(req.graph6)
        params = drc.DRCParams(t=req.t, r=req.r, m=req.m, a=req.a)
        mask = drc.drc_find(g, params, trials=req.trials, seed=req.seed)
        out = m.WitnessResponse(
            witness=_mask_list(mask), certified=mask is not None,
            trials_used=req.trials or drc.trial_bound(g.n, req.a),
        )
        record("drc find", req.model_dump(), out.model_dump(), seed=req.seed, t0=t0)
        return out

    @app.post("/drc/amplify", response_model=m.WitnessResponse)
    def drc_amplify_ep(req: m.AmplifyRequest):
        t0 = time.monotonic()
        g = _graph(req.graph6)
        mask = drc.clique_amplify(
            g, req.r, req.m, req.t, trials=req.trials, seed=req.seed, second=req.second
        )
        out = m.WitnessResponse(witness=_mask_list(mask), certified=mask is not None)
        record("drc amplify", req.model_dump(), out.model_dump(), seed=req.seed, t0=t0)
        return out

    # -- hypergraph pipeline ---------------------------------------------------

    @app.post("/hdrc/step", response_model=m.HdrcStepResponse)
    def hdrc_step_ep(req: m.HdrcStepRequest):
        t0 = time.monotonic()
        h = _hyper(req.hypergraph)
        target = _frac(req.target) if req.target is not None else None
        reduced, stats = hdrc.hdrc_step(
            h, req.s, seed=req.seed, retries=req.retries, target=target
        )
        out = m.HdrcStepResponse(
            hypergraph=_hyper_doc(reduced), stats=json.loads(json.dumps(stats, default=str))
        )
        record("hdrc step", req.model_dump(), {"output_edges": reduced.edge_count()},
               seed=req.seed, t0=t0)
        return out

    @app.post("/hdrc/dangerous-count", response_model=m.ValueResponse)
    def hdrc_dangerous_ep(req: m.DangerousCountRequest):
        t0 = time.monotonic()
        try:
            count = hdrc.dangerous_count(
                _hyper(req.prev), _hyper(req.reduced), req.delta, _frac(req.beta), req.w
            )
        except RuntimeError as exc:
            raise ServiceError("cap-exceeded", str(exc)) from exc
        out = m.ValueResponse(value=count)
        record("hdrc dangerous-count", req.model_dump(), out.model_dump(), t0=t0)
        return out

    @app.post("/hdrc/embed", response_model=m.EmbedResponse)
    def hdrc_embed_ep(req: m.EmbedRequest):
        t0 = time.monotonic()
        g = _graph(req.graph6)
        params = hdrc.EmbedParams(
            p=req.p, q=req.q, beta=_frac(req.beta), s=req.s, base_m=req.base_m
        )
        masks = [mask_of(p) for p in req.parts]
        result, trace = hdrc.embed_kpq(g, masks, params, variant=req.variant, seed=req.seed)
        out = m.EmbedResponse(
            witness=_mask_list(result),
            target_size=trace["target_size"],
            success=result is not None,
            trace=json.loads(json.dumps(trace, default=str)),
        )
        record("hdrc embed", req.model_dump(),
               {"success": out.success, "witness": out.witness}, seed=req.seed, t0=t0)
        return out

    # -- regularity -------------------------------------------------------------

    @app.post("/reg/pair-density", response_model=m.DRCPredicateResponse)
    def reg_pair_density(req: m.PairDensityRequest):
        g = _graph(req.graph6)
        dens = regularity.pair_density(g, mask_of(req.a), mask_of(req.b))
        out = m.DRCPredicateResponse(holds=True, slack=str(dens))
        record("reg pair-density", req.model_dump(), {"density": str(dens)})
        return out

    @app.post("/reg/regular-pair", response_model=m.RegularPairResponse)
    def reg_regular_pair(req: m.RegularPairRequest):
        t0 = time.monotonic()
        g = _graph(req.graph6)
        verdict = regularity.is_regular_pair(
            g, mask_of(req.a), mask_of(req.b), _frac(req.rho),
            mode=req.mode, samples=req.samples, seed=req.seed,
        )
        out = m.RegularPairResponse(
            regular=verdict.regular,
            mode=verdict.mode,
            witness_x=_mask_list(verdict.witness[0]) if verdict.witness else None,
            witness_y=_mask_list(verdict.witness[1]) if verdict.witness else None,
        )
        record("reg regular-pair", req.model_dump(), out.model_dump(), t0=t0)
        return out

    @app.post("/reg/cluster", response_model=m.ClusterResponse)
    def reg_cluster(req: m.ClusterRequest):
        t0 = time.monotonic()
        g = _graph(req.graph6)
        partition = regularity.Partition.from_lists(req.partition)
        res = regularity.cluster_graph(
            g, partition, _frac(req.rho), _frac(req.d_min), samples=req.samples, seed=req.seed
        )
        pairs = [
            {"i": i, "j": j, "density": str(info["density"]),
             "mode": info["mode"], "regular": info["regular"]}
            for (i, j), info in sorted(res.pair_info.items())
        ]
        out = m.ClusterResponse(cluster_graph6=to_graph6(res.graph), pairs=pairs)
        record("reg cluster", req.model_dump(),
               {"cluster_graph6": out.cluster_graph6}, t0=t0)
        return out

    @app.post("/reg/count-transversal", response_model=m.ValueResponse)
    def reg_transversal(req: m.TransversalRequest):
        g = _graph(req.graph6)
        count = regularity.count_transversal_cliques(g, [mask_of(p) for p in req.parts])
        out = m.ValueResponse(value=count)
        record("reg count-transversal", req.model_dump(), out.model_dump())
        return out

    # -- densities -----------------------------------------------------------------

    def _flags(on: bool) -> frozenset:
        return frozenset({densities.CONJECTURE}) if on else frozenset()

    @app.post("/density/lookup", response_model=m.DensityLookupResponse)
    def density_lookup_ep(req: m.DensityLookupRequest):
        fc = densities.parse_function_class(req.f)
        b = densities.density_lookup(req.s, fc, _flags(req.assume_conjecture_2_3b))
        out = m.DensityLookupResponse(
            kind=b.kind,
            value=str(b.value) if b.value is not None else None,
            lower=str(b.lower),
            upper=str(b.upper),
            sources=sorted(set(b.lower_sources + b.upper_sources)),
            assumptions=sorted(b.assumptions),
        )
        record("density lookup", req.model_dump(), out.model_dump())
        return out

    @app.post("/density/table")
    def density_table_ep(req: m.DensityTableRequest):
        doc = densities.table_emit(assumptions=_flags(req.assume_conjecture_2_3b))
        record("density table", req.model_dump(), {"format": req.format})
        if req.format == "text":
            return PlainTextResponse(densities.table_text(doc))
        if req.format == "html":
            return PlainTextResponse(densities.table_html(doc), media_type="text/html")
        return JSONResponse(densities.table_json(doc))

    @app.post("/density/pt", response_model=m.PTResponse)
    def density_pt_ep(req: m.PTRequest):
        res = densities.pt_from_to(
            req.s,
            densities.parse_function_class(req.f),
            densities.parse_function_class(req.g),
            _flags(req.assume_conjecture_2_3b),
        )
        out = m.PTResponse(
            verdict=res["verdict"],
            lower_at_f=str(res["lower_at_f"]),
            upper_at_g=str(res["upper_at_g"]),
            assumptions=sorted(res["assumptions"]),
        )
        record("density pt", req.model_dump(), out.model_dump())
        return out

    @app.post("/density/strong-pt", response_model=m.StrongPTResponse)
    def density_strong_pt_ep(req: m.StrongPTRequest):
        holds, r, ell = densities.strong_pt_check(req.s, req.t)
        out = m.StrongPTResponse(holds=holds, r=r, ell=ell)
        record("density strong-pt", req.model_dump(), out.model_dump())
        return out

    return app
