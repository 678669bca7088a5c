"""Command-line client for the lab service.

The CLI never computes anything itself: every subcommand issues one request
against the service API.  By default the app is mounted in-process (no
network, fully reproducible); --server points the same client at a running
instance instead.  Exit codes: 0 success (a "none" or infeasible result is
still success), 2 usage error, 3 internal resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3


def _client(args):
    if args.server:
        import httpx

        return httpx.Client(base_url=args.server, timeout=None)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import create_app

    root = Path(args.output_root) if args.output_root else None
    return TestClient(create_app(output_root=root))


def _call(args, path: str, payload: dict, as_text: bool = False) -> int:
    with _client(args) as client:
        resp = client.post(path, json=payload)
    if resp.status_code == 200:
        print(resp.text if as_text else json.dumps(resp.json(), indent=2))
        return EXIT_OK
    try:
        err = resp.json().get("error", {})
    except ValueError:
        err = {}
    kind = err.get("type", "internal")
    print(f"error ({kind}): {err.get('message', resp.text)}", file=sys.stderr)
    return EXIT_CAP if kind == "cap-exceeded" else EXIT_USAGE


def _read_graph_arg(value: str) -> str:
    """Accept a literal graph6 string or a path to a .g6 file."""
    if os.path.exists(value):
        return Path(value).read_text().strip().splitlines()[0]
    return value


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="rtlab", description=__doc__)
    parser.add_argument("--server", help="service URL; default runs the app in-process")
    parser.add_argument("--output-root", help="artifact/log directory for in-process mode")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the service with uvicorn")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8008)

    p = sub.add_parser("graph", help="graph statistics and solvers")
    gsub = p.add_subparsers(dest="sub", required=True)
    for name in ("stats", "independence"):
        q = gsub.add_parser(name)
        q.add_argument("--graph", required=True)
    q = gsub.add_parser("clique")
    q.add_argument("--graph", required=True)
    q.add_argument("--s", type=int, required=True)
    q = gsub.add_parser("d-independence")
    q.add_argument("--graph", required=True)
    q.add_argument("--d", type=int, required=True)

    p = sub.add_parser("construct", help="build the extremal constructions")
    csub = p.add_subparsers(dest="sub", required=True)
    q = csub.add_parser("turan")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--save", action="store_true")
    q = csub.add_parser("compose-turan")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--inner", default=None, help="named graph, 'empty', or graph6")
    q.add_argument("--save", action="store_true")
    q = csub.add_parser("lower-be")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--b-graph", required=True, help="graph6 or file for the two-part graph B")
    q.add_argument("--inner", default=None)
    q.add_argument("--h", type=int, default=None)
    q.add_argument("--save", action="store_true")
    q = csub.add_parser("bollobas-erdos")
    q.add_argument("--h", type=int, required=True)
    q.add_argument("--dim", type=int, required=True)
    q.add_argument("--theta-cross", type=float, default=None)
    q.add_argument("--theta-within", type=float, default=None)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--save", action="store_true")
    q = csub.add_parser("join")
    q.add_argument("--a", required=True)
    q.add_argument("--b", required=True)
    q.add_argument("--save", action="store_true")

    p = sub.add_parser("ramsey", help="Ramsey numbers and the inverse function")
    rsub = p.add_subparsers(dest="sub", required=True)
    q = rsub.add_parser("exact")
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--n-max", type=int, default=10)
    q = rsub.add_parser("q-exact")
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q = rsub.add_parser("q-bounds")
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--c1", type=float, default=1.0)
    q.add_argument("--c2", type=float, default=1.0)
    q = rsub.add_parser("min-alpha")
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--budget", type=int, default=200_000)
    q.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("rt", help="the Ramsey-Turan edge maximum")
    tsub = p.add_subparsers(dest="sub", required=True)
    q = tsub.add_parser("exact")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q = tsub.add_parser("search")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--budget", type=int, default=200_000)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--warm-start", default=None, help="graph6 or file")
    q = tsub.add_parser("check")
    q.add_argument("--graph", required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--m", type=int, required=True)

    p = sub.add_parser("drc", help="dependent random choice")
    dsub = p.add_subparsers(dest="sub", required=True)
    q = dsub.add_parser("predicate")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--d", required=True)
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--a", type=int, required=True)
    q = dsub.add_parser("find")
    q.add_argument("--graph", required=True)
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--trials", type=int, default=None)
    q.add_argument("--seed", type=int, default=0)
    q = dsub.add_parser("amplify")
    q.add_argument("--graph", required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--trials", type=int, default=32)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--second", type=int, default=2)

    p = sub.add_parser("hdrc", help="hypergraph pipeline")
    hsub = p.add_subparsers(dest="sub", required=True)
    q = hsub.add_parser("embed")
    q.add_argument("--graph", required=True)
    q.add_argument("--parts", required=True, help="JSON list of vertex-index lists")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--beta", default="1/6")
    q.add_argument("--s", type=int, default=2)
    q.add_argument("--base-m", type=int, default=None)
    q.add_argument("--variant", choices=("pq", "pq-1"), default="pq")
    q.add_argument("--seed", type=int, default=0)
    q = hsub.add_parser("step")
    q.add_argument("--hypergraph", required=True, help="JSON {parts, edges} or file")
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--target", default=None)
    q = hsub.add_parser("dangerous-count")
    q.add_argument("--prev", required=True, help="JSON {parts, edges} or file")
    q.add_argument("--reduced", required=True)
    q.add_argument("--delta", type=int, required=True)
    q.add_argument("--beta", required=True)
    q.add_argument("--w", type=int, required=True)

    p = sub.add_parser("reg", help="regularity checks and cluster graphs")
    esub = p.add_subparsers(dest="sub", required=True)
    q = esub.add_parser("pair-density")
    q.add_argument("--graph", required=True)
    q.add_argument("--a", required=True, help="JSON list")
    q.add_argument("--b", required=True)
    q = esub.add_parser("regular-pair")
    q.add_argument("--graph", required=True)
    q.add_argument("--a", required=True)
    q.add_argument("--b", required=True)
    q.add_argument("--rho", required=True)
    q.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    q.add_argument("--samples", type=int, default=2000)
    q.add_argument("--seed", type=int, default=0)
    q = esub.add_parser("cluster")
    q.add_argument("--graph", required=True)
    q.add_argument("--partition", required=True, help="JSON list of lists or file")
    q.add_argument("--rho", required=True)
    q.add_argument("--dmin", required=True)
    q = esub.add_parser("count-transversal")
    q.add_argument("--graph", required=True)
    q.add_argument("--parts", required=True)

    p = sub.add_parser("density", help="density formulas, tables, phase transitions")
    ysub = p.add_subparsers(dest="sub", required=True)
    q = ysub.add_parser("lookup")
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--f", required=True)
    q.add_argument("--assume-conjecture-2.3b", dest="assume", action="store_true")
    q = ysub.add_parser("table")
    q.add_argument("--assume-conjecture-2.3b", dest="assume", action="store_true")
    q.add_argument("--format", choices=("json", "text", "html"), default="text")
    q = ysub.add_parser("pt")
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--f", required=True)
    q.add_argument("--g", required=True)
    q.add_argument("--assume-conjecture-2.3b", dest="assume", action="store_true")
    q = ysub.add_parser("strong-pt")
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--t", type=int, required=True)

    p = sub.add_parser("log", help="inspect or replay the experiment log")
    lsub = p.add_subparsers(dest="sub", required=True)
    lsub.add_parser("show")

    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import create_app

        root = Path(args.output_root) if args.output_root else None
        uvicorn.run(create_app(output_root=root), host=args.host, port=args.port)
        return EXIT_OK

    if args.command == "log":
        from .experiments import ExperimentLog

        root = Path(args.output_root) if args.output_root else None
        log = ExperimentLog(root)
        for rec in log.read_all():
            print(json.dumps(rec))
        return EXIT_OK

    def load_json_arg(value):
        if os.path.exists(value):
            return json.loads(Path(value).read_text())
        return json.loads(value)

    c, s = args.command, getattr(args, "sub", None)
    if c == "graph":
        g6 = _read_graph_arg(args.graph)
        if s == "stats":
            return _call(args, "/graph/stats", {"graph6": g6})
        if s == "clique":
            return _call(args, "/graph/clique", {"graph6": g6, "s": args.s})
        if s == "independence":
            return _call(args, "/graph/independence", {"graph6": g6})
        if s == "d-independence":
            return _call(args, "/graph/d-independence", {"graph6": g6, "d": args.d})
    if c == "construct":
        if s == "turan":
            return _call(args, "/construct/turan",
                         {"n": args.n, "r": args.r, "save": args.save})
        if s == "compose-turan":
            inner = args.inner
            if inner and inner not in ("petersen", "c5", "empty"):
                inner = _read_graph_arg(inner)
            return _call(args, "/construct/compose-turan",
                         {"n": args.n, "r": args.r, "inner": inner, "save": args.save})
        if s == "lower-be":
            inner = args.inner
            if inner and inner not in ("petersen", "c5", "empty"):
                inner = _read_graph_arg(inner)
            return _call(args, "/construct/lower-be",
                         {"n": args.n, "r": args.r, "b_graph6": _read_graph_arg(args.b_graph),
                          "inner": inner, "h": args.h, "save": args.save})
        if s == "bollobas-erdos":
            return _call(args, "/construct/bollobas-erdos",
                         {"h": args.h, "dim": args.dim, "theta_cross": args.theta_cross,
                          "theta_within": args.theta_within, "seed": args.seed,
                          "save": args.save})
        if s == "join":
            return _call(args, "/construct/join",
                         {"graph6_a": _read_graph_arg(args.a),
                          "graph6_b": _read_graph_arg(args.b), "save": args.save})
    if c == "ramsey":
        if s == "exact":
            return _call(args, "/ramsey/exact",
                         {"s": args.s, "t": args.t, "n_max": args.n_max})
        if s == "q-exact":
            return _call(args, "/ramsey/q-exact", {"t": args.t, "n": args.n})
        if s == "q-bounds":
            return _call(args, "/ramsey/q-bounds",
                         {"t": args.t, "n": args.n, "c1": args.c1, "c2": args.c2})
        if s == "min-alpha":
            return _call(args, "/ramsey/min-alpha",
                         {"t": args.t, "n": args.n, "budget": args.budget, "seed": args.seed})
    if c == "rt":
        if s == "exact":
            return _call(args, "/rt/exact", {"n": args.n, "s": args.s, "m": args.m})
        if s == "search":
            warm = _read_graph_arg(args.warm_start) if args.warm_start else None
            return _call(args, "/rt/search",
                         {"n": args.n, "s": args.s, "m": args.m, "budget": args.budget,
                          "seed": args.seed, "warm_start": warm})
        if s == "check":
            return _call(args, "/rt/check",
                         {"graph6": _read_graph_arg(args.graph),
                          "n": args.n, "s": args.s, "m": args.m})
    if c == "drc":
        if s == "predicate":
            return _call(args, "/drc/predicate",
                         {"n": args.n, "d": args.d, "t": args.t, "r": args.r,
                          "m": args.m, "a": args.a})
        if s == "find":
            return _call(args, "/drc/find",
                         {"graph6": _read_graph_arg(args.graph), "t": args.t, "r": args.r,
                          "m": args.m, "a": args.a, "trials": args.trials, "seed": args.seed})
        if s == "amplify":
            return _call(args, "/drc/amplify",
                         {"graph6": _read_graph_arg(args.graph), "r": args.r, "m": args.m,
                          "t": args.t, "trials": args.trials, "seed": args.seed,
                          "second": args.second})
    if c == "hdrc":
        if s == "embed":
            return _call(args, "/hdrc/embed",
                         {"graph6": _read_graph_arg(args.graph),
                          "parts": load_json_arg(args.parts), "p": args.p, "q": args.q,
                          "beta": args.beta, "s": args.s, "base_m": args.base_m,
                          "variant": args.variant, "seed": args.seed})
        if s == "step":
            return _call(args, "/hdrc/step",
                         {"hypergraph": load_json_arg(args.hypergraph), "s": args.s,
                          "seed": args.seed, "target": args.target})
        if s == "dangerous-count":
            return _call(args, "/hdrc/dangerous-count",
                         {"prev": load_json_arg(args.prev),
                          "reduced": load_json_arg(args.reduced), "delta": args.delta,
                          "beta": args.beta, "w": args.w})
    if c == "reg":
        if s == "pair-density":
            return _call(args, "/reg/pair-density",
                         {"graph6": _read_graph_arg(args.graph),
                          "a": load_json_arg(args.a), "b": load_json_arg(args.b)})
        if s == "regular-pair":
            return _call(args, "/reg/regular-pair",
                         {"graph6": _read_graph_arg(args.graph), "a": load_json_arg(args.a),
                          "b": load_json_arg(args.b), "rho": args.rho, "mode": args.mode,
                          "samples": args.samples, "seed": args.seed})
        if s == "cluster":
            return _call(args, "/reg/cluster",
                         {"graph6": _read_graph_arg(args.graph),
                          "partition": load_json_arg(args.partition),
                          "rho": args.rho, "d_min": args.dmin})
        if s == "count-transversal":
            return _call(args, "/reg/count-transversal",
                         {"graph6": _read_graph_arg(args.graph),
                          "parts": load_json_arg(args.parts)})
    if c == "density":
        if s == "lookup":
            return _call(args, "/density/lookup",
                         {"s": args.s, "f": args.f, "assume_conjecture_2_3b": args.assume})
        if s == "table":
            return _call(args, "/density/table",
                         {"assume_conjecture_2_3b": args.assume, "format": args.format},
                         as_text=args.format != "json")
        if s == "pt":
            return _call(args, "/density/pt",
                         {"s": args.s, "f": args.f, "g": args.g,
                          "assume_conjecture_2_3b": args.assume})
        if s == "strong-pt":
            return _call(args, "/density/strong-pt", {"s": args.s, "t": args.t})
    parser.error(f"unhandled command {c} {s}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
