"""Command-line front end: a thin client of the HTTP service.

Every subcommand builds a JSON request and posts it to the service, by
default in-process (no network, byte-identical outputs across runs and
thread settings), or to a running server via --server.  Machine output goes
to stdout as canonical JSON; diagnostics go to stderr.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Optional

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        _fail_usage(f"input file not found: {path}")
    except json.JSONDecodeError as exc:
        _fail_usage(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}")


def _parse_inline_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        _fail_usage(f"bad {what}: {exc.msg}")


def _fail_usage(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(EXIT_USAGE)


def _dump(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


class _Command:
    """One subcommand: request builder plus optional -o artifact extractor."""

    def __init__(
        self,
        path: str,
        build: Callable[[argparse.Namespace], dict],
        artifact: Optional[Callable[[dict], Any]] = None,
    ):
        self.path = path
        self.build = build
        self.artifact = artifact


def _post(args: argparse.Namespace, path: str, payload: dict):
    if getattr(args, "server", None):
        import httpx

        with httpx.Client(base_url=args.server, timeout=None) as client:
            return client.post(path, json=payload)
    from fastapi.testclient import TestClient

    from .service.app import app

    with TestClient(app, raise_server_exceptions=False) as client:
        return client.post(path, json=payload)


def _finish(args: argparse.Namespace, command: _Command, response) -> int:
    if response.status_code == 200:
        doc = response.json()
        out = getattr(args, "output", None)
        if out:
            artifact = command.artifact(doc) if command.artifact else None
            if artifact is None:
                artifact = doc
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(_dump(artifact) + "\n")
        if getattr(args, "table", False):
            print(_table_row_header())
            print(_table_row(doc))
        else:
            print(_dump(doc))
        return EXIT_OK
    if response.status_code == 422:
        print(f"error: invalid request: {response.text}", file=sys.stderr)
        return EXIT_USAGE
    try:
        err = response.json()["error"]
        kind, message = err.get("kind", "domain"), err.get("message", "")
    except Exception:
        kind, message = "domain", response.text
    print(f"error ({kind}): {message}", file=sys.stderr)
    return EXIT_BUDGET if kind == "budget" else EXIT_DOMAIN


def _table_row_header() -> str:
    return f"{'scenario':<40} {'expect':>7} {'got':>7} {'rainbow':>8} {'pass':>5}"


def _table_row(doc: dict) -> str:
    exp = doc.get("expected_colors")
    got = doc.get("observed_colors")
    rb = doc.get("rainbow_found")
    return (
        f"{doc.get('scenario', '?'):<40} "
        f"{'-' if exp is None else exp:>7} "
        f"{'-' if got is None else got:>7} "
        f"{'-' if rb is None else ('yes' if rb else 'no'):>8} "
        f"{'ok' if doc.get('passed') else 'FAIL':>5}"
    )


def _graph_payload(args: argparse.Namespace) -> dict:
    return {"graph": _read_json(args.input)}


def _graph_p_payload(args: argparse.Namespace) -> dict:
    return {
        "graph": _read_json(args.input),
        "p": args.p,
        "budget_partitions": args.budget_partitions,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antiramsey",
        description="Rainbow-subgraph search, constructions, and exact oracles "
        "on uniform hypergraphs (thin client of the antiramsey service).",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def add(name: str, help_: str, needs: tuple[str, ...] = ()) -> argparse.ArgumentParser:
        p = sub.add_parser(
            name, help=help_, formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )
        p.add_argument("--server", default=None, help="URL of a running service; default runs in-process")
        p.add_argument("--threads", type=int, default=1, help="internal parallelism hint; outputs are thread-count independent")
        p.add_argument("-o", "--output", default=None, help="also write the result artifact to this JSON file")
        if "input" in needs:
            p.add_argument("-i", "--input", required=True, help="input JSON file")
        if "p" in needs:
            p.add_argument("-p", type=int, required=True, help="chromatic criticality parameter p")
        if "budget_partitions" in needs:
            p.add_argument("--budget-partitions", type=int, default=5_000_000, help="partition enumeration budget")
        if "budget_nodes" in needs:
            p.add_argument("--budget-nodes", type=int, default=20_000_000, help="search node budget")
        if "seed" in needs:
            p.add_argument("--seed", type=int, default=0, help="seed for randomized starts")
        return p

    add("chromatic", "exact chromatic number of a 2-graph", ("input",))
    add("critical", "edge-criticality verdict with witness edge", ("input",))
    add("doubly-critical", "doubly edge-p-critical report", ("input", "p", "budget_partitions"))
    add("class", "partition class with witness partition", ("input", "p", "budget_partitions"))
    add("config-witness", "(2,0,...,0) index-vector witness partition", ("input", "p", "budget_partitions"))

    p = add("expand", "expand a 2-graph to an r-graph", ("input",))
    p.add_argument("-r", type=int, required=True, help="target uniformity")

    p = add("turan", "balanced crossing r-graph and its size", ())
    p.add_argument("-n", type=int, required=True, help="vertex count")
    p.add_argument("-p", type=int, required=True, help="one more than the block count")
    p.add_argument("-r", type=int, required=True, help="uniformity")
    p.add_argument("--count-only", action="store_true", help="emit only the edge count")

    p = add("color-trivial", "rainbow an extremal graph, one color for the rest", ())
    p.add_argument("-n", type=int, required=True, help="vertex count")
    p.add_argument("-r", type=int, required=True, help="uniformity")
    p.add_argument("--extremal", required=True, help="extremal hypergraph JSON file")
    p.add_argument("--skeleton", default=None, help="context skeleton 2-graph JSON file")

    p = add("color-r3", "3-uniform lower-bound coloring", ())
    p.add_argument("-n", type=int, required=True, help="vertex count")
    p.add_argument("-p", type=int, required=True, help="one more than the block count")
    p.add_argument("--ell", type=int, required=True, help="partition class of the target skeleton")

    p = add("color-general", "general-uniformity lower-bound coloring", ())
    p.add_argument("-n", type=int, required=True, help="vertex count")
    p.add_argument("-p", type=int, required=True, help="one more than the block count")
    p.add_argument("-r", type=int, required=True, help="uniformity (at least 4)")

    p = add("rainbow-find", "exhaustive rainbow-copy search", ("input", "budget_nodes"))
    p.add_argument("--pattern", required=True, help="pattern hypergraph JSON file")

    p = add("classify-pairs", "big/small vertex pairs by codegree threshold", ("input",))
    p.add_argument("--skeleton", required=True, help="skeleton 2-graph JSON file")

    p = add("extend-skeleton", "greedy rainbow extension of an embedded skeleton", ("input",))
    p.add_argument("--skeleton", required=True, help="skeleton 2-graph JSON file")
    p.add_argument("--map", required=True, help='vertex map as JSON pairs, e.g. "[[0,3],[1,5]]"')

    p = add("collection", "greedy maximal edge-disjoint rainbow collection", ("input", "budget_nodes"))
    p.add_argument("--pattern", required=True, help="pattern hypergraph JSON file")

    p = add("ex-oracle", "exact Turán number by branch and bound", ("budget_nodes",))
    p.add_argument("-n", type=int, required=True, help="vertex count")
    p.add_argument("-r", type=int, required=True, help="uniformity")
    p.add_argument("--family", required=True, help="JSON file with a list of forbidden hypergraphs")

    p = add("ar-oracle", "exact anti-Ramsey number by coloring enumeration", ("budget_nodes",))
    p.add_argument("-n", type=int, required=True, help="vertex count")
    p.add_argument("-r", type=int, required=True, help="uniformity")
    p.add_argument("--skeleton", required=True, help="skeleton 2-graph JSON file")

    p = add("crossing-split", "crossing / non-crossing edge decomposition", ("input",))
    p.add_argument("--partition", required=True, help="vertex partition JSON file")

    p = add("f-potential", "sum over edges of blocks met", ("input",))
    p.add_argument("--partition", required=True, help="vertex partition JSON file")

    p = add("f-max", "maximize the block-touch potential", ("input", "seed"))
    p.add_argument("-k", type=int, required=True, help="block count")
    p.add_argument("--mode", choices=["exact", "hillclimb"], default="exact", help="search mode")
    p.add_argument("--initial", default=None, help="initial partition JSON file (hillclimb)")
    p.add_argument("--budget", type=int, default=20_000_000, help="partition / move budget")

    p = add("closeness", "edit distance to the balanced crossing construction", ("input", "p", "seed"))
    p.add_argument("--mode", choices=["exact", "hillclimb"], default="exact", help="search mode")
    p.add_argument("--budget", type=int, default=20_000_000, help="partition / swap budget")

    p = add("verify-lower-bound", "construction color count + rainbow-freeness", ("budget_nodes",))
    p.add_argument("-n", type=int, required=True, help="vertex count")
    p.add_argument("-p", type=int, required=True, help="one more than the block count")
    p.add_argument("-r", type=int, required=True, help="uniformity")
    p.add_argument("--ell", type=int, required=True, help="partition class of the skeleton")
    p.add_argument("--skeleton", required=True, help="skeleton 2-graph JSON file")
    p.add_argument("--table", action="store_true", help="render a fixed-width table row instead of JSON")

    p = add("verify-small", "brute-force oracle cross-check of the trivial bound", ("budget_nodes",))
    p.add_argument("-n", type=int, required=True, help="vertex count")
    p.add_argument("-r", type=int, required=True, help="uniformity")
    p.add_argument("--skeleton", required=True, help="skeleton 2-graph JSON file")
    p.add_argument("--table", action="store_true", help="render a fixed-width table row instead of JSON")

    p = add("scan", "doubly edge-p-critical corpus up to a vertex budget", ())
    p.add_argument("--max-vertices", type=int, required=True, help="largest vertex count scanned (at most 9)")
    p.add_argument("-p", type=int, required=True, help="criticality parameter")

    p = sub.add_parser("serve", help="run the HTTP service with uvicorn",
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    p.add_argument("--host", default="127.0.0.1", help="bind address")
    p.add_argument("--port", type=int, default=8000, help="bind port")

    return parser


COMMANDS: dict[str, _Command] = {
    "chromatic": _Command("/chromatic", _graph_payload),
    "critical": _Command("/critical", _graph_payload),
    "doubly-critical": _Command("/doubly-critical", _graph_p_payload),
    "class": _Command("/class", _graph_p_payload, artifact=lambda d: d.get("witness")),
    "config-witness": _Command("/config-witness", _graph_p_payload, artifact=lambda d: d.get("witness")),
    "expand": _Command(
        "/expand",
        lambda a: {"graph": _read_json(a.input), "r": a.r},
        artifact=lambda d: d.get("hypergraph"),
    ),
    "turan": _Command(
        "/turan",
        lambda a: {"n": a.n, "p": a.p, "r": a.r, "count_only": a.count_only},
        artifact=lambda d: d.get("hypergraph"),
    ),
    "color-trivial": _Command(
        "/color-trivial",
        lambda a: {
            "n": a.n,
            "r": a.r,
            "extremal": _read_json(a.extremal),
            "skeleton": _read_json(a.skeleton) if a.skeleton else None,
        },
    ),
    "color-r3": _Command("/color-r3", lambda a: {"n": a.n, "p": a.p, "ell": a.ell}),
    "color-general": _Command("/color-general", lambda a: {"n": a.n, "p": a.p, "r": a.r}),
    "rainbow-find": _Command(
        "/rainbow-find",
        lambda a: {
            "coloring": _read_json(a.input),
            "pattern": _read_json(a.pattern),
            "budget_nodes": a.budget_nodes,
        },
    ),
    "classify-pairs": _Command(
        "/classify-pairs",
        lambda a: {"graph": _read_json(a.input), "skeleton": _read_json(a.skeleton)},
    ),
    "extend-skeleton": _Command(
        "/extend-skeleton",
        lambda a: {
            "coloring": _read_json(a.input),
            "skeleton": _read_json(a.skeleton),
            "vertex_map": _parse_inline_json(a.map, "--map"),
        },
    ),
    "collection": _Command(
        "/collection",
        lambda a: {
            "coloring": _read_json(a.input),
            "pattern": _read_json(a.pattern),
            "budget_nodes": a.budget_nodes,
        },
    ),
    "ex-oracle": _Command(
        "/ex-oracle",
        lambda a: {
            "n": a.n,
            "r": a.r,
            "family": _read_json(a.family),
            "budget_nodes": a.budget_nodes,
        },
        artifact=lambda d: d.get("witness"),
    ),
    "ar-oracle": _Command(
        "/ar-oracle",
        lambda a: {
            "n": a.n,
            "r": a.r,
            "skeleton": _read_json(a.skeleton),
            "budget_nodes": a.budget_nodes,
        },
        artifact=lambda d: d.get("witness"),
    ),
    "crossing-split": _Command(
        "/crossing-split",
        lambda a: {"graph": _read_json(a.input), "partition": _read_json(a.partition)},
        artifact=lambda d: d.get("partition"),
    ),
    "f-potential": _Command(
        "/f-potential",
        lambda a: {"graph": _read_json(a.input), "partition": _read_json(a.partition)},
    ),
    "f-max": _Command(
        "/f-max",
        lambda a: {
            "graph": _read_json(a.input),
            "k": a.k,
            "mode": a.mode,
            "seed": a.seed,
            "initial": _read_json(a.initial) if a.initial else None,
            "budget": a.budget,
        },
        artifact=lambda d: d.get("witness"),
    ),
    "closeness": _Command(
        "/closeness",
        lambda a: {
            "graph": _read_json(a.input),
            "p": a.p,
            "mode": a.mode,
            "seed": a.seed,
            "budget": a.budget,
        },
        artifact=lambda d: d.get("witness"),
    ),
    "verify-lower-bound": _Command(
        "/verify-lower-bound",
        lambda a: {
            "n": a.n,
            "p": a.p,
            "r": a.r,
            "ell": a.ell,
            "skeleton": _read_json(a.skeleton),
            "budget_nodes": a.budget_nodes,
        },
    ),
    "verify-small": _Command(
        "/verify-small",
        lambda a: {
            "n": a.n,
            "r": a.r,
            "skeleton": _read_json(a.skeleton),
            "budget_nodes": a.budget_nodes,
        },
    ),
    "scan": _Command("/scan", lambda a: {"max_vertices": a.max_vertices, "p": a.p}),
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK
    if getattr(args, "threads", 1) < 1:
        _fail_usage("--threads must be at least 1")
    command = COMMANDS[args.command]
    payload = command.build(args)
    response = _post(args, command.path, payload)
    return _finish(args, command, response)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
