"""FastAPI service wrapping the core package, one endpoint per operation.

Domain errors surface as HTTP 400 with a structured body
{"error": {"kind": ..., "message": ...}}; the kind distinguishes budget
exhaustion from ordinary domain failures, which the CLI maps onto its exit
codes.  All handlers are synchronous: requests are CPU-bound searches.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..chromatic import chromatic_number, doubly_critical_report, is_edge_critical
from ..constructions import (
    expansion,
    lower_bound_coloring_general,
    lower_bound_coloring_r3,
    trivial_lower_bound_coloring,
    turan_hypergraph,
)
from ..errors import AntiRamseyError
from ..oracles import (
    ar_bruteforce,
    closeness_to_turan,
    crossing_split,
    ex_bruteforce,
    f_maximize,
    f_potential,
)
from ..partitions import class_of, config_witness
from ..rainbow import (
    classify_pairs,
    extend_skeleton,
    find_rainbow_copy,
    maximal_disjoint_rainbow_collection,
)
from ..verify import scan_doubly_critical, verify_lower_bound, verify_small_case
from . import schemas as s

app = FastAPI(
    title="antiramsey",
    version=__version__,
    description="Exact rainbow-subgraph search, constructions, and oracles "
    "on uniform hypergraphs.",
)


@app.exception_handler(AntiRamseyError)
def _domain_error(_request: Request, exc: AntiRamseyError) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error": {"kind": exc.kind, "message": str(exc)}},
    )


@app.get("/health", response_model=s.HealthResponse)
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/chromatic", response_model=s.ChiResponse)
def chromatic(req: s.GraphRequest) -> dict:
    return {"chi": chromatic_number(req.graph.to_domain())}


@app.post("/critical", response_model=s.CriticalResponse)
def critical(req: s.GraphRequest) -> dict:
    graph = req.graph.to_domain()
    verdict, witness = is_edge_critical(graph)
    return {
        "edge_critical": verdict,
        "witness_edge": list(witness) if witness else None,
        "chi": chromatic_number(graph),
    }


@app.post("/doubly-critical")
def doubly_critical(req: s.GraphPRequest) -> dict:
    return doubly_critical_report(req.graph.to_domain(), req.p).to_json_dict()


@app.post("/class", response_model=s.ClassResponse)
def partition_class(req: s.GraphPRequest) -> dict:
    value, witness = class_of(req.graph.to_domain(), req.p, budget=req.budget_partitions)
    return {"class": value, "witness": witness.to_json_dict() if witness else None}


@app.post("/config-witness", response_model=s.WitnessResponse)
def config_witness_endpoint(req: s.GraphPRequest) -> dict:
    witness = config_witness(req.graph.to_domain(), req.p, budget=req.budget_partitions)
    return {"witness": witness.to_json_dict() if witness else None}


@app.post("/expand")
def expand(req: s.ExpandRequest) -> dict:
    result = expansion(req.graph.to_domain(), req.r)
    return {
        "hypergraph": result.hypergraph.to_json_dict(),
        "skeleton_vertices": list(result.skeleton_vertices),
        "edge_provenance": [
            {"edge": list(e), "skeleton_edge": list(se)}
            for e, se in result.edge_provenance.items()
        ],
    }


@app.post("/turan")
def turan(req: s.TuranRequest) -> dict:
    result = turan_hypergraph(req.n, req.p, req.r)
    if req.count_only:
        return {"t": result.count}
    return {
        "t": result.count,
        "hypergraph": result.hypergraph.to_json_dict(),
        "partition": result.partition.to_json_dict(),
    }


@app.post("/color-trivial")
def color_trivial(req: s.ColorTrivialRequest) -> dict:
    skeleton = req.skeleton.to_domain() if req.skeleton else None
    coloring = trivial_lower_bound_coloring(req.n, req.r, skeleton, req.extremal.to_domain())
    return coloring.to_json_dict()


@app.post("/color-r3")
def color_r3(req: s.ColorR3Request) -> dict:
    return lower_bound_coloring_r3(req.n, req.p, req.ell).to_json_dict()


@app.post("/color-general")
def color_general(req: s.ColorGeneralRequest) -> dict:
    return lower_bound_coloring_general(req.n, req.p, req.r).to_json_dict()


@app.post("/rainbow-find", response_model=s.RainbowFindResponse)
def rainbow_find(req: s.RainbowFindRequest) -> dict:
    copy = find_rainbow_copy(
        req.coloring.to_domain(), req.pattern.to_domain(), budget_nodes=req.budget_nodes
    )
    return {"found": copy is not None, "copy": copy.to_json_dict() if copy else None}


@app.post("/classify-pairs")
def classify_pairs_endpoint(req: s.ClassifyPairsRequest) -> dict:
    return classify_pairs(req.graph.to_domain(), req.skeleton.to_domain()).to_json_dict()


@app.post("/extend-skeleton")
def extend_skeleton_endpoint(req: s.ExtendSkeletonRequest) -> dict:
    vm = {int(p): int(h) for p, h in req.vertex_map}
    outcome = extend_skeleton(req.coloring.to_domain(), req.skeleton.to_domain(), vm)
    return outcome.to_json_dict()


@app.post("/collection")
def collection(req: s.CollectionRequest) -> dict:
    copies = maximal_disjoint_rainbow_collection(
        req.coloring.to_domain(), req.pattern.to_domain(), budget_nodes=req.budget_nodes
    )
    return {"size": len(copies), "copies": [c.to_json_dict() for c in copies]}


@app.post("/ex-oracle", response_model=s.OracleReportResponse)
def ex_oracle(req: s.ExOracleRequest) -> dict:
    family = [g.to_domain() for g in req.family]
    return ex_bruteforce(req.n, req.r, family, budget_nodes=req.budget_nodes).to_json_dict()


@app.post("/ar-oracle", response_model=s.OracleReportResponse)
def ar_oracle(req: s.ArOracleRequest) -> dict:
    report = ar_bruteforce(req.n, req.r, req.skeleton.to_domain(), budget_nodes=req.budget_nodes)
    return report.to_json_dict()


@app.post("/crossing-split")
def crossing_split_endpoint(req: s.CrossingSplitRequest) -> dict:
    return crossing_split(req.graph.to_domain(), req.partition.to_domain()).to_json_dict()


@app.post("/f-potential", response_model=s.ValueResponse)
def f_potential_endpoint(req: s.FPotentialRequest) -> dict:
    return {"value": f_potential(req.graph.to_domain(), req.partition.to_domain())}


@app.post("/f-max")
def f_max(req: s.FMaxRequest) -> dict:
    initial = req.initial.to_domain() if req.initial else None
    result = f_maximize(
        req.graph.to_domain(),
        req.k,
        mode=req.mode,
        seed=req.seed,
        initial=initial,
        budget=req.budget,
    )
    return result.to_json_dict()


@app.post("/closeness")
def closeness(req: s.ClosenessRequest) -> dict:
    result = closeness_to_turan(
        req.graph.to_domain(), req.p, mode=req.mode, seed=req.seed, budget=req.budget
    )
    return result.to_json_dict()


@app.post("/verify-lower-bound")
def verify_lower_bound_endpoint(req: s.VerifyLowerBoundRequest) -> dict:
    report = verify_lower_bound(
        req.n, req.p, req.r, req.ell, req.skeleton.to_domain(), budget_nodes=req.budget_nodes
    )
    return report.to_json_dict()


@app.post("/verify-small")
def verify_small(req: s.VerifySmallRequest) -> dict:
    report = verify_small_case(req.n, req.r, req.skeleton.to_domain(), budget_nodes=req.budget_nodes)
    return report.to_json_dict()


@app.post("/scan")
def scan(req: s.ScanRequest) -> dict:
    return scan_doubly_critical(req.max_vertices, req.p).to_json_dict()
