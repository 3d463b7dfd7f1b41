"""Pydantic request/response models for the HTTP service.

Wire formats for the value types match the file formats of the core package:
hypergraphs {n, r, edges}, colorings {host, colors: [{edge, color}]},
partitions {blocks}.  Conversion to domain values goes through the package
parsers so the service validates exactly as the file loaders do.
"""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field

from ..hypergraph import (
    EdgeColoring,
    Hypergraph,
    coloring_from_json_dict,
    hypergraph_from_json_dict,
)
from ..partitions import VertexPartition, partition_from_json_dict


class HypergraphModel(BaseModel):
    n: int
    r: int
    edges: list[list[int]]

    def to_domain(self) -> Hypergraph:
        return hypergraph_from_json_dict(self.model_dump())


class ColorEntryModel(BaseModel):
    edge: list[int]
    color: int


class ColoringModel(BaseModel):
    host: HypergraphModel
    colors: list[ColorEntryModel]

    def to_domain(self) -> EdgeColoring:
        return coloring_from_json_dict(self.model_dump())


class PartitionModel(BaseModel):
    blocks: list[list[int]]

    def to_domain(self) -> VertexPartition:
        return partition_from_json_dict(self.model_dump())


# ---- requests -------------------------------------------------------------


class GraphRequest(BaseModel):
    graph: HypergraphModel


class GraphPRequest(BaseModel):
    graph: HypergraphModel
    p: int
    budget_partitions: int = Field(default=5_000_000, ge=1)


class ExpandRequest(BaseModel):
    graph: HypergraphModel
    r: int


class TuranRequest(BaseModel):
    n: int
    p: int
    r: int
    count_only: bool = False


class ColorTrivialRequest(BaseModel):
    n: int
    r: int
    extremal: HypergraphModel
    skeleton: Optional[HypergraphModel] = None


class ColorR3Request(BaseModel):
    n: int
    p: int
    ell: int


class ColorGeneralRequest(BaseModel):
    n: int
    p: int
    r: int


class RainbowFindRequest(BaseModel):
    coloring: ColoringModel
    pattern: HypergraphModel
    budget_nodes: int = Field(default=20_000_000, ge=1)


class ClassifyPairsRequest(BaseModel):
    graph: HypergraphModel
    skeleton: HypergraphModel


class ExtendSkeletonRequest(BaseModel):
    coloring: ColoringModel
    skeleton: HypergraphModel
    vertex_map: list[list[int]]  # [pattern vertex, host vertex] pairs


class CollectionRequest(BaseModel):
    coloring: ColoringModel
    pattern: HypergraphModel
    budget_nodes: int = Field(default=20_000_000, ge=1)


class ExOracleRequest(BaseModel):
    n: int
    r: int
    family: list[HypergraphModel]
    budget_nodes: int = Field(default=20_000_000, ge=1)


class ArOracleRequest(BaseModel):
    n: int
    r: int
    skeleton: HypergraphModel
    budget_nodes: int = Field(default=20_000_000, ge=1)


class CrossingSplitRequest(BaseModel):
    graph: HypergraphModel
    partition: PartitionModel


class FPotentialRequest(BaseModel):
    graph: HypergraphModel
    partition: PartitionModel


class FMaxRequest(BaseModel):
    graph: HypergraphModel
    k: int
    mode: str = "exact"
    seed: int = 0
    initial: Optional[PartitionModel] = None
    budget: int = Field(default=20_000_000, ge=1)


class ClosenessRequest(BaseModel):
    graph: HypergraphModel
    p: int
    mode: str = "exact"
    seed: int = 0
    budget: int = Field(default=20_000_000, ge=1)


class VerifyLowerBoundRequest(BaseModel):
    n: int
    p: int
    r: int
    ell: int
    skeleton: HypergraphModel
    budget_nodes: int = Field(default=20_000_000, ge=1)


class VerifySmallRequest(BaseModel):
    n: int
    r: int
    skeleton: HypergraphModel
    budget_nodes: int = Field(default=20_000_000, ge=1)


class ScanRequest(BaseModel):
    max_vertices: int
    p: int


# ---- responses ------------------------------------------------------------


class ChiResponse(BaseModel):
    chi: int


class CriticalResponse(BaseModel):
    edge_critical: bool
    witness_edge: Optional[list[int]]
    chi: int


class ClassResponse(BaseModel):
    class_: int = Field(alias="class")
    witness: Optional[dict[str, Any]]

    model_config = {"populate_by_name": True}


class WitnessResponse(BaseModel):
    witness: Optional[dict[str, Any]]


class TuranCountResponse(BaseModel):
    t: int


class OracleReportResponse(BaseModel):
    value: int
    witness: Optional[dict[str, Any]]
    certified: bool
    nodes_explored: int


class ValueResponse(BaseModel):
    value: int


class RainbowFindResponse(BaseModel):
    found: bool
    copy_: Optional[dict[str, Any]] = Field(alias="copy")

    model_config = {"populate_by_name": True}


class HealthResponse(BaseModel):
    status: str
    version: str
