# isetverify/models/graph_specs.py
from pydantic import BaseModel, Field, ConfigDict, field_validator, model_validator
from typing import List, Optional, Tuple


class MultipartiteSpec(BaseModel):
    """Part sizes of a complete multipartite graph."""
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"parts": [2, 2, 1]}},
    )

    parts: List[int] = Field(..., min_length=1, description="Part sizes, each at least 1; they sum to n")

    @field_validator("parts")
    @classmethod
    def parts_positive(cls, parts: List[int]) -> List[int]:
        if any(size < 1 for size in parts):
            raise ValueError(f"every part needs at least one vertex, got {parts}")
        return parts

    @property
    def n(self) -> int:
        return sum(self.parts)


class EnumSpec(BaseModel):
    """Which isomorphism classes an enumeration emits."""
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "n": 7,
                "min_degree": 2,
                "exact_min_degree": False,
                "connected_only": False,
                "critical_only": False,
                "vertex_critical_only": False,
                "max_edges": None,
            }
        },
    )

    n: int = Field(..., ge=1, description="Vertex count")
    min_degree: int = Field(0, ge=0, description="delta: every emitted graph has minimum degree at least delta")
    exact_min_degree: bool = Field(False, description="Require minimum degree exactly delta")
    connected_only: bool = Field(False, description="Emit connected graphs only")
    critical_only: bool = Field(False, description="Emit graphs that are edge- and vertex-critical at delta")
    vertex_critical_only: bool = Field(False, description="Emit vertex-critical graphs at delta")
    max_edges: Optional[int] = Field(None, ge=0, description="Optional cap on the edge count")

    @model_validator(mode="after")
    def criticality_needs_positive_delta(self) -> "EnumSpec":
        if (self.critical_only or self.vertex_critical_only) and self.min_degree < 1:
            raise ValueError("criticality filters need min_degree >= 1")
        return self


class ShardSpec(BaseModel):
    """One slice of an enumeration; shard 0 also carries the classes above the split level."""
    model_config = ConfigDict(frozen=True)

    index: int = Field(0, ge=0, description="Which slice of the frontier this shard walks")
    count: int = Field(1, ge=1, description="Total number of shards")
    nodes_per_shard: int = Field(4, ge=1, description="Frontier nodes wanted per shard before splitting")
    roots: Optional[Tuple[int, ...]] = Field(None, description="Canonical words of the frontier nodes this shard walks; computed by the shard itself when absent")
    above: Tuple[int, ...] = Field((), description="Canonical words of the nodes above the frontier, carried by shard 0 only")

    @model_validator(mode="after")
    def index_below_count(self) -> "ShardSpec":
        if self.index >= self.count:
            raise ValueError(f"shard index {self.index} must be below shard count {self.count}")
        return self
