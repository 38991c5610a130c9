# isetverify/models/structure.py
from pydantic import BaseModel, Field, ConfigDict, computed_field
from typing import List, Literal, Optional, Tuple


class CriticalityReport(BaseModel):
    """Edge- and vertex-criticality of a graph at a given minimum degree."""
    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "delta": 2,
                "edge_critical": True,
                "vertex_critical": False,
                "edge_witness": None,
                "vertex_witness": 2,
            }
        }
    )

    delta: int = Field(..., ge=1, description="The minimum degree tested")
    edge_critical: bool = Field(..., description="Deleting any edge drops the minimum degree below delta")
    vertex_critical: bool = Field(..., description="Deleting any vertex drops the minimum degree below delta")
    edge_witness: Optional[Tuple[int, int]] = Field(None, description="An edge whose deletion keeps minimum degree >= delta")
    vertex_witness: Optional[int] = Field(None, description="A vertex whose deletion keeps minimum degree >= delta")

    @computed_field
    @property
    def critical(self) -> bool:
        return self.edge_critical and self.vertex_critical


class DegreePartition(BaseModel):
    """V_{=delta} and V_{>delta}."""
    delta: int
    exactly_delta: List[int] = Field(..., description="Vertices of degree exactly delta")
    above_delta: List[int] = Field(..., description="Vertices of degree strictly above delta")

    @computed_field
    @property
    def ell(self) -> int:
        return len(self.exactly_delta)

    @computed_field
    @property
    def h(self) -> int:
        return len(self.above_delta)


class Decomposition2(BaseModel):
    """Either the graph is a cycle, or a path Y1 hangs off Y2 through boundary vertices v1, v2."""
    model_config = ConfigDict(
        json_schema_extra={
            "example": {"kind": "path_split", "y1": [1, 2], "y2": [0, 3, 4], "v1": 0, "v2": 0}
        }
    )

    kind: Literal["cycle", "path_split"]
    y1: Optional[List[int]] = Field(None, description="Vertices of the induced path, in path order")
    y2: Optional[List[int]] = Field(None, description="The remaining vertices, inducing minimum degree 2")
    v1: Optional[int] = Field(None, description="Y2-neighbour of the first path endvertex")
    v2: Optional[int] = Field(None, description="Y2-neighbour of the last path endvertex")


class RewirePattern(BaseModel):
    """
    Hub w1 (degree > 3) adjacent to v and x; triangles v-w2-w3 and x-y2-y3 of
    degree-3 vertices; w2 !~ y2 and w3 !~ y3 so the rewired graph stays simple.
    """
    model_config = ConfigDict(frozen=True)

    w1: int
    v: int
    w2: int
    w3: int
    x: int
    y2: int
    y3: int

    def vertices(self) -> Tuple[int, ...]:
        return (self.w1, self.v, self.w2, self.w3, self.x, self.y2, self.y3)


class CriticalityOutput(BaseModel):
    """One line of `critical` output."""
    graph6: str
    criticality: CriticalityReport
    partition: DegreePartition
    decomposition: Optional[Decomposition2] = Field(None, description="Requested with --decompose; absent when the graph does not qualify")
    patterns: Optional[List[RewirePattern]] = Field(None, description="Requested with --patterns")
    note: Optional[str] = None
