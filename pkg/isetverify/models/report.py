# isetverify/models/report.py
from pydantic import BaseModel, Field, ConfigDict
from typing import Dict, List, Literal, Optional, Union

Verdict = Literal["holds", "violated"]
SizeKey = Union[int, Literal["total"]]


class ScanSpec(BaseModel):
    """The (n, delta, t) a check ran on; t is 'total' for whole-polynomial checks and absent when every t is covered."""
    n: int = Field(..., ge=1)
    delta: int = Field(..., ge=0)
    t: Optional[SizeKey] = None


class Violation(BaseModel):
    graph6: str = Field(..., description="Canonical graph6 of the offending class")
    detail: str = Field(..., description="What failed, with the numbers involved")


class CheckReport(BaseModel):
    """Fields every check reports."""
    check: str = Field(..., description="Registered check name")
    spec: ScanSpec
    verdict: Verdict
    classes_scanned: int = Field(0, ge=0, description="Classes produced by the enumeration")
    runtime_seconds: float = Field(0.0, ge=0)
    finding: Optional[str] = Field(None, description="'counterexample' when a conjecture fails")
    note: Optional[str] = None


class VerificationReport(CheckReport):
    """Maximum of one count over a class scan, compared against a reference value."""
    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "check": "size_t",
                "spec": {"n": 5, "delta": 2, "t": 3},
                "extremal_value": 1,
                "observed_max": 1,
                "verdict": "holds",
                "comparison": "le",
                "achievers": ["DFw", "DF{"],
                "counterexamples": [],
                "runtime_seconds": 0.01,
            }
        }
    )

    extremal_value: int = Field(..., description="Reference value the maximum is compared with")
    observed_max: Optional[int] = Field(None, description="Largest count seen; absent when no class was scanned")
    comparison: Literal["le", "lt"] = Field("le", description="'lt' when the statement is strict")
    achievers: List[str] = Field(default_factory=list, description="Canonical graph6 of classes attaining observed_max")
    counterexamples: List[str] = Field(default_factory=list, description="Canonical graph6 of classes breaking the comparison")
    counterexample_count: int = Field(0, ge=0)
    vacuous: bool = Field(False, description="True when no class passed the scan's filters")
    predicted_achievers: Optional[List[str]] = Field(None, description="Canonical graph6 of the classes a theorem says attain the maximum; absent without one")
    achievers_match: Optional[bool] = Field(None, description="Whether achievers equals predicted_achievers; a mismatch makes the verdict violated")


class EqualityClassReport(CheckReport):
    """Achiever set against the family a theorem predicts for (n, delta, t)."""
    status: Literal["match", "mismatch", "no_prediction"]
    regime: Optional[str] = Field(None, description="Which equality statement produced the prediction")
    extremal_value: int
    observed_max: Optional[int] = None
    predicted: List[str] = Field(default_factory=list)
    observed: List[str] = Field(default_factory=list)
    missing: List[str] = Field(default_factory=list, description="Predicted but not attaining the maximum")
    unexpected: List[str] = Field(default_factory=list, description="Attaining the maximum but not predicted")


class StepCheckReport(CheckReport):
    """A per-graph statement checked case by case."""
    cases_checked: int = Field(0, ge=0)
    violations: List[Violation] = Field(default_factory=list)
    violation_count: int = Field(0, ge=0, description="All violations; the list keeps the first ones in canonical order")
    histogram: Dict[str, int] = Field(default_factory=dict)
    vacuous: bool = False


class ExplorationReport(CheckReport):
    """Open-question output: who attains the maximum, or how critical classes split by degree."""
    observed_max: Optional[int] = None
    achievers: List[str] = Field(default_factory=list)
    contains: Dict[str, bool] = Field(default_factory=dict, description="Whether each named construction is an achiever")
    histogram: Dict[str, int] = Field(default_factory=dict)


AnyReport = Union[VerificationReport, EqualityClassReport, StepCheckReport, ExplorationReport]
