# isetverify/models/suite.py
from pydantic import BaseModel, Field, ConfigDict, field_validator
from typing import Dict, List, Literal, Optional, Union

Expectation = Literal["holds", "violated", "any", "conjecture"]
GridValue = Union[int, str, List[Union[int, str]]]


class CheckEntry(BaseModel):
    """One check over the cartesian product of its parameter lists."""
    model_config = ConfigDict(
        json_schema_extra={
            "example": {"check": "size_t", "params": {"n": [5, 6], "delta": 2, "t": [3, 4]}, "expect": "holds"}
        }
    )

    check: str = Field(..., description="Registered check name")
    params: Dict[str, GridValue] = Field(default_factory=dict, description="Scalars or lists; lists are crossed")
    expect: Optional[Expectation] = Field(None, description="Defaults to the check's own expectation; 'conjecture' flags a violation as a finding")
    label: Optional[str] = Field(None, description="Prefix for report file names; defaults to the check name")

    @field_validator("params")
    @classmethod
    def lists_not_empty(cls, params: Dict[str, GridValue]) -> Dict[str, GridValue]:
        for key, value in params.items():
            if isinstance(value, list) and not value:
                raise ValueError(f"parameter '{key}' has an empty value list")
        return params


class SuiteConfig(BaseModel):
    checks: List[CheckEntry] = Field(default_factory=list)


Status = Literal["passed", "failed", "finding", "budget_exceeded", "error"]


class SuiteOutcome(BaseModel):
    check: str
    params: Dict[str, Union[int, str]]
    expect: Expectation
    verdict: Optional[str] = Field(None, description="Verdict of the report; absent when the check did not finish")
    status: Status
    report_file: Optional[str] = None
    runtime_seconds: float = 0.0
    detail: Optional[str] = None


class SuiteReport(BaseModel):
    outcomes: List[SuiteOutcome] = Field(default_factory=list)
    passed: int = 0
    failed: int = 0
    findings: int = 0
    budget_exceeded: int = 0
    errors: int = 0
