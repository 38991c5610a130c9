# isetverify/models/cli_config.py
from pydantic import BaseModel, Field, model_validator
from typing import Literal, Optional

Subcommand = Literal["count", "construct", "critical", "enumerate", "verify", "suite"]


class CliConfig(BaseModel):
    """Flags validated before any work starts; the shard pair is only offered by enumerate."""
    subcommand: Subcommand
    input: Optional[str] = Field(None, description="Input path; stdin when absent or '-'")
    output: Optional[str] = Field(None, description="Output path; stdout when absent or '-'")
    settings_file: Optional[str] = Field(None, description="Settings JSON taking precedence over isetverify.json")
    shard_index: int = Field(0, ge=0)
    shard_count: int = Field(1, ge=1)
    jobs: Optional[int] = Field(None, ge=1)
    max_classes: Optional[int] = Field(None, ge=1)
    timeout_seconds: Optional[float] = Field(None, gt=0)
    allow_n10: bool = False
    progress: bool = False
    log_level: Optional[str] = None

    @model_validator(mode="after")
    def shard_in_range(self) -> "CliConfig":
        if self.shard_index >= self.shard_count:
            raise ValueError(f"--shard-index {self.shard_index} must be below --shard-count {self.shard_count}")
        return self

    def settings_overrides(self) -> dict:
        """Only the flags the user actually set."""
        overrides = {}
        for key in ("jobs", "max_classes", "timeout_seconds", "log_level"):
            value = getattr(self, key)
            if value is not None:
                overrides[key] = value
        if self.allow_n10:
            overrides["allow_n10"] = True
        if self.progress:
            overrides["progress"] = True
        return overrides
