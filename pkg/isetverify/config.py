# isetverify/config.py
from typing import Optional, Tuple, Type

from pydantic import Field
from pydantic_settings import (
    BaseSettings,
    JsonConfigSettingsSource,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)

CONFIG_FILE = "isetverify.json"


class Settings(BaseSettings):
    """Run settings: keyword arguments first, then an optional isetverify.json. The environment is not read."""
    model_config = SettingsConfigDict(json_file=CONFIG_FILE, json_file_encoding="utf-8", extra="ignore")

    # --- Enumeration budget ---
    max_enumeration_vertices: int = Field(9, ge=1, le=10, description="Largest n enumerated without --allow-n10")
    allow_n10: bool = Field(False, description="Unlock enumeration on 10 vertices")
    max_classes: Optional[int] = Field(None, ge=1, description="Abort a check after this many classes")
    timeout_seconds: Optional[float] = Field(None, gt=0, description="Wall-clock backstop per check")

    # --- Parallel scans ---
    jobs: int = Field(1, ge=1, description="Worker processes; 1 runs in-process")
    shard_factor: int = Field(4, ge=1, description="Enumeration shards per worker")
    stream_cache_size: int = Field(16, ge=0, description="Serial class streams kept in memory for replay by later checks; 0 disables")

    # --- Output ---
    report_dir: str = Field("reports", description="Where the suite writes its reports")
    log_level: str = Field("INFO", description="Root logging level")
    schema_version: int = Field(1, description="Value of the top-level 'schema' field in JSON output")
    progress: bool = Field(False, description="Show tqdm progress bars on stderr")

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return init_settings, JsonConfigSettingsSource(settings_cls)


# Create a single instance
settings = Settings()
