"""Configuration settings for DeltaBound using Pydantic."""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

DEFAULT_DATA_DIR = Path(__file__).resolve().parent.parent / "data"


class EnumerationConfig(BaseModel):
    """Configuration for a single enumeration run."""

    threads: int = Field(default=1, ge=1, description="Worker processes for sharded runs")
    max_points: int = Field(default=10**8, ge=1, description="Hard cap on emitted points")
    max_candidates: int = Field(
        default=10**11, ge=1, description="Hard cap on grid cells scanned"
    )
    block_size: int = Field(
        default=1 << 20, ge=1, description="Cells evaluated per vectorized block"
    )


class Settings(BaseSettings):
    """Global application settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="DELTABOUND_",
        case_sensitive=False,
    )

    # Paths
    data_dir: Path = Field(default=DEFAULT_DATA_DIR, description="Bundled data directory")

    # Logging
    log_level: str = Field(default="WARNING", description="Logging level")
    log_format: str = Field(default="text", description="Log format (json, text)")

    # Enumeration
    threads: int = Field(default=1, description="Default worker processes")
    max_points: int = Field(default=10**8, description="Hard cap on emitted points")
    max_candidates: int = Field(default=10**11, description="Hard cap on grid cells scanned")
    block_size: int = Field(default=1 << 20, description="Cells per vectorized block")
    repulsion_rel_tol: float = Field(
        default=1e-9, description="Log-space window of the float prefilter in repulsion scans"
    )

    # Pell
    pell_fallback_bound: int = Field(
        default=10**6, description="Brute-force fallback horizon for generalized Pell searches"
    )

    @field_validator("log_format")
    @classmethod
    def check_log_format(cls, v: str) -> str:
        """Only json and text renderers exist."""
        v = v.lower()
        if v not in ("json", "text"):
            raise ValueError("log_format must be 'json' or 'text'")
        return v

    @field_validator("threads", "max_points", "max_candidates", "block_size")
    @classmethod
    def check_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be positive")
        return v

    @field_validator("pell_fallback_bound")
    @classmethod
    def check_nonnegative(cls, v: int) -> int:
        if v < 0:
            raise ValueError("must be nonnegative")
        return v

    def enumeration_config(
        self, threads: Optional[int] = None, max_points: Optional[int] = None
    ) -> EnumerationConfig:
        """Build a per-run enumeration config, applying optional overrides."""
        return EnumerationConfig(
            threads=threads if threads is not None else self.threads,
            max_points=max_points if max_points is not None else self.max_points,
            max_candidates=self.max_candidates,
            block_size=self.block_size,
        )

    @property
    def varieties_dir(self) -> Path:
        return self.data_dir / "varieties"
