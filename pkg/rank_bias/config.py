"""Module with the configuration parameters."""
import json
import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseSettings, Field, ValidationError, validator

from rank_bias.counterfactual.enum import RboVariant
from rank_bias.counterfactual.schemas import RboConfig
from rank_bias.exceptions import ArtifactIOError, InvalidInputError
from rank_bias.metrics.schemas import FairnessConfig

DATA_DIR = Path(__file__).parent / "data"


class Settings(BaseSettings):
    """Model with the tool settings.

    Every attribute can be set through an environment variable with the
    `RANK_BIAS_` prefix, e.g. `RANK_BIAS_WORKERS=4`.
    """

    K: int = Field(default=10, ge=1, description="Ranking cut-off.")
    TAU: int = Field(default=0, ge=0, description="Neutrality threshold.")
    LOG_BASE: float = Field(default=2.0, gt=1, description="Position bias log base.")

    RBO_P: float = Field(default=0.9, gt=0, lt=1, description="RBO persistence.")
    RBO_DEPTH: int = Field(default=10, ge=1, description="RBO evaluation depth.")
    RBO_VARIANT: RboVariant = Field(default=RboVariant.EXTRAPOLATED)

    WORKERS: int = Field(default=os.cpu_count() or 1, ge=1)
    CHUNK_SIZE: int = Field(default=10000, ge=1, description="Documents per task.")
    LOG_LEVEL: str = "WARNING"

    LEXICON_PATH: Path = DATA_DIR / "gender_lexicon.json"
    CDS_PATH: Path = DATA_DIR / "gender_cds.tsv"

    @validator("LOG_LEVEL")
    @classmethod
    def known_log_level(cls, v: str) -> str:
        """Log level must be one of the standard logging names."""
        v = v.upper()
        assert v in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"), ValueError(
            f"Unknown log level '{v}'"
        )
        return v

    def fairness_config(self, target: Dict[str, float]) -> FairnessConfig:
        """Build the fairness metric configuration.

        Args:
        ----
            target (dict): Target distribution over groups, usually the one stored
                in the lexicon.

        Returns:
        -------
            FairnessConfig.
        """
        return FairnessConfig(
            k=self.K, tau=self.TAU, log_base=self.LOG_BASE, target=target
        )

    def rbo_config(self) -> RboConfig:
        """Build the rank-biased overlap configuration."""
        return RboConfig(p=self.RBO_P, depth=self.RBO_DEPTH, variant=self.RBO_VARIANT)

    def snapshot(self) -> Dict[str, Any]:
        """Return a JSON serializable copy of the effective settings."""
        return json.loads(self.json())

    class Config:
        """Sub class to set attribute as case sensitive and the env prefix."""

        case_sensitive = True
        validate_assignment = True
        env_prefix = "RANK_BIAS_"
        extra = "forbid"


@lru_cache
def get_settings() -> Settings:
    """Retrieve cached settings."""
    return Settings()


def read_config_file(path: Path) -> Dict[str, Any]:
    """Read a TOML or JSON configuration file.

    Keys are matched case-insensitively against the settings attributes.

    Args:
    ----
        path (Path): File with `.toml` or `.json` extension.

    Returns:
    -------
        dict. Upper case keys with their values.
    """
    try:
        with open(path, "rb") as f:
            if path.suffix.lower() == ".toml":
                data = tomllib.load(f)
            else:
                data = json.load(f)
    except OSError as e:
        raise ArtifactIOError(f"Cannot read config file '{path}': {e}") from e
    except (tomllib.TOMLDecodeError, json.JSONDecodeError) as e:
        raise InvalidInputError(f"Malformed config file '{path}': {e}") from e
    if not isinstance(data, dict):
        raise InvalidInputError(f"Config file '{path}' must contain a table/object")
    return {str(k).upper(): v for k, v in data.items()}


def load_settings(
    config_file: Optional[Path] = None, overrides: Optional[Dict[str, Any]] = None
) -> Settings:
    """Build the effective settings.

    Precedence: overrides (command line flags) > config file > environment >
    defaults.

    Args:
    ----
        config_file (Path | None): Optional TOML or JSON file.
        overrides (dict | None): Values explicitly given on the command line. None
            values are ignored.

    Returns:
    -------
        Settings.
    """
    values: Dict[str, Any] = {}
    if config_file is not None:
        values.update(read_config_file(config_file))
    if overrides:
        values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return Settings(**values)
    except ValidationError as e:
        raise InvalidInputError(f"Invalid settings: {e}") from e
