"""Configuration module"""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError
from pydantic_settings import BaseSettings

from ..errors import ConfigurationError

logger = logging.getLogger(__name__)

DEFAULT_PROFILES_PATH = Path(__file__).with_name("profiles.yml")


class Settings(BaseSettings):
    """Application settings"""

    # Service info
    SERVICE_NAME: str = "braid-gs"
    SERVICE_VERSION: str = "1.0.0"

    # Word algebra
    MAX_RANK: int = 64
    MAX_WORD_LENGTH: int = 1_000_000

    # Rewriting
    NORMALIZE_STEP_GUARD: int = 10_000_000

    # Oracles and enumeration
    BFS_CLASS_CAP: int = 200_000
    ENUMERATION_BUDGET: int = 2_000_000

    # Batch work
    WORKERS: int = 1

    # Verification profiles
    PROFILES_PATH: str = str(DEFAULT_PROFILES_PATH)

    # Logging
    LOG_LEVEL: str = "INFO"

    class Config:
        env_file = ".env"
        case_sensitive = True


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


class ConfluenceBound(BaseModel):
    """One confluence run: rank and LHS length bound"""
    rank: int = Field(..., ge=2)
    max_lhs_len: int = Field(..., ge=0)


class LemmaBounds(BaseModel):
    ranks: List[int] = Field(default_factory=lambda: [2, 3, 4])
    trials: int = Field(default=50, ge=1)
    seed: int = 0


class OracleBounds(BaseModel):
    """Exhaustive and sampled engine-vs-oracle checks"""
    rank: int = Field(default=2, ge=1)
    max_length: int = Field(default=4, ge=0)
    sample_rank: int = Field(default=3, ge=1)
    sample_length: int = Field(default=8, ge=0)
    samples: int = Field(default=100, ge=0)
    garside_length: int = Field(default=5, ge=0)
    garside_sample_rank: int = Field(default=3, ge=1)
    garside_sample_length: int = Field(default=6, ge=0)
    garside_samples: int = Field(default=50, ge=0)
    seed: int = 0


class BenchBounds(BaseModel):
    rank: int = Field(default=3, ge=1)
    words: int = Field(default=200, ge=1)
    length: int = Field(default=12, ge=0)
    seed: int = 0


class VerificationProfile(BaseModel):
    """Named bundle of verification bounds"""
    name: str
    description: Optional[str] = None
    confluence: List[ConfluenceBound] = Field(default_factory=list)
    lemmas: LemmaBounds = Field(default_factory=LemmaBounds)
    oracle: OracleBounds = Field(default_factory=OracleBounds)
    bench: BenchBounds = Field(default_factory=BenchBounds)


def load_profiles(path: Optional[str] = None) -> Dict[str, VerificationProfile]:
    """Load verification profiles from YAML"""
    profiles_path = Path(path or get_settings().PROFILES_PATH)
    try:
        with profiles_path.open("r", encoding="utf-8") as handle:
            raw = yaml.safe_load(handle) or {}
    except OSError as e:
        raise ConfigurationError(f"Cannot read profiles file {profiles_path}: {e}")
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Malformed profiles file {profiles_path}: {e}")

    profiles: Dict[str, VerificationProfile] = {}
    for name, body in (raw.get("profiles") or {}).items():
        try:
            profiles[name] = VerificationProfile(name=name, **(body or {}))
        except ValidationError as e:
            raise ConfigurationError(f"Invalid profile '{name}': {e}")

    logger.debug(f"Loaded {len(profiles)} profiles from {profiles_path}")
    return profiles


def get_profile(name: str, path: Optional[str] = None) -> VerificationProfile:
    """Look up a single verification profile by name"""
    profiles = load_profiles(path)
    if name not in profiles:
        raise ConfigurationError(
            f"Unknown profile: {name} (available: {', '.join(sorted(profiles)) or 'none'})"
        )
    return profiles[name]
