import os
import dotenv
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, Any, Optional

DEFAULT_DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "towers"


@dataclass(frozen=True)
class OrderSettings:
    """Typed view of the settings the order computations read"""
    magnus_start_degree: int = 2
    magnus_max_degree: int = 64
    magnus_cache: bool = False
    magnus_cache_size: int = 4096
    reduced_max_rank: int = 10


@dataclass(frozen=True)
class ProptestSettings:
    """Defaults for the property-suite runner"""
    seed: int = 0
    iterations: int = 1000
    max_length: int = 6


@dataclass
class ReportRow:
    """One finding in a validation report"""
    check: str
    source: str
    target: str
    detail: str


def _int_setting(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"Setting {name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ValueError(f"Setting {name} must be >= {minimum}, got {value}")
    return value


def _bool_setting(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


# Load environment variables
def load_config() -> Dict[str, Any]:
    """Load configuration from .env file and the environment"""
    dotenv.load_dotenv()

    config = {
        # Magnus ordering
        "MAGNUS_START_DEGREE": _int_setting("MAGNUS_START_DEGREE", 2, minimum=1),
        "MAGNUS_MAX_DEGREE": _int_setting("MAGNUS_MAX_DEGREE", 64, minimum=1),
        "MAGNUS_CACHE": _bool_setting("MAGNUS_CACHE", False),
        "MAGNUS_CACHE_SIZE": _int_setting("MAGNUS_CACHE_SIZE", 4096, minimum=1),

        # Reduced Magnus ordering
        "REDUCED_MAX_RANK": _int_setting("REDUCED_MAX_RANK", 10, minimum=1),

        # Property suites
        "PROPTEST_SEED": _int_setting("PROPTEST_SEED", 0),
        "PROPTEST_ITERATIONS": _int_setting("PROPTEST_ITERATIONS", 1000, minimum=1),
        "PROPTEST_MAX_LENGTH": _int_setting("PROPTEST_MAX_LENGTH", 6, minimum=1),

        # Application Configuration
        "LOG_LEVEL": os.getenv("LOG_LEVEL", "INFO"),
        "PRESET_DATA_DIR": os.getenv("PRESET_DATA_DIR", str(DEFAULT_DATA_DIR)),
    }

    return config


def order_settings(config: Optional[Dict[str, Any]] = None) -> OrderSettings:
    config = config if config is not None else load_config()
    return OrderSettings(
        magnus_start_degree=config["MAGNUS_START_DEGREE"],
        magnus_max_degree=config["MAGNUS_MAX_DEGREE"],
        magnus_cache=config["MAGNUS_CACHE"],
        magnus_cache_size=config["MAGNUS_CACHE_SIZE"],
        reduced_max_rank=config["REDUCED_MAX_RANK"],
    )


def proptest_settings(config: Optional[Dict[str, Any]] = None) -> ProptestSettings:
    config = config if config is not None else load_config()
    return ProptestSettings(
        seed=config["PROPTEST_SEED"],
        iterations=config["PROPTEST_ITERATIONS"],
        max_length=config["PROPTEST_MAX_LENGTH"],
    )


@lru_cache(maxsize=1)
def get_settings() -> OrderSettings:
    """Process-wide order settings, read once"""
    return order_settings()
