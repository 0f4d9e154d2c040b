import os
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, Optional, Tuple

import yaml
from dotenv import load_dotenv

from .errors import ValidationError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "config.yaml")

@dataclass(frozen=True)
class Guards:
    max_search_edges: int = 24
    max_free_edges: int = 20
    max_word_vertices: int = 8
    max_word_k: int = 3
    max_bruteforce_vertices: int = 12

@dataclass(frozen=True)
class VerifySettings:
    seed: int = 2024
    theorem2_n: Tuple[int, int] = (2, 8)
    remarks_n: Tuple[int, int] = (2, 8)
    prop1_words: int = 500
    invariance_pairs: int = 200
    rook_max: int = 6
    oracle_max_vertices: int = 5

@dataclass(frozen=True)
class Settings:
    guards: Guards = field(default_factory=Guards)
    verify: VerifySettings = field(default_factory=VerifySettings)
    workers: int = 1
    progress_every: int = 20000
    log_level: str = "INFO"
    log_file: str = "logs/wordrep.log"

def _section(raw: Dict[str, Any], name: str) -> Dict[str, Any]:
    value = raw.get(name) or {}
    if not isinstance(value, dict):
        raise ValidationError(f"Config section '{name}' must be a mapping")
    return value

def _pair(value, default: Tuple[int, int]) -> Tuple[int, int]:
    if value is None:
        return default
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ValidationError(f"Expected a [low, high] pair, got {value!r}")
    return int(value[0]), int(value[1])

def _truthy(value: Optional[str]) -> bool:
    return (value or "").strip().lower() in ("1", "true", "yes", "on")

def parse_settings(raw: Dict[str, Any]) -> Settings:
    """Build Settings from a parsed YAML mapping."""
    guards = _section(raw, "guards")
    search = _section(raw, "search")
    verify = _section(raw, "verify")
    logging_cfg = _section(raw, "logging")

    defaults = VerifySettings()
    return Settings(
        guards=Guards(**{k: int(v) for k, v in guards.items() if k in Guards.__dataclass_fields__}),
        verify=VerifySettings(
            seed=int(verify.get("seed", defaults.seed)),
            theorem2_n=_pair(verify.get("theorem2_n"), defaults.theorem2_n),
            remarks_n=_pair(verify.get("remarks_n"), defaults.remarks_n),
            prop1_words=int(verify.get("prop1_words", defaults.prop1_words)),
            invariance_pairs=int(verify.get("invariance_pairs", defaults.invariance_pairs)),
            rook_max=int(verify.get("rook_max", defaults.rook_max)),
            oracle_max_vertices=int(verify.get("oracle_max_vertices", defaults.oracle_max_vertices)),
        ),
        workers=int(search.get("workers", 1)),
        progress_every=int(search.get("progress_every", 20000)),
        log_level=str(logging_cfg.get("level", "INFO")).upper(),
        log_file=str(logging_cfg.get("file", "logs/wordrep.log")),
    )

@lru_cache(maxsize=4)
def load_settings(path: Optional[str] = None) -> Settings:
    """
    Load settings from config.yaml and the environment.

    Args:
        path: YAML file to read; defaults to WORDREP_CONFIG or the repository config.yaml

    Returns:
        Frozen Settings, cached per path
    """
    load_dotenv()
    path = path or os.getenv("WORDREP_CONFIG") or DEFAULT_CONFIG_PATH
    raw: Dict[str, Any] = {}
    if os.path.exists(path):
        try:
            with open(path, "r") as f:
                raw = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ValidationError(f"Invalid config file {path}: {str(e)}")
        logger.debug(f"Loaded settings from {path}")
    else:
        logger.info(f"No config file at {path}, using defaults")
    return parse_settings(raw)

def guard_override_enabled() -> bool:
    """True when WORDREP_GUARD_OVERRIDE lifts the scale guards."""
    load_dotenv()
    return _truthy(os.getenv("WORDREP_GUARD_OVERRIDE"))
