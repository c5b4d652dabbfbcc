"""
core/initialization.py
----------------------
Loads caps from a .env file and the COXWL2_* environment, validates them, and
merges them with command-line overrides into one RunConfig.
"""

from __future__ import annotations

import logging
import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from models.documents import RunConfig
from models.errors import ConfigError
from utils.config_manager import DEFAULTS, ConfigManager
from utils.config_validator import validate_config
from utils.logger import setup_logger

ENV_PREFIX = "COXWL2_"
LOGGED_PACKAGES = ("modules", "core")


def _env_int(key: str) -> Any:
    raw = os.getenv(ENV_PREFIX + key)
    if raw is None or raw.strip() == "":
        return DEFAULTS[key]
    try:
        return int(raw.strip().replace("_", ""))
    except ValueError:
        raise ConfigError(f"{ENV_PREFIX}{key} must be an integer, got {raw!r}", {"key": key}) from None


def load_configuration(env_path: str = "coxwl2.env") -> Dict[str, Any]:
    """
    Load caps from an .env-style file (missing file tolerated) and the
    environment, and return the validated config dict.
    """
    log = logging.getLogger(__name__)
    found = load_dotenv(dotenv_path=env_path)
    log.debug("env file %s %s", env_path, "loaded" if found else "not found")

    conf: Dict[str, Any] = {
        key: _env_int(key)
        for key in ("MAX_ORDER", "MAX_BALL", "PRECISION_BITS", "THREADS",
                    "MAX_GENERATORS", "MAX_FACES", "MAX_CIRCUIT_LENGTH")
    }
    conf["ISOLATION_TOLERANCE"] = os.getenv(ENV_PREFIX + "ISOLATION_TOLERANCE") or DEFAULTS["ISOLATION_TOLERANCE"]

    try:
        validate_config(conf)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc), {"config": {k: str(v) for k, v in conf.items()}}) from exc

    log.debug("caps: %s", conf)
    return conf


def initialize_run(
    config: Dict[str, Any],
    overrides: Optional[Dict[str, Any]] = None,
    logger: Optional[logging.Logger] = None,
) -> Dict[str, Any]:
    """
    Merge command-line overrides over the environment caps and build the
    RunConfig. Overrides with value None fall back to the environment.

    Returns {"logger", "config", "run"}.
    """
    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    manager = ConfigManager(config)

    fields: Dict[str, Any] = {
        "max_order": manager.get_max_order(),
        "max_ball": manager.get_max_ball(),
        "precision_bits": manager.get_precision_bits(),
        "threads": manager.get_threads(),
        "max_generators": manager.get_max_generators(),
        "max_faces": manager.get_max_faces(),
        "max_circuit_length": manager.get_max_circuit_length(),
        "isolation_tolerance": str(manager.get_isolation_tolerance()),
    }
    fields.update(overrides)

    if logger is None:
        level = "DEBUG" if fields.get("verbose") else os.getenv("COXWL2_LOG_LEVEL", "INFO")
        # library loggers live under these package names
        for name in LOGGED_PACKAGES:
            setup_logger(name, level=level)
        logger = setup_logger("coxwl2", level=level)

    try:
        run = RunConfig(**fields)
    except ValidationError as ve:
        logger.warning("⚠️ invalid run configuration: %s", ve)
        raise

    merged = ConfigManager({**config, **{k.upper(): v for k, v in fields.items()
                                         if k.upper() in DEFAULTS}})
    logger.debug("✅ run config: command=%s caps=%s", run.command, merged.caps())
    return {"logger": logger, "config": merged, "run": run}
