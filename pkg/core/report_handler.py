"""
core/report_handler.py
----------------------
Envelope assembly and output. Every document carries the schema version and
the command; successes add "result" and "trail", failures add "error".
Dumps are sort_keys=True so identical inputs give identical bytes.
"""
from __future__ import annotations

import json
import logging
import math
import sys
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional

from models.errors import Coxwl2Error, InputError
from models.verdicts import format_rational

SCHEMA = "coxwl2/1"

logger = logging.getLogger(__name__)


def jsonable(value: Any) -> Any:
    """Exact rationals as ints or "p/q", sets as sorted lists, records via to_dict()."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        return "inf" if math.isinf(value) else value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonable(v) for v in value), key=lambda v: (str(type(v)), str(v)))
    if hasattr(value, "to_dict"):
        return jsonable(value.to_dict())
    return str(value)


def success_document(command: str, result: Any, trail: Iterable[str] = ()) -> Dict[str, Any]:
    return {"schema": SCHEMA, "command": command, "result": jsonable(result), "trail": list(trail)}


def error_document(command: str, error: Coxwl2Error) -> Dict[str, Any]:
    return {"schema": SCHEMA, "command": command, "error": jsonable(error.to_dict())}


def dumps(document: Dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def write_document(document: Dict[str, Any], output: Optional[str] = None) -> None:
    text = dumps(document)
    if output is None:
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {output}: {exc.strerror or exc}", {"path": output}) from exc
    logger.debug("wrote %s", output)
