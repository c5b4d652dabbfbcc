"""
core/input_handler.py
---------------------
Reads the JSON documents named on the command line and turns them into
domain objects. IO and JSON problems become cli.InputError, shape problems
cli.SchemaError; value problems surface as the owning module's error.
"""
from __future__ import annotations

import json
import logging
from typing import Any, Dict, Optional

from pydantic import ValidationError

from models.documents import ComplexDocument, CoxeterDocument, WeightsDocument
from models.errors import InputError, SchemaError
from modules.coxeter import DEFAULT_MAX_GENERATORS, CoxeterMatrix, generator_classes, validate_matrix
from modules.simplicial import DEFAULT_MAX_FACES, SimplicialComplex
from modules.weights import WeightVector

logger = logging.getLogger(__name__)


def read_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}", {"path": path}) from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})",
                         {"path": path, "line": exc.lineno}) from exc


def _schema_error(path: str, ve: ValidationError) -> SchemaError:
    errors = [{"loc": [str(p) for p in e["loc"]], "msg": e["msg"]} for e in ve.errors()]
    logger.warning("⚠️ %s does not match the schema: %s", path, errors)
    return SchemaError(f"{path} does not match the expected document shape", {"path": path, "errors": errors})


def load_coxeter(path: str, max_generators: int = DEFAULT_MAX_GENERATORS) -> CoxeterMatrix:
    raw = read_json(path)
    try:
        doc = CoxeterDocument.model_validate(raw)
    except ValidationError as ve:
        raise _schema_error(path, ve) from ve
    cm = validate_matrix(doc.matrix, doc.generators, max_generators)
    logger.debug("loaded rank-%d Coxeter matrix from %s", cm.rank, path)
    return cm


def load_weights(path: Optional[str], cm: CoxeterMatrix) -> WeightVector:
    """Weights for cm; q = 1 when no document is given."""
    classes = generator_classes(cm)
    if path is None:
        logger.info("no weights document given, using q = 1")
        return WeightVector.uniform(classes, 1)
    raw = read_json(path)
    if not isinstance(raw, dict):
        raw = {"q": raw}
    try:
        doc = WeightsDocument.model_validate(raw)
    except ValidationError as ve:
        raise _schema_error(path, ve) from ve
    if doc.weights is not None:
        return WeightVector.from_generator_map(classes, doc.weights)
    if isinstance(doc.q, list):
        return WeightVector.from_values(classes, doc.q)
    return WeightVector.uniform(classes, doc.q)


def load_complex(path: str, max_faces: int = DEFAULT_MAX_FACES) -> SimplicialComplex:
    raw = read_json(path)
    try:
        doc = ComplexDocument.model_validate(raw)
    except ValidationError as ve:
        raise _schema_error(path, ve) from ve
    data: Dict[str, Any] = doc.model_dump()
    return SimplicialComplex.from_dict(data, max_faces)
