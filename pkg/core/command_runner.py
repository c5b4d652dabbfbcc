"""
core/command_runner.py
----------------------
One handler per CLI command. run(config) returns (exit code, document):
0 computed, 2 not applicable or unclassified, 1 error.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Tuple

from pydantic import ValidationError

from models.documents import RunConfig
from models.errors import NOT_APPLICABLE, Coxwl2Error, DimensionTooHigh, InputError, PreconditionFailed, SchemaError
from models.verdicts import TopologyVerdict, format_rational
from modules.applicability import authorizing_theorem, failure_reason, theorem_applicability
from modules.coxeter import (
    CoxeterMatrix,
    SphericalPoset,
    classify_subset,
    generator_classes,
    gram_matrix,
    lanner_census,
    spherical_subsets,
)
from modules.davis import build_ruin
from modules.growth import evaluate, format_series, full_growth_series, growth_rate, series_region, steinberg_sum
from modules.homology import smith_homology
from modules.rational import MultiRat
from modules.simplicial import SimplicialComplex, nerve
from modules.topology import recognize, separating_sphere_search
from modules.weighted import WeightedSystem, betti_vector

from .input_handler import load_complex, load_coxeter, load_weights
from .report_handler import error_document, success_document

logger = logging.getLogger(__name__)

Outcome = Tuple[Any, List[str]]


def _matrix(config: RunConfig) -> CoxeterMatrix:
    return load_coxeter(config.input, config.max_generators)


def _verdict(L: SimplicialComplex) -> TopologyVerdict:
    try:
        return recognize(L)
    except DimensionTooHigh as exc:
        return TopologyVerdict(TopologyVerdict.OTHER, L.dimension, True, {"checks": [exc.message]})


def _system(config: RunConfig, cm: CoxeterMatrix) -> WeightedSystem:
    return WeightedSystem.build(cm, config.max_order, config.threads, config.precision_bits,
                                max_faces=config.max_faces)


def _series(config: RunConfig, cm: CoxeterMatrix) -> Tuple[SphericalPoset, MultiRat, MultiRat]:
    poset = spherical_subsets(cm, config.threads, config.precision_bits)
    series = full_growth_series(cm, config.max_order, config.threads, config.precision_bits)
    steinberg = steinberg_sum(poset, max_order=config.max_order, precision_bits=config.precision_bits)
    return poset, series, steinberg


def config_tolerance(config: RunConfig) -> Fraction:
    return Fraction(config.isolation_tolerance)


# ---- handlers ----------------------------------------------------------------

def classify(config: RunConfig) -> Outcome:
    cm = _matrix(config)
    T = cm.subset(config.subset) if config.subset else frozenset(cm.generators)
    kind = classify_subset(cm, T, config.precision_bits)
    result: Dict[str, Any] = {"T": list(cm.ordered(T)), "type": kind.to_dict(),
                              "generator_classes": generator_classes(cm).to_dict()}
    if not config.subset:
        poset = spherical_subsets(cm, config.threads, config.precision_bits)
        result["spherical_subsets"] = [
            {"T": list(cm.ordered(S)), "type": poset.type_of(S).to_dict()} for S in poset.elements
        ]
        result["maximal"] = [list(cm.ordered(S)) for S in poset.maximal()]
    return result, [f"Gram signature certified at <= {config.precision_bits} bits"]


def nerve_command(config: RunConfig) -> Outcome:
    cm = _matrix(config)
    L = nerve(spherical_subsets(cm, config.threads, config.precision_bits), config.max_faces)
    verdict = _verdict(L)
    result: Dict[str, Any] = {
        "complex": L.to_dict(),
        "f_vector": list(L.f_vector),
        "flag": L.is_flag(),
        "verdict": verdict.to_dict(),
        "homology": [g.to_dict() for g in smith_homology(L)],
    }
    if verdict.is_sphere(2):
        sphere = separating_sphere_search(L, config.max_circuit_length)
        result["separating_sphere"] = sphere.to_dict() if sphere is not None else None
    return result, [f"nerve recognized as {verdict.kind} (dim {verdict.dim})"]


def growth(config: RunConfig) -> Outcome:
    cm = _matrix(config)
    poset, series, steinberg = _series(config, cm)
    result: Dict[str, Any] = {
        "variables": list(series.variables),
        "generator_classes": generator_classes(cm).to_dict(),
        "series": format_series(series),
        "steinberg": format_series(steinberg),
        "finite": frozenset(cm.generators) in poset,
    }
    lo, hi = growth_rate(cm, series, config_tolerance(config), config.max_order)
    result["growth_rate"] = [format_rational(lo), format_rational(hi)]
    trail = ["W(q) from the Steinberg sum" if not result["finite"] else "W(q) by enumeration"]
    if config.at is not None:
        q = load_weights(config.at, cm)
        result["at"] = {"q": q.to_dict(), "value": format_rational(evaluate(series, q))}
    return result, trail


def region(config: RunConfig) -> Outcome:
    cm = _matrix(config)
    _, series, _ = _series(config, cm)
    q = load_weights(config.weights, cm)
    verdict = series_region(series, q, config_tolerance(config))
    inverse = series_region(series, q.inverse(), config_tolerance(config))
    return ({"q": q.to_dict(), "region": verdict.to_dict(), "inverse_region": inverse.to_dict()},
            ["pole isolated exactly by Sturm sequences"])


def betti(config: RunConfig) -> Outcome:
    cm = _matrix(config)
    system = _system(config, cm)
    q = load_weights(config.weights, cm)
    report = betti_vector(cm, q, system)
    result = report.to_dict()
    result["q"] = q.to_dict()
    return result, list(report.trail)


def verify(config: RunConfig) -> Outcome:
    cm = _matrix(config)
    report = theorem_applicability(cm, config.threads, config.precision_bits, config.max_circuit_length,
                                   config.max_faces)
    try:
        record, n = authorizing_theorem(report)
    except PreconditionFailed as exc:
        raise PreconditionFailed(failure_reason(report), {**exc.details, "report": report.to_dict()}) from exc
    result = report.to_dict()
    result["authorized_by"] = record.tag
    result["n"] = n
    return result, [f"{r.tag}: {r.applies}" for r in report.records]


def census(config: RunConfig) -> Outcome:
    found = lanner_census(config.max_label, config.rank, config.threads, config.precision_bits)
    diagrams = []
    for cm in found:
        doc = cm.to_dict()
        doc["signature"] = list(gram_matrix(cm).signature(config.precision_bits))
        diagrams.append(doc)
    return ({"count": len(found), "rank": config.rank, "max_label": config.max_label, "diagrams": diagrams},
            [f"labels 2..{config.max_label}, one diagram per isomorphism class"])


def ruin(config: RunConfig) -> Outcome:
    cm = _matrix(config)
    built = build_ruin(cm, config.universe, config.subset or (), config.radius,
                       config.max_order, config.precision_bits)
    result = built.to_dict(homology=config.homology)
    result["partition_holds"] = built.partition_holds()
    result["complex"] = built.complex.to_dict()
    result["boundary_complex"] = built.boundary_complex.to_dict()
    trail = ["Omega = cells of type containing T and their faces"]
    if built.sigma.partial:
        trail.append(f"Sigma truncated at radius {config.radius}")
    return result, trail


def homology(config: RunConfig) -> Outcome:
    L = load_complex(config.input, config.max_faces)
    return ({"f_vector": list(L.f_vector), "euler_characteristic": L.euler_characteristic(),
             "homology": [g.to_dict() for g in smith_homology(L)], "verdict": _verdict(L).to_dict()},
            ["Smith normal form over Z"])


HANDLERS: Dict[str, Callable[[RunConfig], Outcome]] = {
    "classify": classify,
    "nerve": nerve_command,
    "growth": growth,
    "region": region,
    "betti": betti,
    "verify": verify,
    "census": census,
    "ruin": ruin,
    "homology": homology,
}


def run(config: RunConfig) -> Tuple[int, Dict[str, Any]]:
    command = config.command
    try:
        result, trail = HANDLERS[command](config)
    except NOT_APPLICABLE as exc:
        logger.warning("⚠️ %s: %s", exc.code, exc.message)
        document = error_document(command, exc)
        document["reason"] = exc.message
        return 2, document
    except Coxwl2Error as exc:
        logger.error("❌ %s: %s", exc.code, exc.message)
        return 1, error_document(command, exc)
    except ValidationError as ve:
        exc = SchemaError(str(ve))
        logger.error("❌ %s: %s", exc.code, exc.message)
        return 1, error_document(command, exc)
    except (OSError, ValueError) as err:
        exc = InputError(str(err))
        logger.error("❌ %s: %s", exc.code, exc.message)
        return 1, error_document(command, exc)
    logger.info("✅ %s done", command)
    return 0, success_document(command, result, trail)
