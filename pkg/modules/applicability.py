"""
modules/applicability.py
------------------------
Runs every vanishing theorem against the nerve of a Coxeter system and
picks the one that authorizes a weighted Betti computation.
"""
from __future__ import annotations

import logging
from typing import Tuple

from models.errors import DimensionTooHigh, PreconditionFailed
from models.verdicts import ApplicabilityReport, TheoremRecord, TopologyVerdict
from modules.coxeter import CoxeterMatrix, spherical_subsets
from modules.cyclotomic import DEFAULT_PRECISION_BITS
from modules.simplicial import DEFAULT_MAX_FACES, nerve
from modules.theorems import PRIORITY, THEOREMS, NerveContext
from modules.topology import DEFAULT_MAX_CIRCUIT_LENGTH, recognize

logger = logging.getLogger(__name__)


def nerve_context(cm: CoxeterMatrix, threads: int = 1,
                  precision_bits: int = DEFAULT_PRECISION_BITS,
                  max_circuit_length: int = DEFAULT_MAX_CIRCUIT_LENGTH,
                  max_faces: int = DEFAULT_MAX_FACES) -> NerveContext:
    poset = spherical_subsets(cm, threads, precision_bits)
    L = nerve(poset, max_faces)
    try:
        verdict = recognize(L)
    except DimensionTooHigh as exc:
        verdict = TopologyVerdict(TopologyVerdict.OTHER, L.dimension, True, {"checks": [exc.message]})
    return NerveContext(cm, poset, L, verdict, L.is_flag(), precision_bits, max_circuit_length)


def theorem_applicability(cm: CoxeterMatrix, threads: int = 1,
                          precision_bits: int = DEFAULT_PRECISION_BITS,
                          max_circuit_length: int = DEFAULT_MAX_CIRCUIT_LENGTH,
                          max_faces: int = DEFAULT_MAX_FACES) -> ApplicabilityReport:
    ctx = nerve_context(cm, threads, precision_bits, max_circuit_length, max_faces)
    records = tuple(theorem.evaluate(ctx) for theorem in THEOREMS)
    for record in records:
        logger.debug("%s: %s %s", record.tag, record.applies, record.reason)
    report = ApplicabilityReport(ctx.verdict, ctx.flag, records, ctx.andreev)
    logger.info("nerve %s (dim %d, flag=%s); applicable: %s", ctx.verdict.kind, ctx.verdict.dim, ctx.flag,
                [r.tag for r in report.applicable] or "none")
    return report


def failure_reason(report: ApplicabilityReport) -> str:
    """The reason shown when no theorem applies; a recognized 2-sphere nerve
    reports why the 2-sphere theorem failed."""
    if report.nerve.is_sphere(2):
        return report.record("theorem1").reason
    return "no theorem applies: " + "; ".join(f"{r.tag}: {r.reason}" for r in report.records)


def authorizing_theorem(report: ApplicabilityReport) -> Tuple[TheoremRecord, int]:
    for tag in PRIORITY:
        record = report.record(tag)
        if record.usable:
            return record, record.n
    raise PreconditionFailed(failure_reason(report),
                             {r.tag: r.reason for r in report.records})
