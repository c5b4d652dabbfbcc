"""
modules/weighted.py
-------------------
Weighted L2-Betti vectors of Sigma_L.

The four regimes of the 2-sphere corollary (and its S^0 / S^1 analogues)
say in which single degree the cohomology can live; the value there is pinned
by the weighted Euler characteristic chi_q = 1/W(q). The n = 4 theorems and
the disk theorem only give vanishing, so their other entries stay
"unresolved".
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from models.errors import (
    InternalDisagreement,
    PreconditionFailed,
    RegimeConflict,
    SignViolation,
    Unclassified,
    UnresolvedInput,
)
from models.verdicts import UNRESOLVED, ApplicabilityReport, BettiEntry, BettiReport, format_rational
from modules.applicability import authorizing_theorem, theorem_applicability
from modules.coxeter import CoxeterMatrix, SphericalPoset, spherical_subsets
from modules.cyclotomic import DEFAULT_PRECISION_BITS
from modules.growth import (
    DEFAULT_MAX_ORDER,
    evaluate,
    full_growth_series,
    series_region,
    steinberg_sum,
)
from modules.rational import MultiRat
from modules.simplicial import DEFAULT_MAX_FACES
from modules.weights import WeightVector

logger = logging.getLogger(__name__)

REGIME_TIERS = ("theorem1", "elementary")
TOP_VANISHING = ("theorem2", "flag_s3")


@dataclass
class WeightedSystem:
    """A Coxeter system with its growth data and theorem report, computed once."""
    cm: CoxeterMatrix
    poset: SphericalPoset
    series: MultiRat
    steinberg: MultiRat
    report: ApplicabilityReport

    @classmethod
    def build(cls, cm: CoxeterMatrix, max_order: int = DEFAULT_MAX_ORDER, threads: int = 1,
              precision_bits: int = DEFAULT_PRECISION_BITS,
              report: Optional[ApplicabilityReport] = None,
              max_faces: int = DEFAULT_MAX_FACES) -> "WeightedSystem":
        poset = spherical_subsets(cm, threads, precision_bits)
        series = full_growth_series(cm, max_order, threads, precision_bits)
        steinberg = steinberg_sum(poset, max_order=max_order, precision_bits=precision_bits)
        if report is None:
            report = theorem_applicability(cm, threads, precision_bits, max_faces=max_faces)
        return cls(cm, poset, series, steinberg, report)


def _system(cm: CoxeterMatrix, system: Optional[WeightedSystem]) -> WeightedSystem:
    return system if system is not None else WeightedSystem.build(cm)


# ---------------------------------------------------------------------------
# Euler characteristic and regimes
# ---------------------------------------------------------------------------

def weighted_euler_characteristic(cm: CoxeterMatrix, q: WeightVector,
                                  system: Optional[WeightedSystem] = None) -> Fraction:
    """chi_q as the Steinberg sum at 1/q, checked against 1/W(q)."""
    system = _system(cm, system)
    chi = evaluate(system.steinberg, q.inverse())
    direct = evaluate(system.series.reciprocal(), q)
    if chi != direct:
        raise InternalDisagreement("Steinberg sum at 1/q disagrees with 1/W(q)",
                                   {"steinberg": format_rational(chi), "reciprocal": format_rational(direct)})
    return chi


def regimes_for(n: int, q: WeightVector, series: MultiRat) -> Tuple[str, ...]:
    at_q = series_region(series, q)
    at_inverse = series_region(series, q.inverse())
    dims = set()
    if at_q.in_closure:
        dims.add(0)
    if at_q.kind == at_q.OUTSIDE and q.leq_one:
        dims.add(n // 2)
    if at_inverse.kind == at_inverse.OUTSIDE and q.geq_one:
        dims.add((n + 1) // 2)
    if at_inverse.in_closure:
        dims.add(n)
    return tuple(f"dim{k}" for k in sorted(dims))


def classify_regime(cm: CoxeterMatrix, q: WeightVector,
                    system: Optional[WeightedSystem] = None) -> Tuple[str, ...]:
    system = _system(cm, system)
    record, n = authorizing_theorem(system.report)
    if record.tag not in REGIME_TIERS:
        raise PreconditionFailed(f"{record.tag} gives vanishing only, no regime classification",
                                 {"authorized_by": record.tag})
    regimes = regimes_for(n, q, system.series)
    if not regimes:
        raise Unclassified("q lies in none of the four regimes", {"q": q.to_dict()})
    logger.debug("regimes at %s: %s", q.to_dict(), regimes)
    return regimes


# ---------------------------------------------------------------------------
# Betti vectors
# ---------------------------------------------------------------------------

def _concentrated(n: int, regimes: Tuple[str, ...], chi: Fraction) -> List[BettiEntry]:
    betti: List[BettiEntry] = [Fraction(0)] * (n + 1)
    if len(regimes) == 1:
        k = int(regimes[0][3:])
        value = (-1) ** k * chi
        if value < 0:
            raise SignViolation(f"(-1)^{k} chi_q = {value} is negative",
                                {"k": k, "chi_q": format_rational(chi)})
        betti[k] = value
    elif chi != 0:
        raise RegimeConflict(f"regimes {list(regimes)} overlap but chi_q = {chi}",
                             {"regimes": list(regimes), "chi_q": format_rational(chi)})
    return betti


def _vanishing(n: int, tag: str, q: WeightVector) -> List[BettiEntry]:
    betti: List[BettiEntry] = [UNRESOLVED] * (n + 1)
    if q.leq_one:
        for k in range(n + 1):
            if 2 * k > n:
                betti[k] = Fraction(0)
    if tag in TOP_VANISHING:
        betti[n] = Fraction(0)
    if all(b == UNRESOLVED for b in betti):
        raise Unclassified(f"{tag} says nothing at q = {q.to_dict()}", {"authorized_by": tag})
    return betti


def betti_vector(cm: CoxeterMatrix, q: WeightVector,
                 system: Optional[WeightedSystem] = None) -> BettiReport:
    system = _system(cm, system)
    record, n = authorizing_theorem(system.report)
    chi = weighted_euler_characteristic(cm, q, system)
    trail = [f"nerve: {system.report.nerve.kind} (dim {system.report.nerve.dim})",
             f"authorized_by: {record.tag} ({record.applies})",
             "chi_q = 1/W(q) = Steinberg sum at 1/q"]

    if record.tag in REGIME_TIERS:
        regimes = regimes_for(n, q, system.series)
        if not regimes:
            raise Unclassified("q lies in none of the four regimes", {"q": q.to_dict()})
        betti = _concentrated(n, regimes, chi)
        trail.append(f"regimes: {', '.join(regimes)}")
    else:
        regimes = ()
        betti = _vanishing(n, record.tag, q)
        trail.append("vanishing only; other degrees unresolved")
    trail.extend(f"caveat: {c}" for c in record.caveats)
    return BettiReport(n, regimes, tuple(betti), chi, record.tag, tuple(trail))


# ---------------------------------------------------------------------------
# Duality and products
# ---------------------------------------------------------------------------

def poincare_dual_check(cm: CoxeterMatrix, q: WeightVector,
                        system: Optional[WeightedSystem] = None) -> bool:
    system = _system(cm, system)
    forward = betti_vector(cm, q, system)
    backward = betti_vector(cm, q.inverse(), system)
    n = forward.n
    mirrored = tuple(sorted(f"dim{n - int(r[3:])}" for r in forward.regimes))
    if mirrored != tuple(sorted(backward.regimes)):
        return False
    for k in range(n + 1):
        a, b = forward.betti[k], backward.betti[n - k]
        if isinstance(a, str) or isinstance(b, str):
            continue
        if a != b:
            return False
    return True


def kunneth(a: BettiReport, b: BettiReport) -> BettiReport:
    """Betti vector of a product: degree-wise convolution, chi multiplies."""
    if not (a.resolved and b.resolved):
        raise UnresolvedInput("Kunneth needs fully resolved Betti vectors",
                              {"left": a.authorized_by, "right": b.authorized_by})
    n = a.n + b.n
    betti = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a.betti):
        for j, y in enumerate(b.betti):
            betti[i + j] += Fraction(x) * Fraction(y)
    regimes = tuple(sorted({f"dim{int(r[3:]) + int(s[3:])}" for r in a.regimes for s in b.regimes},
                           key=lambda r: int(r[3:])))
    return BettiReport(n, regimes, tuple(betti), a.chi_q * b.chi_q,
                       f"kunneth({a.authorized_by}, {b.authorized_by})",
                       a.trail + b.trail + ("kunneth product",))
