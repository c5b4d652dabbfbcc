# --------------------------------------------------------------------
# models/verdicts.py
# Immutable result records emitted by the library and serialized by the
# report handler. Exact rationals are kept as Fraction; `to_dict` renders
# them through `format_rational`.
# --------------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

Rational = Union[int, Fraction]
UNRESOLVED = "unresolved"
BettiEntry = Union[Fraction, str]


def format_rational(x: Rational) -> Union[int, str]:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_entry(x: BettiEntry) -> Union[int, str]:
    return x if isinstance(x, str) else format_rational(x)


# ---- simplicial ------------------------------------------------------------

@dataclass(frozen=True)
class TopologyVerdict:
    kind: str                       # sphere | disk | closed_3_manifold | circle | arc | other
    dim: int
    certified: bool = True
    evidence: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    SPHERE = "sphere"
    DISK = "disk"
    CLOSED_3_MANIFOLD = "closed_3_manifold"
    CIRCLE = "circle"
    ARC = "arc"
    OTHER = "other"

    def is_sphere(self, n: int) -> bool:
        if n == 1:
            return self.kind == self.CIRCLE
        return self.kind == self.SPHERE and self.dim == n

    def is_disk(self, n: int) -> bool:
        if n == 1:
            return self.kind == self.ARC
        return self.kind == self.DISK and self.dim == n

    @property
    def is_closed_3_manifold(self) -> bool:
        return self.kind == self.CLOSED_3_MANIFOLD or (self.kind == self.SPHERE and self.dim == 3)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "dim": self.dim, "certified": self.certified,
                "evidence": dict(self.evidence)}


# ---- growth ----------------------------------------------------------------

@dataclass(frozen=True)
class RegionVerdict:
    """Position of q0 relative to the convergence region along the ray s*q0.

    `interval` isolates the smallest positive pole s*; it is None when the
    series has no positive pole (finite group)."""
    kind: str                       # interior | boundary | outside
    interval: Optional[Tuple[Fraction, Fraction]]
    exact: Optional[Fraction] = None
    minimal_polynomial: Tuple[Fraction, ...] = ()

    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"

    @property
    def in_closure(self) -> bool:
        return self.kind in (self.INTERIOR, self.BOUNDARY)

    @property
    def pole_approx(self) -> float:
        if self.interval is None:
            return float("inf")
        lo, hi = self.interval
        return float((lo + hi) / 2)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"verdict": self.kind}
        if self.interval is None:
            out["pole"] = "inf"
        else:
            out["pole_interval"] = [format_rational(self.interval[0]), format_rational(self.interval[1])]
            out["pole_approx"] = self.pole_approx
        if self.exact is not None:
            out["pole"] = format_rational(self.exact)
        if self.minimal_polynomial:
            out["minimal_polynomial"] = [format_rational(c) for c in self.minimal_polynomial]
        return out


# ---- weighted --------------------------------------------------------------

@dataclass(frozen=True)
class BettiReport:
    n: int
    regimes: Tuple[str, ...]
    betti: Tuple[BettiEntry, ...]
    chi_q: Fraction
    authorized_by: str
    trail: Tuple[str, ...] = ()

    @property
    def resolved(self) -> bool:
        return all(not isinstance(b, str) for b in self.betti)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "regimes": list(self.regimes),
            "betti": [format_entry(b) for b in self.betti],
            "chi_q": format_rational(self.chi_q),
            "authorized_by": self.authorized_by,
        }


@dataclass(frozen=True)
class TheoremRecord:
    tag: str
    applies: str                    # yes | no | conditional
    n: int = 0
    reason: str = ""
    witnesses: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)
    caveats: Tuple[str, ...] = ()

    YES = "yes"
    NO = "no"
    CONDITIONAL = "conditional"

    @property
    def usable(self) -> bool:
        return self.applies != self.NO

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"tag": self.tag, "applies": self.applies, "n": self.n,
                               "witnesses": dict(self.witnesses), "caveats": list(self.caveats)}
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class AndreevVerdict:
    geometry: str                   # H3 | R3 | H2xR | excluded_lanner | undetermined
    case: str                       # "", I, II, II-adjacent, III
    witness: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)
    reason: str = ""

    H3 = "H3"
    R3 = "R3"
    H2_X_R = "H2xR"
    EXCLUDED = "excluded_lanner"
    UNDETERMINED = "undetermined"

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"geometry": self.geometry, "case": self.case,
                               "witness": dict(self.witness)}
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class ApplicabilityReport:
    nerve: TopologyVerdict
    flag: bool
    records: Tuple[TheoremRecord, ...]
    andreev: Optional[AndreevVerdict] = None

    def record(self, tag: str) -> TheoremRecord:
        for r in self.records:
            if r.tag == tag:
                return r
        raise KeyError(tag)

    @property
    def applicable(self) -> List[TheoremRecord]:
        return [r for r in self.records if r.usable]

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "nerve": self.nerve.to_dict(),
            "flag": self.flag,
            "theorems": {r.tag: r.to_dict() for r in self.records},
        }
        if self.andreev is not None:
            out["andreev"] = self.andreev.to_dict()
        return out
