"""
theorems/base.py
----------------
Common interface for the vanishing theorems.

A theorem receives the nerve context of a Coxeter system and decides
whether its hypotheses hold, returning a TheoremRecord.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Optional, Tuple

from models.verdicts import AndreevVerdict, TheoremRecord, TopologyVerdict
from modules.andreev import andreev_for_nerve
from modules.coxeter import CoxeterMatrix, SphericalPoset
from modules.simplicial import SimplicialComplex


@dataclass
class NerveContext:
    cm: CoxeterMatrix
    poset: SphericalPoset
    nerve: SimplicialComplex
    verdict: TopologyVerdict
    flag: bool
    precision_bits: int
    max_circuit_length: int

    @cached_property
    def andreev(self) -> Optional[AndreevVerdict]:
        return andreev_for_nerve(self.cm, self.poset, self.nerve, self.verdict,
                                 self.max_circuit_length, self.precision_bits)


class BaseTheorem(ABC):
    """Abstract theorem with a single entry point."""

    tag: str = ""

    @abstractmethod
    def evaluate(self, ctx: NerveContext) -> TheoremRecord:
        """
        Check the hypotheses against the nerve and return a record.

        Record fields
        -------------
        applies    : "yes", "no" or "conditional"
        n          : dimension of Sigma_L the theorem speaks about
        reason     : first failed hypothesis when applies == "no"
        witnesses  : JSON-ready evidence for the hypotheses
        """
        raise NotImplementedError

    def no(self, reason: str, witnesses: Optional[Dict[str, Any]] = None) -> TheoremRecord:
        return TheoremRecord(self.tag, TheoremRecord.NO, reason=reason, witnesses=witnesses or {})

    def holds(self, n: int, witnesses: Dict[str, Any], caveats: Tuple[str, ...] = ()) -> TheoremRecord:
        applies = TheoremRecord.CONDITIONAL if caveats else TheoremRecord.YES
        return TheoremRecord(self.tag, applies, n=n, witnesses=witnesses, caveats=caveats)
