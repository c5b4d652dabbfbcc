"""
theorems/sphere_nerve.py
------------------------
Nerve a triangulated 2-sphere that is not dual to a hyperbolic 3-simplex:
weighted L2-cohomology of Sigma_L concentrates as the four-regime
corollary describes (n = 3).
"""

from __future__ import annotations

from models.verdicts import TheoremRecord
from modules.andreev import LANNER_DUAL_REASON
from modules.topology import separating_sphere_search

from .base import BaseTheorem, NerveContext


class SphereNerveTheorem(BaseTheorem):
    tag = "theorem1"

    def evaluate(self, ctx: NerveContext) -> TheoremRecord:
        if not ctx.verdict.is_sphere(2):
            return self.no("nerve is not a 2-sphere")

        andreev = ctx.andreev
        assert andreev is not None
        if andreev.reason == LANNER_DUAL_REASON:
            return self.no(LANNER_DUAL_REASON, {"andreev": andreev.to_dict()})

        separating = separating_sphere_search(ctx.nerve, ctx.max_circuit_length)
        return self.holds(3, {
            "andreev": andreev.to_dict(),
            "separating_sphere": separating.to_dict() if separating else None,
        })
