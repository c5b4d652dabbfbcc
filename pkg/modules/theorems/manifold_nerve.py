"""
theorems/manifold_nerve.py
--------------------------
Flag triangulations of closed 3-manifolds (n = 4).
"""

from __future__ import annotations

from models.verdicts import TheoremRecord
from modules.davis.ruins import pseudomanifold_check

from .base import BaseTheorem, NerveContext


class ManifoldNerveTheorem(BaseTheorem):
    tag = "theorem3"

    def evaluate(self, ctx: NerveContext) -> TheoremRecord:
        if not ctx.verdict.is_closed_3_manifold:
            return self.no("nerve is not a closed 3-manifold")
        if not ctx.flag:
            return self.no("nerve is not flag")
        return self.holds(4, {"flag": True, "pseudomanifold": pseudomanifold_check(ctx.nerve)})
