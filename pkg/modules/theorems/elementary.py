"""
theorems/elementary.py
----------------------
Nerves S^0 and S^1: Sigma_L is a line or a plane and the same
four-regime pattern holds, truncated to n = 1, 2.
"""

from __future__ import annotations

from models.verdicts import TheoremRecord

from .base import BaseTheorem, NerveContext


class ElementaryTheorem(BaseTheorem):
    tag = "elementary"

    def evaluate(self, ctx: NerveContext) -> TheoremRecord:
        if ctx.verdict.is_sphere(0):
            return self.holds(1, {"nerve": "S0"})
        if ctx.verdict.is_sphere(1):
            return self.holds(2, {"nerve": "circle", "length": len(ctx.nerve.vertices)})
        return self.no("nerve is neither S0 nor a circle")
