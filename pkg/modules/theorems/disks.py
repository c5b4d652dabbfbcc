"""
theorems/disks.py
-----------------
Nerve a triangulated n-1 disk, n = 3 or 4: weighted L2-cohomology vanishes
above n/2 for q <= 1.
"""

from __future__ import annotations

from models.verdicts import TheoremRecord

from .base import BaseTheorem, NerveContext


class DiskTheorem(BaseTheorem):
    tag = "disk"

    def evaluate(self, ctx: NerveContext) -> TheoremRecord:
        if ctx.verdict.is_disk(2):
            return self.holds(3, {"nerve": "disk", "dim": 2})
        if ctx.verdict.is_disk(3):
            return self.holds(4, {"nerve": "disk", "dim": 3},
                              caveats=("3-disk recognized by necessary conditions only",))
        return self.no("nerve is not a 2- or 3-disk")
