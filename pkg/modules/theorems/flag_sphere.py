"""
theorems/flag_sphere.py
-----------------------
Flag triangulations of S^3 (every link is full, so the full-link theorem
applies at every vertex).
"""

from __future__ import annotations

from models.verdicts import TheoremRecord

from .base import BaseTheorem, NerveContext
from .full_link import S3_CAVEAT


class FlagSphereTheorem(BaseTheorem):
    tag = "flag_s3"

    def evaluate(self, ctx: NerveContext) -> TheoremRecord:
        if not ctx.verdict.is_sphere(3):
            return self.no("nerve is not a 3-sphere")
        if not ctx.flag:
            return self.no("nerve is not flag")
        return self.holds(4, {"flag": True, "homology": ctx.verdict.evidence.get("homology")},
                          caveats=(S3_CAVEAT,))
