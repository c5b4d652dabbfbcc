"""
theorems/full_link.py
---------------------
Nerve a 3-sphere with a vertex whose link is a full subcomplex and is not
dual to a hyperbolic 3-simplex: the top half of the weighted L2-cohomology
vanishes for q <= 1 (n = 4).
"""

from __future__ import annotations

import logging

from models.verdicts import TheoremRecord
from modules.andreev import is_lanner_dual
from modules.simplicial import star_decomposition

from .base import BaseTheorem, NerveContext

logger = logging.getLogger(__name__)

S3_CAVEAT = "3-sphere recognized by necessary conditions only"


class FullLinkTheorem(BaseTheorem):
    tag = "theorem2"

    def evaluate(self, ctx: NerveContext) -> TheoremRecord:
        if not ctx.verdict.is_sphere(3):
            return self.no("nerve is not a 3-sphere")

        for v in ctx.nerve.vertices:
            decomposition = star_decomposition(ctx.nerve, v)
            if not decomposition.link_is_full:
                continue
            if is_lanner_dual(ctx.cm, decomposition.link, ctx.precision_bits):
                logger.debug("link of %s is dual to a hyperbolic 3-simplex", v)
                continue
            return self.holds(4, {"vertex": v, "star_decomposition": decomposition.to_dict()},
                              caveats=(S3_CAVEAT,))
        return self.no("no vertex link is full and not dual to a hyperbolic 3-simplex")
