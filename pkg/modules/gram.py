"""
modules/gram.py
---------------
The cosine (Gram) matrix B[s][t] = -cos(pi/m_st) of a Coxeter matrix and
its signature.

Entries are stored doubled (2B has algebraic-integer entries 2, -2cos(pi/m))
in the cyclotomic ring of the labels involved; doubling keeps the signature.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from modules.cyclotomic import (
    DEFAULT_PRECISION_BITS,
    CyclotomicRing,
    Element,
    charpoly,
    conductor_for,
    cyclotomic_ring,
    descartes_signature,
)

logger = logging.getLogger(__name__)

Labels = Tuple[Tuple[float, ...], ...]
Signature = Tuple[int, int, int]


@dataclass(frozen=True)
class GramMatrix:
    generators: Tuple[str, ...]
    ring: CyclotomicRing
    doubled: Tuple[Tuple[Element, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    def to_float(self) -> np.ndarray:
        """The cosine matrix B itself, as doubles (for display only)."""
        return np.array([[self.ring.to_float(e) / 2.0 for e in row] for row in self.doubled])

    def signature(self, max_bits: int = DEFAULT_PRECISION_BITS) -> Signature:
        """(n_plus, n_zero, n_minus), certified."""
        coefficients = charpoly(self.ring, self.doubled)
        signs = [self.ring.sign(c, max_bits) for c in coefficients]
        return descartes_signature(signs)

    def determinant_sign(self, max_bits: int = DEFAULT_PRECISION_BITS) -> int:
        coefficients = charpoly(self.ring, self.doubled)
        # det(2B) = (-1)^n * c_n
        sign = self.ring.sign(coefficients[-1], max_bits)
        return sign if self.rank % 2 == 0 else -sign


def gram_from_labels(generators: Sequence[str], labels: Labels) -> GramMatrix:
    ring = cyclotomic_ring(conductor_for(m for row in labels for m in row if m != 1))
    two = ring.from_int(2)
    doubled = tuple(
        tuple(two if i == j else ring.neg(ring.two_cos(labels[i][j])) for j in range(len(labels)))
        for i in range(len(labels))
    )
    return GramMatrix(tuple(generators), ring, doubled)


@lru_cache(maxsize=None)
def label_signature(labels: Labels, max_bits: int = DEFAULT_PRECISION_BITS) -> Signature:
    """Signature of the Gram form of a label matrix; cached on the labels alone."""
    names = tuple(f"g{i}" for i in range(len(labels)))
    signature = gram_from_labels(names, labels).signature(max_bits)
    logger.debug("signature %s for labels %s", signature, labels)
    return signature
