"""
modules/cyclotomic.py
---------------------
Exact arithmetic in the cyclotomic integers Z[zeta], zeta = exp(i*pi/N).

Every number this package needs from a Coxeter matrix is an integer
combination of 2cos(pi/m) for the finite labels m, and all of those live in
Z[zeta] with N = lcm of the labels. Elements are integer coefficient tuples
reduced modulo the cyclotomic polynomial Phi_{2N}, so equality is exact
tuple equality. Signs of (real) elements are certified numerically: a double
evaluation with a rigorous error bound first, then mpmath at doubling
precision up to a ceiling.
"""
from __future__ import annotations

import logging
import math
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

import mpmath
import numpy as np
import sympy

from models.errors import PrecisionFailure

logger = logging.getLogger(__name__)

Element = Tuple[int, ...]

DEFAULT_PRECISION_BITS = 1024
_FLOAT_EPS = 2.0 ** -52


class CyclotomicRing:
    """Z[zeta] for zeta a primitive 2N-th root of unity."""

    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        self.conductor = conductor
        x = sympy.Symbol("x")
        phi = sympy.Poly(sympy.cyclotomic_poly(2 * conductor, x), x)
        # low to high, monic
        self._modulus: List[int] = [int(c) for c in reversed(phi.all_coeffs())]
        self.degree = len(self._modulus) - 1
        self._powers: List[Element] = [self.from_int(1)]
        for _ in range(2 * conductor - 1):
            self._powers.append(self._times_x(self._powers[-1]))
        self._reduction = [self.zeta_power(k) for k in range(2 * self.degree - 1)]
        self._cos = np.array([math.cos(j * math.pi / conductor) for j in range(self.degree)])

    def __repr__(self) -> str:
        return f"CyclotomicRing(conductor={self.conductor}, degree={self.degree})"

    # ---- construction ------------------------------------------------------

    def zero(self) -> Element:
        return (0,) * self.degree

    def one(self) -> Element:
        return self.from_int(1)

    def from_int(self, value: int) -> Element:
        return (int(value),) + (0,) * (self.degree - 1)

    def _times_x(self, a: Element) -> Element:
        top = a[-1]
        shifted = (0,) + a[:-1]
        if not top:
            return shifted
        return tuple(shifted[i] - top * self._modulus[i] for i in range(self.degree))

    def zeta_power(self, k: int) -> Element:
        return self._powers[k % (2 * self.conductor)]

    def two_cos(self, label: float) -> Element:
        """2cos(pi/m); label infinity gives 2."""
        if label == math.inf:
            return self.from_int(2)
        m = int(label)
        if m == 2:
            return self.zero()
        if self.conductor % m:
            raise ValueError(f"label {m} does not divide conductor {self.conductor}")
        j = self.conductor // m
        return self.add(self.zeta_power(j), self.zeta_power(2 * self.conductor - j))

    # ---- arithmetic --------------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: Element, b: Element) -> Element:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        return tuple(-x for x in a)

    def mul(self, a: Element, b: Element) -> Element:
        d = self.degree
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                red = self._reduction[k]
                for i in range(d):
                    out[i] += c * red[i]
        return tuple(out)

    def total(self, elements: Iterable[Element]) -> Element:
        acc = self.zero()
        for e in elements:
            acc = self.add(acc, e)
        return acc

    def multiplication_matrix(self, c: Element) -> np.ndarray:
        """Integer matrix M with M @ a == c * a in coefficient coordinates."""
        d = self.degree
        cols = [self.mul(c, tuple(1 if i == j else 0 for i in range(d))) for j in range(d)]
        return np.array(cols, dtype=np.int64).T

    # ---- real embedding ----------------------------------------------------

    @property
    def cosines(self) -> np.ndarray:
        return self._cos

    def to_float(self, a: Sequence[int]) -> float:
        return float(np.dot(self._cos, np.asarray(a, dtype=float)))

    def float_error_bound(self, a: Sequence[int]) -> float:
        return 4.0 * (self.degree + 2) * _FLOAT_EPS * float(sum(abs(int(x)) for x in a))

    def sign(self, a: Sequence[int], max_bits: int = DEFAULT_PRECISION_BITS) -> int:
        """Certified sign of a real element."""
        if not any(a):
            return 0
        value = self.to_float(a)
        if abs(value) > self.float_error_bound(a):
            return 1 if value > 0 else -1
        return self._sign_high_precision(a, max_bits)

    def _sign_high_precision(self, a: Sequence[int], max_bits: int) -> int:
        magnitude = sum(abs(int(x)) for x in a)
        bits = 128
        while bits <= max_bits:
            with mpmath.workprec(bits):
                step = mpmath.pi / self.conductor
                value = mpmath.mpf(0)
                for j, aj in enumerate(a):
                    if aj:
                        value += int(aj) * mpmath.cos(j * step)
                bound = mpmath.mpf(magnitude) * (self.degree + 2) * mpmath.ldexp(1, 8 - bits)
                if abs(value) > bound:
                    logger.debug("sign certified at %d bits", bits)
                    return 1 if value > 0 else -1
            bits *= 2
        raise PrecisionFailure(
            "cannot certify the sign of a cyclotomic element",
            {"conductor": self.conductor, "max_bits": max_bits},
        )


def conductor_for(labels: Iterable[float]) -> int:
    finite = [int(m) for m in labels if m != math.inf and int(m) >= 3]
    return math.lcm(*finite) if finite else 1


@lru_cache(maxsize=None)
def cyclotomic_ring(conductor: int) -> CyclotomicRing:
    return CyclotomicRing(conductor)


def charpoly(ring: CyclotomicRing, matrix: Sequence[Sequence[Element]]) -> List[Element]:
    """Division-free characteristic polynomial det(xI - M) by Berkowitz.

    Returns [1, c1, ..., cn] with det(xI - M) = x^n + c1 x^(n-1) + ... + cn.
    """
    n = len(matrix)
    if n == 0:
        return [ring.one()]
    if n == 1:
        return [ring.one(), ring.neg(matrix[0][0])]

    a = matrix[0][0]
    row = list(matrix[0][1:])
    col = [r[0] for r in matrix[1:]]
    sub = [list(r[1:]) for r in matrix[1:]]

    vectors = [col]
    for _ in range(n - 2):
        prev = vectors[-1]
        vectors.append([ring.total(ring.mul(sub[i][k], prev[k]) for k in range(n - 1))
                        for i in range(n - 1)])
    toeplitz = [ring.one(), ring.neg(a)]
    toeplitz += [ring.neg(ring.total(ring.mul(row[k], v[k]) for k in range(n - 1))) for v in vectors]

    tail = charpoly(ring, sub)
    result: List[Element] = []
    for i in range(n + 1):
        acc = ring.zero()
        for j in range(min(i, n - 1) + 1):
            acc = ring.add(acc, ring.mul(toeplitz[i - j], tail[j]))
        result.append(acc)
    return result


def descartes_signature(signs: Sequence[int]) -> Tuple[int, int, int]:
    """(n_plus, n_zero, n_minus) of a symmetric matrix from the signs of its
    characteristic polynomial coefficients [c0, ..., cn] (all roots real)."""
    n = len(signs) - 1
    nonzero = [s for s in signs if s]
    n_plus = sum(1 for x, y in zip(nonzero, nonzero[1:]) if x != y)
    last = max(k for k, s in enumerate(signs) if s)
    n_zero = n - last
    return n_plus, n_zero, n - n_plus - n_zero

