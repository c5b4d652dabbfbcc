"""
modules/roots.py
----------------
Exact isolation of the smallest positive real root of a univariate rational
polynomial: factor over QQ, read rational roots off the linear factors, and
bisect the others with Sturm sequences.

An isolating interval is half-open, (lo, hi], and always contains exactly
one root of its (irreducible) polynomial.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from sympy import QQ, Poly, Rational, Symbol

from models.errors import PoleAtZero

logger = logging.getLogger(__name__)

S = Symbol("s")
DEFAULT_TOLERANCE = Fraction(1, 10 ** 12)


def to_poly(ascending: Sequence[Fraction]) -> Poly:
    coefficients = [Rational(c.numerator, c.denominator) for c in reversed(list(ascending))] or [0]
    return Poly(coefficients, S, domain=QQ)


def _fraction(x: Rational) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def sturm_sequence(p: Poly) -> List[Poly]:
    return p.sturm()


def sign_changes(sequence: Sequence[Poly], x: Fraction) -> int:
    point = Rational(x.numerator, x.denominator)
    signs = [bool(v > 0) for v in (q.eval(point) for q in sequence) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(sequence: Sequence[Poly], a: Fraction, b: Fraction) -> int:
    """Distinct real roots in (a, b]."""
    return sign_changes(sequence, a) - sign_changes(sequence, b)


def cauchy_bound(p: Poly) -> Fraction:
    coefficients = [_fraction(c) for c in p.all_coeffs()]
    lead = abs(coefficients[0])
    return 1 + max((abs(c) / lead for c in coefficients[1:]), default=Fraction(0))


@dataclass(frozen=True)
class IsolatedRoot:
    poly: Poly                      # irreducible over QQ
    lo: Fraction
    hi: Fraction

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def _sequence(self) -> List[Poly]:
        return sturm_sequence(self.poly)

    def bisect(self) -> "IsolatedRoot":
        if self.is_exact:
            return self
        mid = (self.lo + self.hi) / 2
        if count_roots(self._sequence(), self.lo, mid) == 1:
            return IsolatedRoot(self.poly, self.lo, mid)
        return IsolatedRoot(self.poly, mid, self.hi)

    def refined(self, tolerance: Fraction) -> "IsolatedRoot":
        root = self
        while root.width >= tolerance:
            root = root.bisect()
        return root

    def compare(self, x: Fraction) -> int:
        """Sign of (root - x), decided exactly."""
        if self.is_exact:
            return (self.lo > x) - (self.lo < x)
        if x >= self.hi:
            # irreducible of degree >= 2: no rational root, so root != hi
            return -1
        if x <= self.lo:
            return 1
        return -1 if count_roots(self._sequence(), self.lo, x) == 1 else 1

    def __lt__(self, other: "IsolatedRoot") -> bool:
        a, b = self, other
        if b.is_exact:
            return a.compare(b.lo) < 0
        if a.is_exact:
            return b.compare(a.lo) > 0
        while True:
            if a.hi <= b.lo:
                return True
            if b.hi <= a.lo:
                return False
            if a.width >= b.width:
                a = a.bisect()
            else:
                b = b.bisect()


def _smallest_in_factor(f: Poly, tolerance: Fraction) -> Optional[IsolatedRoot]:
    if f.degree() == 1:
        a, b = (_fraction(c) for c in f.all_coeffs())
        root = -b / a
        return IsolatedRoot(f, root, root) if root > 0 else None

    sequence = sturm_sequence(f)
    lo, hi = Fraction(0), cauchy_bound(f)
    if count_roots(sequence, lo, hi) == 0:
        return None
    while count_roots(sequence, lo, hi) > 1 or hi - lo >= tolerance:
        mid = (lo + hi) / 2
        if count_roots(sequence, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return IsolatedRoot(f, lo, hi)


def reduce_pair(num: Sequence[Fraction], den: Sequence[Fraction]) -> Poly:
    """Denominator of num/den after cancelling common factors."""
    D, N = to_poly(den), to_poly(num)
    if N.is_zero:
        return Poly(1, S, domain=QQ)
    return D.exquo(D.gcd(N))


def smallest_positive_root(p: Poly, tolerance: Fraction = DEFAULT_TOLERANCE) -> Optional[IsolatedRoot]:
    """Smallest positive real root of p, or None if p has none."""
    if p.degree() <= 0:
        return None
    if p.eval(0) == 0:
        raise PoleAtZero("denominator vanishes at s = 0")
    _, factors = p.factor_list()
    candidates = [r for r in (_smallest_in_factor(f, tolerance) for f, _ in factors) if r is not None]
    if not candidates:
        return None
    best = candidates[0]
    for r in candidates[1:]:
        if r < best:
            best = r
    logger.debug("smallest positive root in (%s, %s] of %s", best.lo, best.hi, best.poly.as_expr())
    return best
