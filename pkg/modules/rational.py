"""
modules/rational.py
-------------------
Exact multivariate polynomials and rational functions over QQ, one variable
per generator class.

Polynomials are sympy sparse `PolyElement`s in a lex-ordered ring. A MultiRat
is kept reduced by trial division against the irreducible factors of its
denominator (no multivariate gcd), and normalized to a monic denominator.
Reciprocals and reflections of a reduced pair stay coprime, so those skip
the factoring step.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import QQ, Symbol
from sympy.polys.orderings import lex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing, ring

from models.errors import PoleEvaluation
from models.verdicts import format_rational

logger = logging.getLogger(__name__)

MultiPoly = PolyElement
Monomial = Tuple[int, ...]


@lru_cache(maxsize=None)
def growth_ring(names: Tuple[str, ...]) -> PolyRing:
    R, *_ = ring([Symbol(n) for n in names], QQ, lex)
    return R


def to_fraction(c: Any) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def poly_from_terms(R: PolyRing, terms: Dict[Monomial, int]) -> MultiPoly:
    return R.from_dict({m: QQ(c) for m, c in terms.items() if c})


def _factors(p: MultiPoly) -> List[Tuple[MultiPoly, int]]:
    if p.is_ground:
        return []
    _, factors = p.factor_list()
    return [(f.monic(), k) for f, k in factors if not f.is_ground]


def _monomial_key(names: Sequence[str], m: Monomial) -> str:
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
    return "*".join(parts) or "1"


def poly_to_dict(p: MultiPoly) -> Dict[str, Any]:
    names = [str(s) for s in p.ring.symbols]
    return {_monomial_key(names, m): format_rational(to_fraction(c)) for m, c in sorted(p.terms())}


def evaluate_poly(p: MultiPoly, point: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for m, c in p.terms():
        term = to_fraction(c)
        for x, e in zip(point, m):
            if e:
                term *= Fraction(x) ** e
        total += term
    return total


def max_degrees(polys: Iterable[MultiPoly]) -> Monomial:
    polys = list(polys)
    ngens = polys[0].ring.ngens
    top = [0] * ngens
    for p in polys:
        for m in p.monoms():
            top = [max(a, b) for a, b in zip(top, m)]
    return tuple(top)


def reflect(p: MultiPoly, degrees: Monomial) -> MultiPoly:
    """q^degrees * p(1/q); `degrees` must dominate every exponent of p."""
    return p.ring.from_dict({tuple(d - e for d, e in zip(degrees, m)): c for m, c in p.terms()})


def reverse(p: MultiPoly) -> MultiPoly:
    return reflect(p, max_degrees([p]))


def _strip_common_monomial(a: MultiPoly, b: MultiPoly) -> Tuple[MultiPoly, MultiPoly]:
    monoms = list(a.monoms()) + list(b.monoms())
    low = tuple(min(m[i] for m in monoms) for i in range(a.ring.ngens))
    if not any(low):
        return a, b

    def shift(p: MultiPoly) -> MultiPoly:
        return p.ring.from_dict({tuple(e - d for e, d in zip(m, low)): c for m, c in p.terms()})

    return shift(a), shift(b)


@dataclass(frozen=True, eq=False)
class MultiRat:
    num: MultiPoly
    den: MultiPoly

    # ---- construction ------------------------------------------------------

    @classmethod
    def reduced(cls, num: MultiPoly, den: MultiPoly,
                factors: Optional[List[Tuple[MultiPoly, int]]] = None) -> "MultiRat":
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return cls(num.ring.zero, num.ring.one)
        for f, k in (_factors(den) if factors is None else factors):
            for _ in range(k):
                try:
                    n2, d2 = num.exquo(f), den.exquo(f)
                except ExactQuotientFailed:
                    break
                num, den = n2, d2
        return cls.normalized(num, den)

    @classmethod
    def normalized(cls, num: MultiPoly, den: MultiPoly) -> "MultiRat":
        """Monic denominator; assumes num and den are already coprime."""
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return cls(num.ring.zero, num.ring.one)
        return cls(num.quo_ground(den.LC), den.monic())

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "MultiRat":
        return cls(p, p.ring.one)

    @property
    def ring(self) -> PolyRing:
        return self.num.ring

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(str(s) for s in self.ring.symbols)

    # ---- arithmetic --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiRat):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "MultiRat":
        return MultiRat(-self.num, self.den)

    def __add__(self, other: "MultiRat") -> "MultiRat":
        return MultiRat.reduced(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "MultiRat") -> "MultiRat":
        return self + (-other)

    def __mul__(self, other: "MultiRat") -> "MultiRat":
        return MultiRat.reduced(self.num * other.num, self.den * other.den)

    def reciprocal(self) -> "MultiRat":
        if not self.num:
            raise ZeroDivisionError("reciprocal of zero")
        return MultiRat.normalized(self.den, self.num)

    def inverted(self) -> "MultiRat":
        """f(1/q), cleared by the largest monomial appearing in either part."""
        degrees = max_degrees([self.num, self.den])
        num, den = _strip_common_monomial(reflect(self.num, degrees), reflect(self.den, degrees))
        return MultiRat.normalized(num, den)

    # ---- evaluation --------------------------------------------------------

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        den = evaluate_poly(self.den, point)
        if den == 0:
            raise PoleEvaluation("denominator vanishes at the evaluation point",
                                 {"point": [format_rational(x) for x in point]})
        return evaluate_poly(self.num, point) / den

    def substitute_ray(self, point: Sequence[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
        """Ascending coefficients in s of numerator and denominator of f(s*point)."""
        def collapse(p: MultiPoly) -> List[Fraction]:
            out: Dict[int, Fraction] = {}
            for m, c in p.terms():
                value = to_fraction(c)
                for x, e in zip(point, m):
                    value *= Fraction(x) ** e
                out[sum(m)] = out.get(sum(m), Fraction(0)) + value
            top = max(out, default=0)
            return [out.get(k, Fraction(0)) for k in range(top + 1)]

        return collapse(self.num), collapse(self.den)

    # ---- output ------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        return {"variables": list(self.variables), "num": poly_to_dict(self.num),
                "den": poly_to_dict(self.den)}

    def __str__(self) -> str:
        if self.den == self.ring.one:
            return str(self.num.as_expr())
        return f"({self.num.as_expr()})/({self.den.as_expr()})"


def alternating_sum(terms: Iterable[Tuple[int, MultiPoly]]) -> MultiRat:
    """Sum of sign/p over (sign, p) pairs, over the lcm of the denominators."""
    terms = list(terms)
    R = terms[0][1].ring
    multiplicity: Dict[MultiPoly, int] = {}
    for _, p in terms:
        for f, k in _factors(p):
            multiplicity[f] = max(multiplicity.get(f, 0), k)

    den = R.one
    for f, k in multiplicity.items():
        den *= f ** k
    num = R.zero
    for sign, p in terms:
        num += sign * den.exquo(p)
    logger.debug("alternating sum over %d terms, common denominator degree %s", len(terms),
                 max_degrees([den]))
    return MultiRat.reduced(num, den, [(f, k) for f, k in multiplicity.items()])
