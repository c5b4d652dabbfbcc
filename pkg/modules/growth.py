"""
modules/growth.py
-----------------
Enumeration of Coxeter group elements, growth polynomials W_T(q), the full
growth series W(q) and its region of convergence.

Elements are represented by the orbit of a chamber point rho in the dual of
the reflection representation: w is stored as the vector f(w) with
f(w)_t = <alpha_t, w rho>, whose coordinates are cyclotomic integers. Left
multiplication by s is f'_t = f_t - G_st f_s with G = 2B, and s w is longer
than w exactly when f_s > 0. Distinct elements have distinct vectors, so
equality is exact array equality.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from models.errors import (
    BallCapExceeded,
    InternalDisagreement,
    MultidegreeMismatch,
    NotSpherical,
    OrderCapExceeded,
    PrecisionFailure,
)
from models.verdicts import RegionVerdict
from modules.coxeter import (
    CoxeterMatrix,
    GeneratorClasses,
    SphericalPoset,
    classify_subset,
    diagram_components,
    generator_classes,
    gram_matrix,
    spherical_subsets,
)
from modules.cyclotomic import DEFAULT_PRECISION_BITS
from modules.rational import MultiPoly, MultiRat, alternating_sum, growth_ring, poly_from_terms
from modules.roots import DEFAULT_TOLERANCE, IsolatedRoot, reduce_pair, smallest_positive_root
from modules.weights import WeightVector

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 200_000
DEFAULT_MAX_BALL = 14
_COORDINATE_LIMIT = 2 ** 50


# ---------------------------------------------------------------------------
# Reflection representation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupElementRep:
    key: bytes
    coordinates: np.ndarray = field(compare=False, repr=False)
    length: int
    multidegree: Tuple[int, ...]
    word: Tuple[str, ...] = ()

    def weight(self, q: WeightVector) -> Fraction:
        value = Fraction(1)
        for x, e in zip(q.values, self.multidegree):
            value *= x ** e
        return value

    def to_dict(self) -> Dict[str, Any]:
        return {"word": list(self.word), "length": self.length, "multidegree": list(self.multidegree)}


class ReflectionRepresentation:
    """Left action of W_U on chamber-orbit vectors.

    With `ambient=True` coordinates run over every generator of cm, so keys
    of elements built from different U are comparable.
    """

    def __init__(self, cm: CoxeterMatrix, U: Optional[Iterable[str]] = None,
                 precision_bits: int = DEFAULT_PRECISION_BITS, ambient: bool = False):
        self.cm = cm
        self.generators = cm.ordered(cm.generators if U is None else U)
        self.precision_bits = precision_bits
        axes = cm.generators if ambient else self.generators
        self._acting = [axes.index(s) for s in self.generators]
        gram = gram_matrix(cm, axes)
        self.ring = gram.ring
        self._axes = len(axes)
        # _action[s, t] multiplies coefficient vectors by G_st
        self._action = np.stack([
            np.stack([self.ring.multiplication_matrix(gram.doubled[s][t]) for t in range(self._axes)])
            for s in range(self._axes)
        ])

    @property
    def rank(self) -> int:
        return len(self.generators)

    def identity(self) -> np.ndarray:
        f = np.zeros((self._axes, self.ring.degree), dtype=np.int64)
        f[:, 0] = 1
        return f

    def apply(self, i: int, f: np.ndarray) -> np.ndarray:
        s = self._acting[i]
        out = f - np.einsum("tij,j->ti", self._action[s], f[s])
        if np.abs(out).max() > _COORDINATE_LIMIT:
            raise PrecisionFailure("orbit coordinates exceed the int64 headroom",
                                   {"generators": list(self.generators)})
        return out

    def is_ascent(self, i: int, f: np.ndarray) -> bool:
        return self.ring.sign(f[self._acting[i]], self.precision_bits) > 0


def _spheres(rep: ReflectionRepresentation, classes: GeneratorClasses,
             radius: Optional[int] = None,
             max_elements: Optional[int] = None) -> Iterator[List[GroupElementRep]]:
    """Spheres S_0, S_1, ... of the Cayley graph, in deterministic order."""
    identity = rep.identity()
    current = {identity.tobytes(): GroupElementRep(identity.tobytes(), identity, 0, (0,) * len(classes))}
    total = 1
    yield list(current.values())

    length = 0
    while current and (radius is None or length < radius):
        following: Dict[bytes, GroupElementRep] = {}
        for element in current.values():
            for i, s in enumerate(rep.generators):
                if not rep.is_ascent(i, element.coordinates):
                    continue
                f = rep.apply(i, element.coordinates)
                key = f.tobytes()
                degree = list(element.multidegree)
                degree[classes.class_of(s)] += 1
                known = following.get(key)
                if known is not None:
                    if known.multidegree != tuple(degree):
                        raise MultidegreeMismatch(
                            "two words for one element have different multidegrees",
                            {"words": [list(known.word), [s] + list(element.word)]})
                    continue
                following[key] = GroupElementRep(key, f, length + 1, tuple(degree), (s,) + element.word)
        length += 1
        total += len(following)
        if max_elements is not None and total > max_elements:
            raise OrderCapExceeded(f"more than {max_elements} elements", {"max_order": max_elements})
        current = following
        if following:
            logger.debug("sphere %d: %d elements", length, len(following))
            yield list(following.values())


def enumerate_finite(cm: CoxeterMatrix, T: Optional[Iterable[str]] = None,
                     max_order: int = DEFAULT_MAX_ORDER,
                     precision_bits: int = DEFAULT_PRECISION_BITS) -> List[GroupElementRep]:
    T = cm.ordered(cm.generators if T is None else T)
    kind = classify_subset(cm, T, precision_bits)
    if not kind.is_spherical:
        raise NotSpherical(f"W_T is {kind.kind}", {"T": list(T), "kind": kind.kind})
    if kind.order is not None and kind.order > max_order:
        raise OrderCapExceeded(f"|W_T| = {kind.order} exceeds the cap {max_order}",
                               {"order": kind.order, "max_order": max_order})
    rep = ReflectionRepresentation(cm, T, precision_bits)
    elements = [e for sphere in _spheres(rep, generator_classes(cm), max_elements=max_order) for e in sphere]
    if kind.order is not None and len(elements) != kind.order:
        raise InternalDisagreement("enumeration disagrees with the classified order",
                                   {"T": list(T), "found": len(elements), "order": kind.order})
    return elements


# ---------------------------------------------------------------------------
# Cayley tables (shared with the Davis complex)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CayleyTable:
    generators: Tuple[str, ...]
    elements: Tuple[GroupElementRep, ...]
    left: Tuple[Tuple[int, ...], ...]       # left[s][i] = index of s*w_i, -1 outside a ball
    partial: bool = False

    def __len__(self) -> int:
        return len(self.elements)


def cayley_table(cm: CoxeterMatrix, U: Optional[Iterable[str]] = None,
                 radius: Optional[int] = None,
                 max_order: int = DEFAULT_MAX_ORDER,
                 precision_bits: int = DEFAULT_PRECISION_BITS,
                 ambient: bool = False) -> CayleyTable:
    """Elements of W_U with left multiplication; a ball of `radius` when W_U is infinite."""
    U = cm.ordered(cm.generators if U is None else U)
    finite = classify_subset(cm, U, precision_bits).is_spherical
    if not finite and radius is None:
        raise OrderCapExceeded("W_U is infinite; a radius is required", {"U": list(U)})
    rep = ReflectionRepresentation(cm, U, precision_bits, ambient)
    spheres = _spheres(rep, generator_classes(cm), None if finite else radius, max_elements=max_order)
    elements = [e for sphere in spheres for e in sphere]
    index = {e.key: i for i, e in enumerate(elements)}
    left = tuple(
        tuple(index.get(rep.apply(s, e.coordinates).tobytes(), -1) for e in elements)
        for s in range(rep.rank)
    )
    return CayleyTable(U, tuple(elements), left, partial=not finite)


# ---------------------------------------------------------------------------
# Growth polynomials and series
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _component_polynomial(cm: CoxeterMatrix, component: Tuple[str, ...], max_order: int,
                          precision_bits: int) -> MultiPoly:
    classes = generator_classes(cm)
    R = growth_ring(classes.variable_names)
    if len(component) == 1:
        degree = [0] * len(classes)
        degree[classes.class_of(component[0])] = 1
        return poly_from_terms(R, {(0,) * len(classes): 1, tuple(degree): 1})
    counts: Dict[Tuple[int, ...], int] = {}
    for e in enumerate_finite(cm, component, max_order, precision_bits):
        counts[e.multidegree] = counts.get(e.multidegree, 0) + 1
    return poly_from_terms(R, counts)


def growth_polynomial(cm: CoxeterMatrix, T: Optional[Iterable[str]] = None,
                      max_order: int = DEFAULT_MAX_ORDER,
                      precision_bits: int = DEFAULT_PRECISION_BITS) -> MultiPoly:
    """W_T(q), the product of the polynomials of the irreducible components."""
    T = cm.ordered(cm.generators if T is None else T)
    kind = classify_subset(cm, T, precision_bits)
    if not kind.is_spherical:
        raise NotSpherical(f"W_T is {kind.kind}", {"T": list(T), "kind": kind.kind})
    if kind.order is not None and kind.order > max_order:
        raise OrderCapExceeded(f"|W_T| = {kind.order} exceeds the cap {max_order}",
                               {"order": kind.order, "max_order": max_order})
    R = growth_ring(generator_classes(cm).variable_names)
    p = R.one
    for component in diagram_components(cm, T):
        p *= _component_polynomial(cm, component, max_order, precision_bits)
    return p


def steinberg_sum(poset: SphericalPoset, polys: Optional[Dict[frozenset, MultiPoly]] = None,
                  max_order: int = DEFAULT_MAX_ORDER,
                  precision_bits: int = DEFAULT_PRECISION_BITS) -> MultiRat:
    """F(q) = sum over spherical T of (-1)^|T| / W_T(q); equals 1/W(1/q)."""
    cm = poset.cm
    if polys is None:
        polys = {T: growth_polynomial(cm, T, max_order, precision_bits) for T in poset.elements}
    return alternating_sum(((-1) ** len(T), polys[T]) for T in poset.elements)


def full_growth_series(cm: CoxeterMatrix, max_order: int = DEFAULT_MAX_ORDER, threads: int = 1,
                       precision_bits: int = DEFAULT_PRECISION_BITS) -> MultiRat:
    poset = spherical_subsets(cm, threads, precision_bits)
    if frozenset(cm.generators) in poset:
        return MultiRat.from_poly(growth_polynomial(cm, cm.generators, max_order, precision_bits))
    series = steinberg_sum(poset, max_order=max_order, precision_bits=precision_bits).inverted().reciprocal()
    logger.debug("growth series of rank-%d system: %s", cm.rank, series)
    return series


def evaluate(f: MultiRat, q: WeightVector) -> Fraction:
    return f.evaluate(q.values)


# ---------------------------------------------------------------------------
# Region of convergence
# ---------------------------------------------------------------------------

def _pole_on_ray(series: MultiRat, q: WeightVector, tolerance: Fraction) -> Optional[IsolatedRoot]:
    num, den = series.substitute_ray(q.values)
    return smallest_positive_root(reduce_pair(num, den), tolerance)


def region_membership(cm: CoxeterMatrix, q: WeightVector, series: Optional[MultiRat] = None,
                      tolerance: Fraction = DEFAULT_TOLERANCE,
                      max_order: int = DEFAULT_MAX_ORDER,
                      precision_bits: int = DEFAULT_PRECISION_BITS) -> RegionVerdict:
    """Compare the smallest positive pole s* of s -> W(s*q) with 1."""
    if series is None:
        series = full_growth_series(cm, max_order, precision_bits=precision_bits)
    return series_region(series, q, tolerance)


def series_region(series: MultiRat, q: WeightVector,
                  tolerance: Fraction = DEFAULT_TOLERANCE) -> RegionVerdict:
    root = _pole_on_ray(series, q, tolerance)
    if root is None:
        return RegionVerdict(RegionVerdict.INTERIOR, None)

    position = root.compare(Fraction(1))
    kind = {1: RegionVerdict.INTERIOR, 0: RegionVerdict.BOUNDARY, -1: RegionVerdict.OUTSIDE}[position]
    minimal = tuple(Fraction(int(c.p), int(c.q)) for c in root.poly.monic().all_coeffs())
    logger.debug("region at %s: %s (s* in (%s, %s])", q.to_dict(), kind, root.lo, root.hi)
    return RegionVerdict(kind, (root.lo, root.hi), root.lo if root.is_exact else None, minimal)


def growth_rate(cm: CoxeterMatrix, series: Optional[MultiRat] = None,
                tolerance: Fraction = DEFAULT_TOLERANCE,
                max_order: int = DEFAULT_MAX_ORDER) -> Tuple[Fraction, Fraction]:
    """Bounds (lo, hi) on the exponential growth rate 1/s* at q = 1; (0, 0) for finite W."""
    if series is None:
        series = full_growth_series(cm, max_order)
    ones = WeightVector.uniform(generator_classes(cm), 1)
    root = _pole_on_ray(series, ones, tolerance)
    if root is None:
        return Fraction(0), Fraction(0)
    if root.is_exact:
        return 1 / root.lo, 1 / root.lo
    while root.lo == 0:
        root = root.bisect()
    return 1 / root.hi, 1 / root.lo


def ball_partial_sums(cm: CoxeterMatrix, q: WeightVector, radius: int,
                      max_ball: int = DEFAULT_MAX_BALL, max_order: int = DEFAULT_MAX_ORDER,
                      precision_bits: int = DEFAULT_PRECISION_BITS) -> List[Fraction]:
    """Partial sums of q_w over the balls of radius 0..radius."""
    if radius > max_ball:
        raise BallCapExceeded(f"radius {radius} exceeds the cap {max_ball}",
                              {"radius": radius, "max_ball": max_ball})
    rep = ReflectionRepresentation(cm, None, precision_bits)
    sums: List[Fraction] = []
    running = Fraction(0)
    for sphere in _spheres(rep, generator_classes(cm), radius, max_elements=max_order):
        running += sum((e.weight(q) for e in sphere), Fraction(0))
        sums.append(running)
    sums.extend([running] * (radius + 1 - len(sums)))
    return sums


def sphere_sizes(cm: CoxeterMatrix, radius: int, max_order: int = DEFAULT_MAX_ORDER) -> List[int]:
    rep = ReflectionRepresentation(cm)
    return [len(sphere) for sphere in _spheres(rep, generator_classes(cm), radius, max_elements=max_order)]


def polynomial_degree(p: MultiPoly) -> Tuple[int, ...]:
    """Componentwise top degree; for W_T this is the multidegree of the longest element."""
    return tuple(max(m[i] for m in p.monoms()) for i in range(p.ring.ngens))


def format_series(series: MultiRat) -> Dict[str, Any]:
    out = series.to_dict()
    out["text"] = str(series)
    return out

