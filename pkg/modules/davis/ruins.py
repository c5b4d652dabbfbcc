"""
davis/ruins.py
--------------
(U, T)-ruins: Omega(U, T) is the union of the closed cells of Sigma(U) whose
type contains T, and dOmega(U, T) the cells of Omega whose type does not.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from models.errors import RuinPreconditionFailed
from modules.coxeter import CoxeterMatrix, Subset, classify_subset, spherical_subsets, star_generators
from modules.cyclotomic import DEFAULT_PRECISION_BITS
from modules.growth import DEFAULT_MAX_ORDER
from modules.homology import HomologyGroup, smith_homology
from modules.simplicial import SimplicialComplex

from .cells import SigmaComplex, build_sigma

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ruin:
    U: Tuple[str, ...]
    T: Subset
    sigma: SigmaComplex
    omega: FrozenSet[int]
    boundary: FrozenSet[int]

    @cached_property
    def complex(self) -> SimplicialComplex:
        return self.sigma.order_complex(self.omega)

    @cached_property
    def boundary_complex(self) -> SimplicialComplex:
        return self.sigma.order_complex(self.boundary)

    def homology(self) -> List[HomologyGroup]:
        """H_*(Omega, dOmega)."""
        return smith_homology(self.complex, self.boundary_complex)

    def partition_holds(self) -> bool:
        cells = self.sigma.cells
        inside = all(self.T <= cells[c].type for c in self.omega - self.boundary)
        outside = all(not self.T <= cells[c].type for c in self.boundary)
        return self.boundary <= self.omega and inside and outside

    def type_counts(self) -> Dict[str, int]:
        counts = Counter(",".join(self.sigma.cm.ordered(self.sigma.cells[c].type)) for c in self.omega)
        return dict(sorted(counts.items()))

    def to_dict(self, homology: bool = False) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "U": list(self.U),
            "T": list(self.sigma.cm.ordered(self.T)),
            "partial": self.sigma.partial,
            "omega_cells": len(self.omega),
            "boundary_cells": len(self.boundary),
            "omega_types": self.type_counts(),
            "star": list(self.sigma.cm.ordered(star_generators(self.sigma.cm, next(iter(self.T)))))
            if len(self.T) == 1 else None,
        }
        if homology:
            out["relative_homology"] = [g.to_dict() for g in self.homology()]
        return out


def build_ruin(cm: CoxeterMatrix, U: Optional[Iterable[str]] = None, T: Iterable[str] = (),
               radius: Optional[int] = None, max_order: int = DEFAULT_MAX_ORDER,
               precision_bits: int = DEFAULT_PRECISION_BITS, ambient: bool = False) -> Ruin:
    U = cm.ordered(cm.generators if U is None else U)
    T = cm.subset(T)
    poset = spherical_subsets(cm, precision_bits=precision_bits).restrict(U)
    if not T <= set(U) or T not in poset:
        raise RuinPreconditionFailed("T must be a spherical subset of U",
                                     {"U": list(U), "T": list(cm.ordered(T))})
    if radius is None and not classify_subset(cm, U, precision_bits).is_spherical:
        raise RuinPreconditionFailed("W_U is infinite; give a radius for a truncated ruin",
                                     {"U": list(U)})

    sigma = build_sigma(cm, U, radius, max_order, precision_bits, ambient)
    omega = frozenset(sigma.closure(c.id for c in sigma.cells if T <= c.type))
    boundary = frozenset(c for c in omega if not T <= sigma.cells[c].type)
    ruin = Ruin(U, T, sigma, omega, boundary)
    logger.debug("ruin (%s; %s): %d cells, %d on the boundary", ",".join(U), ",".join(cm.ordered(T)),
                 len(omega), len(boundary))
    return ruin


def _identity_component(sigma: SigmaComplex, t: str) -> Set[Tuple[Subset, FrozenSet[bytes]]]:
    cells = [c for c in sigma.cells if t in c.type]
    graph = nx.Graph()
    graph.add_nodes_from(c.id for c in cells)
    owner: Dict[int, int] = {}
    for c in cells:
        for i in c.elements:
            if i in owner:
                graph.add_edge(owner[i], c.id)
            else:
                owner[i] = c.id
    # element 0 is the identity
    start = [c.id for c in cells if 0 in c.elements]
    reached: Set[int] = set()
    for c in start:
        reached |= nx.node_connected_component(graph, c)
    keys = sigma.table.elements
    return {(sigma.cells[c].type, frozenset(keys[i].key for i in sigma.cells[c].elements)) for c in reached}


def star_reduction_check(cm: CoxeterMatrix, t: str, radius: int = 3,
                         precision_bits: int = DEFAULT_PRECISION_BITS) -> bool:
    """The identity component of Omega(S, {t}) coincides with Omega(St(t), {t})."""
    star = cm.ordered(star_generators(cm, t))

    def sigma_for(U: Tuple[str, ...]) -> SigmaComplex:
        finite = classify_subset(cm, U, precision_bits).is_spherical
        return build_sigma(cm, U, None if finite else radius, precision_bits=precision_bits, ambient=True)

    whole = _identity_component(sigma_for(cm.generators), t)
    local = _identity_component(sigma_for(star), t)
    logger.debug("star reduction at %s: %d vs %d cells", t, len(whole), len(local))
    return whole == local


def pseudomanifold_check(L: SimplicialComplex) -> bool:
    """Every triangle of the 3-dimensional complex L lies in exactly two tetrahedra."""
    if L.dimension != 3:
        return False
    counts: Counter = Counter()
    for f in L.maximal_faces:
        if len(f) == 4:
            for v in f:
                counts[f - {v}] += 1
    return all(counts[frozenset(t)] == 2 for t in L.faces(2))
