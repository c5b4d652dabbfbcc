"""
davis/chamber.py
----------------
The Davis chamber: the order complex of the poset of spherical subsets,
a cone with apex the empty subset.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List

import networkx as nx

from modules.coxeter import SphericalPoset
from modules.simplicial import SimplicialComplex

logger = logging.getLogger(__name__)


def subset_label(poset: SphericalPoset, T: FrozenSet[str]) -> str:
    return "{" + ",".join(poset.cm.ordered(T)) + "}"


def maximal_chains(cover: nx.DiGraph, bottoms: Iterable[Any], tops: Iterable[Any]) -> List[List[Any]]:
    """All bottom-to-top paths in a covering DAG."""
    tops = list(tops)
    chains: List[List[Any]] = []
    for b in bottoms:
        for t in tops:
            if b == t:
                chains.append([b])
            elif nx.has_path(cover, b, t):
                chains.extend(nx.all_simple_paths(cover, b, t))
    return chains


@dataclass(frozen=True)
class Chamber:
    poset: SphericalPoset
    complex: SimplicialComplex

    def face(self, T: Iterable[str]) -> SimplicialComplex:
        """D_T: the full subcomplex on the barycenters v_T' with T' containing T."""
        T = frozenset(T)
        return self.complex.induced([U for U in self.complex.vertices if T <= U])

    def to_dict(self) -> Dict[str, Any]:
        return self.complex.to_dict(label=lambda T: subset_label(self.poset, T))


def build_chamber(poset: SphericalPoset) -> Chamber:
    cover = nx.DiGraph()
    cover.add_nodes_from(poset.elements)
    for T in poset.elements:
        for s in poset.cm.generators:
            if s not in T and (T | {s}) in poset:
                cover.add_edge(T, T | {s})
    chains = maximal_chains(cover, [frozenset()], poset.maximal())
    L = SimplicialComplex.from_faces(chains, poset.elements)
    logger.debug("chamber: %d barycenters, f-vector %s", len(poset), L.f_vector)
    return Chamber(poset, L)

