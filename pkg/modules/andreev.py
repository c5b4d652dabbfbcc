"""
modules/andreev.py
------------------
Geometry of Sigma_L for 2-sphere nerves: Lanner-dual detection, Euclidean
special subgroups, and the routing into H^3, R^3 or H^2 x R.
"""
from __future__ import annotations

import itertools
import logging
from typing import List, Optional, Tuple

import networkx as nx

from models.errors import PreconditionFailed
from models.verdicts import AndreevVerdict, TopologyVerdict
from modules.coxeter import (
    INFINITY,
    CoxeterMatrix,
    SphericalPoset,
    Subset,
    classify_subset,
    diagram_components,
    gram_matrix,
    product_decomposition,
)
from modules.cyclotomic import DEFAULT_PRECISION_BITS
from modules.simplicial import SimplicialComplex
from modules.topology import DEFAULT_MAX_CIRCUIT_LENGTH, euclidean_circuits

logger = logging.getLogger(__name__)

LANNER_DUAL_REASON = "dual to hyperbolic 3-simplex"


def is_lanner_dual(cm: CoxeterMatrix, L: SimplicialComplex,
                   precision_bits: int = DEFAULT_PRECISION_BITS) -> bool:
    """L is the boundary of a 3-simplex whose four generators form a Lanner group."""
    if len(L.vertices) != 4 or not L.is_boundary_of_simplex():
        return False
    return classify_subset(cm, L.vertices, precision_bits).is_lanner


def _affine_irreducibles(cm: CoxeterMatrix, poset: SphericalPoset,
                         precision_bits: int) -> List[Subset]:
    """Connected diagrams of affine type: every facet spherical, Gram corank 1."""
    found = set()
    for T in poset.elements:
        for s in cm.generators:
            if s in T:
                continue
            X = T | {s}
            if X in found or not all(X - {u} in poset for u in X):
                continue
            if len(diagram_components(cm, X)) != 1:
                continue
            n_plus, n_zero, n_minus = gram_matrix(cm, X).signature(precision_bits)
            if n_minus == 0 and n_zero == 1:
                found.add(X)
    return sorted(found, key=poset.sort_key)


def _orthogonal(cm: CoxeterMatrix, X: Subset, Y: Subset) -> bool:
    return not (X & Y) and all(cm.m(s, t) == 2 for s in X for t in Y)


def euclidean_subsets(cm: CoxeterMatrix, poset: SphericalPoset,
                      precision_bits: int = DEFAULT_PRECISION_BITS) -> List[Subset]:
    """All T with W_T a Euclidean reflection group: unions of pairwise
    commuting affine diagrams of total rank >= 3."""
    pieces = _affine_irreducibles(cm, poset, precision_bits)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(pieces)))
    graph.add_edges_from((i, j) for i, j in itertools.combinations(range(len(pieces)), 2)
                         if _orthogonal(cm, pieces[i], pieces[j]))
    out = set()
    for clique in nx.enumerate_all_cliques(graph):
        X = frozenset().union(*(pieces[i] for i in clique))
        if len(X) >= 3 and classify_subset(cm, X, precision_bits).is_euclidean:
            out.add(X)
    return sorted(out, key=poset.sort_key)


def _product_with_dinfty(cm: CoxeterMatrix, L: SimplicialComplex) -> Optional[Tuple[Subset, Subset]]:
    """W = W_T x D_inf with T spanning an empty triangle of L."""
    components = product_decomposition(cm)
    for pair in components:
        if len(pair) != 2 or cm.m(*pair) != INFINITY:
            continue
        T = frozenset(cm.generators) - set(pair)
        if len(T) == 3 and T <= set(L.vertices) and T in {frozenset(t) for t in L.empty_simplices(2)}:
            return T, frozenset(pair)
    return None


def check_andreev(cm: CoxeterMatrix, poset: SphericalPoset, L: SimplicialComplex,
                  verdict: TopologyVerdict, max_circuit_length: int = DEFAULT_MAX_CIRCUIT_LENGTH,
                  precision_bits: int = DEFAULT_PRECISION_BITS) -> AndreevVerdict:
    if not verdict.is_sphere(2):
        raise PreconditionFailed("Andreev routing needs a 2-sphere nerve", {"nerve": verdict.kind})
    if L.is_boundary_of_simplex():
        raise PreconditionFailed("Andreev routing excludes the boundary of a 3-simplex")

    product = _product_with_dinfty(cm, L)
    if product is not None:
        T, pair = product
        kind = classify_subset(cm, T, precision_bits)
        geometry = AndreevVerdict.R3 if kind.is_euclidean else AndreevVerdict.H2_X_R
        logger.info("Sigma_L splits as a product over %s: %s", sorted(T), geometry)
        return AndreevVerdict(geometry, "II", {"triangle": cm.ordered(T), "dinfty": cm.ordered(pair),
                                               "triangle_type": kind.kind})

    whole = classify_subset(cm, cm.generators, precision_bits)
    if whole.is_euclidean:
        return AndreevVerdict(AndreevVerdict.R3, "II-adjacent",
                              {"factors": [list(c) for c in product_decomposition(cm)]})

    subsets = euclidean_subsets(cm, poset, precision_bits)
    circuits = euclidean_circuits(L, cm, max_circuit_length, precision_bits)
    if subsets or circuits:
        witness = cm.ordered(circuits[0].vertices if circuits else subsets[0])
        return AndreevVerdict(
            AndreevVerdict.UNDETERMINED, "I",
            {"euclidean": list(witness),
             "euclidean_subsets": [list(cm.ordered(X)) for X in subsets],
             "circuits": [c.to_dict() for c in circuits]},
            reason="W has a Euclidean special subgroup",
        )
    return AndreevVerdict(AndreevVerdict.H3, "")


def andreev_for_nerve(cm: CoxeterMatrix, poset: SphericalPoset, L: SimplicialComplex,
                      verdict: TopologyVerdict, max_circuit_length: int = DEFAULT_MAX_CIRCUIT_LENGTH,
                      precision_bits: int = DEFAULT_PRECISION_BITS) -> Optional[AndreevVerdict]:
    """Andreev verdict for any 2-sphere nerve, the boundary of a 3-simplex included."""
    if not verdict.is_sphere(2):
        return None
    if L.is_boundary_of_simplex():
        if is_lanner_dual(cm, L, precision_bits):
            return AndreevVerdict(AndreevVerdict.EXCLUDED, "", {"lanner": list(L.vertices)},
                                  reason=LANNER_DUAL_REASON)
        kind = classify_subset(cm, cm.generators, precision_bits)
        return AndreevVerdict(AndreevVerdict.R3, "III", {"type": kind.to_dict()})
    return check_andreev(cm, poset, L, verdict, max_circuit_length, precision_bits)
