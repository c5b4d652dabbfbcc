"""
modules/diagrams.py
-------------------
Classical tables of connected spherical and affine Coxeter diagrams.

`identify` takes the label matrix of one irreducible component and returns
the matching table entry, or None when the diagram is neither spherical nor
affine. It is the independent second opinion for the Gram-signature
classification in modules.coxeter.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

SPHERICAL = "spherical"
AFFINE = "affine"

_EXCEPTIONAL_SPHERICAL: Dict[Tuple[int, int, int], Tuple[str, int]] = {
    (1, 2, 2): ("E6", 51_840),
    (1, 2, 3): ("E7", 2_903_040),
    (1, 2, 4): ("E8", 696_729_600),
}
_EXCEPTIONAL_AFFINE: Dict[Tuple[int, int, int], str] = {
    (2, 2, 2): "E~6",
    (1, 3, 3): "E~7",
    (1, 2, 5): "E~8",
}
_RANK_TWO = {3: "A2", 4: "B2", 6: "G2"}


@dataclass(frozen=True)
class DiagramMatch:
    name: str
    kind: str
    order: Optional[int] = None


def diagram_graph(labels: Sequence[Sequence[float]]) -> nx.Graph:
    """Coxeter diagram: an edge for every label other than 2, labelled by m."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(labels)))
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            if labels[i][j] != 2:
                graph.add_edge(i, j, label=labels[i][j])
    return graph


def identify(labels: Sequence[Sequence[float]]) -> Optional[DiagramMatch]:
    n = len(labels)
    if n == 1:
        return DiagramMatch("A1", SPHERICAL, 2)
    graph = diagram_graph(labels)
    if not nx.is_connected(graph):
        return None

    edge_labels = [m for _, _, m in graph.edges(data="label")]
    if n == 2:
        m = edge_labels[0]
        if m == math.inf:
            return DiagramMatch("A~1", AFFINE)
        m = int(m)
        return DiagramMatch(_RANK_TWO.get(m, f"I2({m})"), SPHERICAL, 2 * m)
    if any(m == math.inf for m in edge_labels):
        return None

    if not nx.is_tree(graph):
        if all(m == 3 for m in edge_labels) and all(deg == 2 for _, deg in graph.degree()):
            return DiagramMatch(f"A~{n - 1}", AFFINE)
        return None

    heavy = [(u, v, int(m)) for u, v, m in graph.edges(data="label") if m > 3]
    branch = [v for v, deg in graph.degree() if deg >= 3]
    if not heavy:
        return _simply_laced(graph, n, branch)
    if branch:
        return _branched_heavy(graph, n, branch, heavy)
    return _heavy_path(graph, n, heavy)


# ---------------------------------------------------------------------------
# Shapes
# ---------------------------------------------------------------------------

def _arms(graph: nx.Graph, center: int) -> List[List[int]]:
    """Paths leaving `center`, each listed outward."""
    arms = []
    for start in sorted(graph[center]):
        arm, prev, cur = [start], center, start
        while graph.degree(cur) == 2:
            nxt = next(v for v in graph[cur] if v != prev)
            arm.append(nxt)
            prev, cur = cur, nxt
        arms.append(arm)
    return arms


def _simply_laced(graph: nx.Graph, n: int, branch: List[int]) -> Optional[DiagramMatch]:
    if not branch:
        return DiagramMatch(f"A{n}", SPHERICAL, math.factorial(n + 1))

    if len(branch) == 1:
        center = branch[0]
        arms = tuple(sorted(len(a) for a in _arms(graph, center)))
        if len(arms) == 3:
            if arms[:2] == (1, 1):
                return DiagramMatch(f"D{n}", SPHERICAL, 2 ** (n - 1) * math.factorial(n))
            if arms in _EXCEPTIONAL_SPHERICAL:
                name, order = _EXCEPTIONAL_SPHERICAL[arms]
                return DiagramMatch(name, SPHERICAL, order)
            if arms in _EXCEPTIONAL_AFFINE:
                return DiagramMatch(_EXCEPTIONAL_AFFINE[arms], AFFINE)
        if arms == (1, 1, 1, 1):
            return DiagramMatch("D~4", AFFINE)
        return None

    # D~n: two adjacent-or-not branch points of degree 3, four leaves hanging off them
    if len(branch) == 2 and all(graph.degree(v) == 3 for v in branch):
        leaves = [v for v, deg in graph.degree() if deg == 1]
        if len(leaves) == 4 and all(set(graph[leaf]) & set(branch) for leaf in leaves):
            return DiagramMatch(f"D~{n - 1}", AFFINE)
    return None


def _branched_heavy(graph: nx.Graph, n: int, branch: List[int],
                    heavy: List[Tuple[int, int, int]]) -> Optional[DiagramMatch]:
    # only B~n: a fork whose long arm ends in a 4
    if len(branch) != 1 or len(heavy) != 1 or heavy[0][2] != 4:
        return None
    center = branch[0]
    if graph.degree(center) != 3:
        return None
    arms = _arms(graph, center)
    u, v, _ = heavy[0]
    for arm in arms:
        path = [center] + arm
        last_edge = {path[-2], path[-1]}
        if last_edge == {u, v}:
            others = [a for a in arms if a is not arm]
            if all(len(a) == 1 for a in others):
                return DiagramMatch(f"B~{n - 1}", AFFINE)
    return None


def _path_order(graph: nx.Graph) -> List[int]:
    start = min(v for v, deg in graph.degree() if deg == 1)
    order, prev = [start], None
    while len(order) < graph.number_of_nodes():
        cur = order[-1]
        nxt = next(v for v in graph[cur] if v != prev)
        prev = cur
        order.append(nxt)
    return order


def _heavy_path(graph: nx.Graph, n: int, heavy: List[Tuple[int, int, int]]) -> Optional[DiagramMatch]:
    path = _path_order(graph)
    seq = [int(graph[path[i]][path[i + 1]]["label"]) for i in range(n - 1)]
    positions = [i for i, m in enumerate(seq) if m > 3]
    last = n - 2

    if len(positions) == 1:
        i = positions[0]
        m = seq[i]
        at_end = i in (0, last)
        if m == 4:
            if at_end:
                return DiagramMatch(f"B{n}", SPHERICAL, 2 ** n * math.factorial(n))
            if n == 4:
                return DiagramMatch("F4", SPHERICAL, 1152)
            if n == 5 and i in (1, 2):
                return DiagramMatch("F~4", AFFINE)
            return None
        if m == 5 and at_end and n in (3, 4):
            return DiagramMatch(f"H{n}", SPHERICAL, 120 if n == 3 else 14_400)
        if m == 6 and at_end and n == 3:
            return DiagramMatch("G~2", AFFINE)
        return None

    if len(positions) == 2 and positions == [0, last] and seq[0] == seq[last] == 4:
        return DiagramMatch(f"C~{n - 1}", AFFINE)
    return None
