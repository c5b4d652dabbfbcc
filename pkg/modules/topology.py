"""
modules/topology.py
-------------------
Recognition of low-dimensional triangulations (dimension <= 3), the
separating-circle search on triangulated 2-spheres, and Euclidean circuits
of a nerve.

2-dimensional verdicts are certificates. In dimension 3 only necessary
conditions are checked (manifold structure plus homology), so Sphere{3} and
Disk{3} come back with certified=False.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from models.errors import DimensionTooHigh, NoneFound, NotASphere
from models.verdicts import TopologyVerdict
from modules.coxeter import CoxeterMatrix, SubgroupType, classify_subset
from modules.cyclotomic import DEFAULT_PRECISION_BITS
from modules.homology import is_point_homology, is_sphere_homology, smith_homology
from modules.simplicial import Face, SimplicialComplex, Vertex

logger = logging.getLogger(__name__)

DEFAULT_MAX_CIRCUIT_LENGTH = 16


# ---------------------------------------------------------------------------
# Recognition
# ---------------------------------------------------------------------------

def _codim_one_counts(L: SimplicialComplex) -> Counter:
    """How many top simplices each codimension-one face lies in."""
    counts: Counter = Counter()
    for f in L.maximal_faces:
        for v in f:
            counts[f - {v}] += 1
    return counts


def _verdict(kind: str, dim: int, evidence: Dict[str, Any], certified: bool = True) -> TopologyVerdict:
    return TopologyVerdict(kind, dim, certified, evidence)


def recognize(L: SimplicialComplex) -> TopologyVerdict:
    d = L.dimension
    if d > 3:
        raise DimensionTooHigh(f"recognition supports dimension <= 3, got {d}", {"dimension": d})

    evidence: Dict[str, Any] = {
        "f_vector": list(L.f_vector),
        "euler_characteristic": L.euler_characteristic(),
        "checks": [],
    }
    checks: List[str] = evidence["checks"]
    if d < 0:
        return _verdict(TopologyVerdict.OTHER, -1, evidence)

    if d == 0:
        n = len(L.vertices)
        if n == 2:
            return _verdict(TopologyVerdict.SPHERE, 0, evidence)
        if n == 1:
            return _verdict(TopologyVerdict.DISK, 0, evidence)
        return _verdict(TopologyVerdict.OTHER, 0, evidence)

    if not L.is_pure():
        checks.append("pure: no")
        return _verdict(TopologyVerdict.OTHER, d, evidence)
    if not L.is_connected():
        checks.append("connected: no")
        return _verdict(TopologyVerdict.OTHER, d, evidence)
    checks.append("pure, connected")

    if d == 1:
        return _recognize_graph(L, evidence)
    if d == 2:
        return _recognize_surface(L, evidence)
    return _recognize_3d(L, evidence)


def _recognize_graph(L: SimplicialComplex, evidence: Dict[str, Any]) -> TopologyVerdict:
    degrees = sorted(d for _, d in L.one_skeleton().degree())
    if all(d == 2 for d in degrees):
        return _verdict(TopologyVerdict.CIRCLE, 1, evidence)
    if degrees[:2] == [1, 1] and all(d == 2 for d in degrees[2:]):
        return _verdict(TopologyVerdict.ARC, 1, evidence)
    evidence["checks"].append(f"degrees {degrees}")
    return _verdict(TopologyVerdict.OTHER, 1, evidence)


def _recognize_surface(L: SimplicialComplex, evidence: Dict[str, Any]) -> TopologyVerdict:
    checks = evidence["checks"]
    counts = _codim_one_counts(L)
    if any(c > 2 for c in counts.values()):
        checks.append("edge in more than two triangles")
        return _verdict(TopologyVerdict.OTHER, 2, evidence)

    boundary = [e for e, c in counts.items() if c == 1]
    on_boundary = set().union(*boundary) if boundary else set()
    for v in L.vertices:
        link = recognize(L.link(v))
        wanted = TopologyVerdict.ARC if v in on_boundary else TopologyVerdict.CIRCLE
        if link.kind != wanted:
            checks.append(f"link of {v!r} is {link.kind}, expected {wanted}")
            return _verdict(TopologyVerdict.OTHER, 2, evidence)
    checks.append("vertex links")

    chi = evidence["euler_characteristic"]
    if not boundary:
        if chi == 2:
            return _verdict(TopologyVerdict.SPHERE, 2, evidence)
        checks.append(f"closed surface with euler characteristic {chi}")
        return _verdict(TopologyVerdict.OTHER, 2, evidence)

    rim = recognize(L.boundary_complex())
    if rim.kind == TopologyVerdict.CIRCLE and chi == 1:
        checks.append("boundary circle")
        return _verdict(TopologyVerdict.DISK, 2, evidence)
    checks.append(f"boundary is {rim.kind}, euler characteristic {chi}")
    return _verdict(TopologyVerdict.OTHER, 2, evidence)


def _recognize_3d(L: SimplicialComplex, evidence: Dict[str, Any]) -> TopologyVerdict:
    checks = evidence["checks"]
    counts = _codim_one_counts(L)
    if any(c > 2 for c in counts.values()):
        checks.append("triangle in more than two tetrahedra")
        return _verdict(TopologyVerdict.OTHER, 3, evidence)

    boundary = [t for t, c in counts.items() if c == 1]
    on_boundary = set().union(*boundary) if boundary else set()
    for v in L.vertices:
        link = recognize(L.link(v))
        ok = link.is_disk(2) if v in on_boundary else link.is_sphere(2)
        if not ok:
            checks.append(f"link of {v!r} is {link.kind}")
            return _verdict(TopologyVerdict.OTHER, 3, evidence)
    checks.append("vertex links")

    homology = smith_homology(L)
    evidence["homology"] = [g.to_dict() for g in homology]

    if not boundary:
        if is_sphere_homology(homology, 3):
            checks.append("homology of S^3")
            evidence["closed_3_manifold"] = True
            return _verdict(TopologyVerdict.SPHERE, 3, evidence, certified=False)
        return _verdict(TopologyVerdict.CLOSED_3_MANIFOLD, 3, evidence)

    rim = recognize(L.boundary_complex())
    if rim.is_sphere(2) and is_point_homology(homology):
        checks.append("boundary 2-sphere, homology of a point")
        return _verdict(TopologyVerdict.DISK, 3, evidence, certified=False)
    checks.append(f"boundary is {rim.kind}")
    return _verdict(TopologyVerdict.OTHER, 3, evidence)


# ---------------------------------------------------------------------------
# Separating circles in a 2-sphere
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeparatingSphere:
    source: str                     # empty_triangle | vertex_link | induced_cycle
    M: SimplicialComplex
    L1: SimplicialComplex
    L2: SimplicialComplex

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source,
            "M": list(self.M.vertices),
            "L1_triangles": len(self.L1.faces(2)),
            "L2_triangles": len(self.L2.faces(2)),
        }


def _cycle_order(L: SimplicialComplex, cycle: Sequence[Vertex]) -> Tuple[Vertex, ...]:
    """Rotate a cycle to start at its first vertex in L's order, and orient it
    towards the smaller neighbour."""
    index = {v: i for i, v in enumerate(L.vertices)}
    k = min(range(len(cycle)), key=lambda i: index[cycle[i]])
    rotated = list(cycle[k:]) + list(cycle[:k])
    if len(rotated) > 2 and index[rotated[-1]] < index[rotated[1]]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def induced_cycles(L: SimplicialComplex, max_length: int) -> List[Tuple[Vertex, ...]]:
    """Chordless cycles of the 1-skeleton, sorted by (length, vertex indices)."""
    index = {v: i for i, v in enumerate(L.vertices)}
    seen = set()
    out = []
    for cycle in nx.chordless_cycles(L.one_skeleton(), length_bound=max_length):
        if len(cycle) < 3:
            continue
        key = frozenset(cycle)
        if key in seen:
            continue
        seen.add(key)
        out.append(_cycle_order(L, cycle))
    out.sort(key=lambda c: (len(c), sorted(index[v] for v in c)))
    return out


def _candidates(L: SimplicialComplex, max_length: int) -> Iterator[Tuple[str, Tuple[Vertex, ...]]]:
    for triangle in L.empty_simplices(2):
        yield "empty_triangle", triangle
    for v in L.vertices:
        link = L.link(v)
        if link.vertices and L.is_full(link):
            yield "vertex_link", link.vertices
    for cycle in induced_cycles(L, max_length):
        if len(cycle) >= 4:
            yield "induced_cycle", cycle


def _region(L: SimplicialComplex, triangles: Sequence[Face]) -> SimplicialComplex:
    verts = set().union(*triangles)
    return SimplicialComplex.from_faces(triangles, [v for v in L.vertices if v in verts], L.max_faces)


def _split(L: SimplicialComplex, source: str, circle: Sequence[Vertex]) -> Optional[SeparatingSphere]:
    M = L.induced(circle)
    if recognize(M).kind != TopologyVerdict.CIRCLE:
        return None
    cut = {frozenset(e) for e in M.faces(1)}

    triangles = list(L.maximal_faces)
    adjacency = nx.Graph()
    adjacency.add_nodes_from(range(len(triangles)))
    by_edge: Dict[Face, List[int]] = {}
    for i, t in enumerate(triangles):
        for v in t:
            by_edge.setdefault(t - {v}, []).append(i)
    for edge, owners in by_edge.items():
        if edge not in cut and len(owners) == 2:
            adjacency.add_edge(*owners)

    parts = sorted(nx.connected_components(adjacency), key=lambda c: (len(c), min(c)))
    if len(parts) != 2:
        return None
    L1, L2 = (_region(L, [triangles[i] for i in sorted(p)]) for p in parts)

    for region in (L1, L2):
        if not L.is_full(region) or not recognize(region).is_disk(2):
            return None
        if region.boundary_complex().all_faces != M.all_faces:
            return None
    if L1.union(L2).all_faces != L.all_faces or L1.intersection(L2).all_faces != M.all_faces:
        return None
    return SeparatingSphere(source, M, L1, L2)


def separating_sphere_search(L: SimplicialComplex,
                             max_length: int = DEFAULT_MAX_CIRCUIT_LENGTH) -> Optional[SeparatingSphere]:
    """A full circle M splitting the 2-sphere L into two full disks, or None."""
    if not recognize(L).is_sphere(2):
        raise NotASphere("separating circle search needs a triangulated 2-sphere")
    for source, circle in _candidates(L, max_length):
        found = _split(L, source, circle)
        if found is not None:
            logger.debug("separating circle %s from %s", found.M.vertices, source)
            return found
    logger.debug("no separating circle in complex with f-vector %s", L.f_vector)
    return None


def require_separating_sphere(L: SimplicialComplex,
                              max_length: int = DEFAULT_MAX_CIRCUIT_LENGTH) -> SeparatingSphere:
    found = separating_sphere_search(L, max_length)
    if found is None:
        raise NoneFound("no full separating circle", {"f_vector": list(L.f_vector)})
    return found


# ---------------------------------------------------------------------------
# Euclidean circuits
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Circuit:
    vertices: Tuple[str, ...]
    type: SubgroupType

    def to_dict(self) -> Dict[str, Any]:
        return {"vertices": list(self.vertices), "type": self.type.to_dict()}


def euclidean_circuits(L: SimplicialComplex, cm: CoxeterMatrix,
                       max_length: int = DEFAULT_MAX_CIRCUIT_LENGTH,
                       precision_bits: int = DEFAULT_PRECISION_BITS) -> List[Circuit]:
    """Induced cycles of the nerve whose special subgroup is Euclidean.
    Filled triangles are skipped: they span spherical subgroups."""
    out = []
    for cycle in induced_cycles(L, max_length):
        if len(cycle) == 3 and L.contains(cycle):
            continue
        kind = classify_subset(cm, cycle, precision_bits)
        if kind.is_euclidean:
            out.append(Circuit(tuple(cycle), kind))
    logger.debug("%d Euclidean circuits (length <= %d)", len(out), max_length)
    return out
