"""
modules/simplicial.py
---------------------
Finite abstract simplicial complexes stored by their maximal faces, plus the
nerve of a Coxeter system.

Vertex order is explicit and drives every deterministic listing (faces,
boundary matrices, JSON).
"""
from __future__ import annotations

import itertools
import logging
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from models.errors import ComplexTooLarge, NotASubcomplex
from modules.coxeter import SphericalPoset

logger = logging.getLogger(__name__)

Vertex = Hashable
Face = FrozenSet[Vertex]

DEFAULT_MAX_FACES = int(os.getenv("COXWL2_MAX_FACES", "500000"))


def _default_order(vertices: Iterable[Vertex]) -> Tuple[Vertex, ...]:
    vs = list(vertices)
    try:
        return tuple(sorted(vs))  # type: ignore[type-var]
    except TypeError:
        return tuple(sorted(vs, key=repr))


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: Tuple[Vertex, ...]
    maximal_faces: Tuple[Face, ...]
    max_faces: int = field(default=DEFAULT_MAX_FACES, compare=False, repr=False)

    # ---- construction ------------------------------------------------------

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[Vertex]],
                   vertices: Optional[Sequence[Vertex]] = None,
                   max_faces: int = DEFAULT_MAX_FACES) -> "SimplicialComplex":
        sets = {frozenset(f) for f in faces}
        sets.discard(frozenset())
        by_size = sorted(sets, key=len, reverse=True)
        maximal: List[Face] = []
        for f in by_size:
            if not any(f < g for g in maximal if len(g) > len(f)):
                maximal.append(f)

        covered = set().union(*maximal) if maximal else set()
        if vertices is None:
            order = _default_order(covered)
        else:
            order = tuple(vertices)
            if len(set(order)) != len(order):
                raise ValueError("duplicate vertices")
            stray = covered - set(order)
            if stray:
                raise NotASubcomplex(f"faces use unlisted vertices {sorted(map(repr, stray))}")
            # listed but uncovered vertices become isolated points
            maximal.extend(frozenset([v]) for v in order if v not in covered)

        index = {v: i for i, v in enumerate(order)}
        maximal.sort(key=lambda f: sorted(index[v] for v in f))
        bound = sum(2 ** len(f) - 1 for f in maximal)
        if bound > max_faces:
            raise ComplexTooLarge(f"complex may have {bound} faces, cap is {max_faces}",
                                  {"bound": bound, "max_faces": max_faces})
        return cls(order, tuple(maximal), max_faces)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls((), ())

    @classmethod
    def simplex(cls, vertices: Sequence[Vertex]) -> "SimplicialComplex":
        return cls.from_faces([vertices], vertices)

    @classmethod
    def boundary_of_simplex(cls, vertices: Sequence[Vertex]) -> "SimplicialComplex":
        vs = list(vertices)
        return cls.from_faces([[v for v in vs if v != w] for w in vs], vs)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], max_faces: int = DEFAULT_MAX_FACES) -> "SimplicialComplex":
        return cls.from_faces(data["maximal_faces"], data.get("vertices"), max_faces)

    def to_dict(self, label: Callable[[Vertex], Any] = lambda v: v) -> Dict[str, Any]:
        return {
            "vertices": [label(v) for v in self.vertices],
            "maximal_faces": [[label(v) for v in self.ordered(f)] for f in self.maximal_faces],
        }

    # ---- basic queries -----------------------------------------------------

    @cached_property
    def _index(self) -> Dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def ordered(self, face: Iterable[Vertex]) -> Tuple[Vertex, ...]:
        return tuple(sorted(face, key=self._index.__getitem__))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.maximal_faces), default=0) - 1

    @cached_property
    def all_faces(self) -> FrozenSet[Face]:
        out = set()
        for f in self.maximal_faces:
            items = list(f)
            for k in range(1, len(items) + 1):
                out.update(frozenset(c) for c in itertools.combinations(items, k))
        return frozenset(out)

    @cached_property
    def _faces_by_dim(self) -> Dict[int, List[Tuple[Vertex, ...]]]:
        out: Dict[int, List[Tuple[Vertex, ...]]] = {}
        for f in self.all_faces:
            out.setdefault(len(f) - 1, []).append(self.ordered(f))
        for k in out:
            out[k].sort(key=lambda t: [self._index[v] for v in t])
        return out

    def faces(self, k: int) -> List[Tuple[Vertex, ...]]:
        return list(self._faces_by_dim.get(k, []))

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(self.faces(k)) for k in range(self.dimension + 1))

    def contains(self, face: Iterable[Vertex]) -> bool:
        f = frozenset(face)
        return not f or f in self.all_faces

    def is_pure(self) -> bool:
        return len({len(f) for f in self.maximal_faces}) <= 1

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector))

    def one_skeleton(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.faces(1))
        return graph

    def is_connected(self) -> bool:
        return bool(self.vertices) and nx.is_connected(self.one_skeleton())

    def is_boundary_of_simplex(self) -> bool:
        n = len(self.vertices)
        return n >= 2 and len(self.maximal_faces) == n and all(len(f) == n - 1 for f in self.maximal_faces)

    # ---- subcomplexes ------------------------------------------------------

    def induced(self, A: Iterable[Vertex]) -> "SimplicialComplex":
        """Full subcomplex spanned by the vertex set A."""
        A = set(A)
        missing = A - set(self.vertices)
        if missing:
            raise NotASubcomplex(f"vertices {sorted(map(repr, missing))} are not in the complex")
        return SimplicialComplex.from_faces(
            [f & A for f in self.maximal_faces if f & A],
            [v for v in self.vertices if v in A],
            self.max_faces,
        )

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(other.contains(f) for f in self.maximal_faces)

    def is_full(self, A: Union["SimplicialComplex", Iterable[Vertex]]) -> bool:
        """A vertex set always spans a full subcomplex; a subcomplex K is full
        iff every simplex of L with vertices in K lies in K."""
        if isinstance(A, SimplicialComplex):
            if not A.is_subcomplex_of(self):
                raise NotASubcomplex("argument is not a subcomplex")
            return self.induced(A.vertices).all_faces == A.all_faces
        self.induced(A)
        return True

    def link(self, v: Vertex) -> "SimplicialComplex":
        faces = [f - {v} for f in self.maximal_faces if v in f and len(f) > 1]
        verts = set().union(*faces) if faces else set()
        return SimplicialComplex.from_faces(faces, [u for u in self.vertices if u in verts], self.max_faces)

    def star(self, v: Vertex) -> "SimplicialComplex":
        faces = [f for f in self.maximal_faces if v in f]
        verts = set().union(*faces)
        return SimplicialComplex.from_faces(faces, [u for u in self.vertices if u in verts], self.max_faces)

    def boundary_complex(self) -> "SimplicialComplex":
        """Codimension-one faces lying in exactly one top-dimensional face."""
        d = self.dimension
        if d < 1:
            return SimplicialComplex.empty()
        counts: Dict[Face, int] = {}
        for f in self.maximal_faces:
            if len(f) == d + 1:
                for v in f:
                    g = f - {v}
                    counts[g] = counts.get(g, 0) + 1
        faces = [g for g, c in counts.items() if c == 1]
        verts = set().union(*faces) if faces else set()
        return SimplicialComplex.from_faces(faces, [u for u in self.vertices if u in verts], self.max_faces)

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        order = list(self.vertices) + [v for v in other.vertices if v not in self._index]
        return SimplicialComplex.from_faces(list(self.maximal_faces) + list(other.maximal_faces), order,
                                            self.max_faces)

    def intersection(self, other: "SimplicialComplex") -> "SimplicialComplex":
        faces = [f & g for f in self.maximal_faces for g in other.maximal_faces if f & g]
        verts = set().union(*faces) if faces else set()
        return SimplicialComplex.from_faces(faces, [v for v in self.vertices if v in verts], self.max_faces)

    # ---- constructions -----------------------------------------------------

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> "SimplicialComplex":
        return SimplicialComplex.from_faces(
            [[mapping[v] for v in f] for f in self.maximal_faces],
            [mapping[v] for v in self.vertices],
            self.max_faces,
        )

    def cone(self, apex: Vertex) -> "SimplicialComplex":
        if apex in self._index:
            raise ValueError(f"apex {apex!r} is already a vertex")
        faces = [f | {apex} for f in self.maximal_faces] or [frozenset([apex])]
        return SimplicialComplex.from_faces(faces, (apex,) + self.vertices, self.max_faces)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        if set(self.vertices) & set(other.vertices):
            raise ValueError("join requires disjoint vertex sets")
        if not self.maximal_faces:
            return other
        if not other.maximal_faces:
            return self
        faces = [f | g for f in self.maximal_faces for g in other.maximal_faces]
        return SimplicialComplex.from_faces(faces, self.vertices + other.vertices, self.max_faces)

    # ---- flagness ----------------------------------------------------------

    def is_flag(self) -> bool:
        graph = self.one_skeleton()
        return all(self.contains(clique) for clique in nx.find_cliques(graph))

    def empty_simplices(self, k: int) -> List[Tuple[Vertex, ...]]:
        """(k+1)-cliques of the 1-skeleton that span no k-simplex."""
        out = []
        for clique in nx.enumerate_all_cliques(self.one_skeleton()):
            if len(clique) > k + 1:
                break
            if len(clique) == k + 1 and not self.contains(clique):
                out.append(self.ordered(clique))
        out.sort(key=lambda t: [self._index[v] for v in t])
        return out


# ---------------------------------------------------------------------------
# Nerve and the star decomposition
# ---------------------------------------------------------------------------

def nerve(poset: SphericalPoset, max_faces: int = DEFAULT_MAX_FACES) -> SimplicialComplex:
    """Simplices are the nonempty spherical subsets."""
    cm = poset.cm
    faces = [T for T in poset.maximal() if T]
    present = set().union(*faces) if faces else set()
    return SimplicialComplex.from_faces(faces, [s for s in cm.generators if s in present], max_faces)


@dataclass(frozen=True)
class StarDecomposition:
    vertex: Vertex
    star: SimplicialComplex
    rest: SimplicialComplex
    link: SimplicialComplex
    link_is_full: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertex": self.vertex,
            "star_f_vector": list(self.star.f_vector),
            "rest_f_vector": list(self.rest.f_vector),
            "link": self.link.to_dict(),
            "link_is_full": self.link_is_full,
        }


def star_decomposition(L: SimplicialComplex, v: Vertex) -> StarDecomposition:
    """L = St(v) ∪ L_{S-v} with St(v) ∩ L_{S-v} = Lk(v)."""
    star = L.star(v)
    rest = L.induced([u for u in L.vertices if u != v])
    link = L.link(v)
    full = bool(link.vertices) and L.is_full(link)
    return StarDecomposition(v, star, rest, link, full)
