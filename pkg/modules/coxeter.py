"""
modules/coxeter.py
------------------
Coxeter systems (W, S): validated label matrices, classification of special
subgroups W_T (spherical / Euclidean / Lanner / other infinite), the poset of
spherical subsets, conjugacy classes of generators, product decomposition and
the rank-3/rank-4 Lanner census.
"""
from __future__ import annotations

import itertools
import logging
import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
from networkx.algorithms.isomorphism import categorical_edge_match

from models.errors import (
    BadDiagonal,
    BadGenerator,
    InternalDisagreement,
    LabelOutOfRange,
    NonSymmetric,
    TooManyGenerators,
)
from modules import diagrams
from modules.cyclotomic import DEFAULT_PRECISION_BITS
from modules.gram import GramMatrix, Signature, gram_from_labels, label_signature
from utils.parallel import parallel_map

logger = logging.getLogger(__name__)

INFINITY = math.inf
DEFAULT_MAX_GENERATORS = 24

Label = Union[int, float]
Subset = FrozenSet[str]

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
_INFINITY_TOKENS = {"inf", "infinity", "∞", "oo"}


def parse_label(raw: Any) -> Label:
    if isinstance(raw, bool):
        raise LabelOutOfRange(f"label {raw!r} is not an integer", {"label": raw})
    if isinstance(raw, int):
        return raw
    if isinstance(raw, float):
        if raw == math.inf:
            return INFINITY
        if raw.is_integer():
            return int(raw)
    if isinstance(raw, str):
        token = raw.strip().lower()
        if token in _INFINITY_TOKENS:
            return INFINITY
        if token.isdigit():
            return int(token)
    raise LabelOutOfRange(f"label {raw!r} is neither an integer nor infinity", {"label": raw})


def format_label(m: Label) -> Union[int, str]:
    return "inf" if m == INFINITY else int(m)


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoxeterMatrix:
    generators: Tuple[str, ...]
    labels: Tuple[Tuple[Label, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {s: i for i, s in enumerate(self.generators)}

    def index(self, s: str) -> int:
        try:
            return self._index[s]
        except KeyError:
            raise BadGenerator(f"unknown generator {s!r}", {"generator": s}) from None

    def m(self, s: str, t: str) -> Label:
        return self.labels[self.index(s)][self.index(t)]

    def subset(self, names: Iterable[str]) -> Subset:
        out = frozenset(names)
        for s in out:
            self.index(s)
        return out

    def ordered(self, names: Iterable[str]) -> Tuple[str, ...]:
        return tuple(sorted(names, key=self.index))

    def submatrix(self, names: Iterable[str]) -> Tuple[Tuple[Label, ...], ...]:
        idx = [self.index(s) for s in self.ordered(names)]
        return tuple(tuple(self.labels[i][j] for j in idx) for i in idx)

    def restrict(self, names: Iterable[str]) -> "CoxeterMatrix":
        order = self.ordered(names)
        return CoxeterMatrix(order, self.submatrix(order))

    def all_labels(self) -> List[Label]:
        return [self.labels[i][j] for i in range(self.rank) for j in range(i + 1, self.rank)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "generators": list(self.generators),
            "matrix": [[format_label(m) for m in row] for row in self.labels],
        }


@dataclass(frozen=True)
class SubgroupType:
    kind: str                       # spherical | euclidean | lanner | other_infinite
    signature: Signature
    order: Optional[int] = None
    components: Tuple[str, ...] = ()
    rank: int = 0

    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    LANNER = "lanner"
    OTHER = "other_infinite"

    @property
    def is_spherical(self) -> bool:
        return self.kind == self.SPHERICAL

    @property
    def is_euclidean(self) -> bool:
        return self.kind == self.EUCLIDEAN

    @property
    def is_lanner(self) -> bool:
        return self.kind == self.LANNER

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"kind": self.kind, "rank": self.rank,
                               "signature": list(self.signature)}
        if self.order is not None:
            out["order"] = self.order
        if self.components:
            out["components"] = list(self.components)
        return out


@dataclass(frozen=True)
class SphericalPoset:
    cm: CoxeterMatrix
    types: Tuple[Tuple[Subset, SubgroupType], ...]

    @cached_property
    def _lookup(self) -> Dict[Subset, SubgroupType]:
        return dict(self.types)

    @property
    def elements(self) -> List[Subset]:
        return [T for T, _ in self.types]

    def __contains__(self, T: object) -> bool:
        return frozenset(T) in self._lookup  # type: ignore[arg-type]

    def __len__(self) -> int:
        return len(self.types)

    def type_of(self, T: Iterable[str]) -> SubgroupType:
        return self._lookup[frozenset(T)]

    def maximal(self) -> List[Subset]:
        elements = self.elements
        return [T for T in elements if not any(T < U for U in elements)]

    def restrict(self, U: Iterable[str]) -> "SphericalPoset":
        """The poset S(U) of spherical subsets contained in U."""
        U = frozenset(U)
        return SphericalPoset(self.cm, tuple((T, t) for T, t in self.types if T <= U))

    def at_least(self, T: Iterable[str]) -> List[Subset]:
        T = frozenset(T)
        return [U for U in self.elements if T <= U]

    def sort_key(self, T: Iterable[str]) -> Tuple[int, Tuple[int, ...]]:
        idx = tuple(sorted(self.cm.index(s) for s in T))
        return len(idx), idx


@dataclass(frozen=True)
class GeneratorClasses:
    blocks: Tuple[Tuple[str, ...], ...]

    @cached_property
    def _class_of(self) -> Dict[str, int]:
        return {s: i for i, block in enumerate(self.blocks) for s in block}

    def class_of(self, s: str) -> int:
        return self._class_of[s]

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def variable_names(self) -> Tuple[str, ...]:
        if len(self.blocks) == 1:
            return ("q",)
        return tuple(f"q_{block[0]}" for block in self.blocks)

    def multidegree(self, word: Iterable[str]) -> Tuple[int, ...]:
        degree = [0] * len(self.blocks)
        for s in word:
            degree[self.class_of(s)] += 1
        return tuple(degree)

    def to_dict(self) -> Dict[str, Any]:
        return {name: list(block) for name, block in zip(self.variable_names, self.blocks)}


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def validate_matrix(raw: Sequence[Sequence[Any]],
                    generators: Optional[Sequence[str]] = None,
                    max_generators: int = DEFAULT_MAX_GENERATORS) -> CoxeterMatrix:
    n = len(raw)
    if any(len(row) != n for row in raw):
        raise NonSymmetric("label matrix is not square", {"rows": [len(r) for r in raw]})
    if n == 0:
        raise BadGenerator("empty generating set")
    if n > max_generators:
        raise TooManyGenerators(f"{n} generators exceed the cap {max_generators}",
                                {"rank": n, "max_generators": max_generators})

    names = tuple(generators) if generators is not None else tuple(f"s{i + 1}" for i in range(n))
    if len(names) != n:
        raise BadGenerator("generator list and matrix size differ", {"generators": list(names)})
    if len(set(names)) != n:
        raise BadGenerator("generator names are not unique", {"generators": list(names)})
    bad = [s for s in names if not isinstance(s, str) or not _NAME_RE.match(s)]
    if bad:
        raise BadGenerator(f"invalid generator names {bad}", {"generators": bad})

    labels: List[List[Label]] = []
    for i, row in enumerate(raw):
        parsed: List[Label] = []
        for j, value in enumerate(row):
            if i == j:
                if isinstance(value, bool) or value not in (1, "1"):
                    raise BadDiagonal(f"diagonal entry at {names[i]} is {value!r}, expected 1",
                                      {"generator": names[i], "label": value})
                parsed.append(1)
                continue
            m = parse_label(value)
            if m != INFINITY and m < 2:
                raise LabelOutOfRange(f"label m({names[i]},{names[j]}) = {m} is below 2",
                                      {"pair": [names[i], names[j]], "label": m})
            parsed.append(m)
        labels.append(parsed)

    for i in range(n):
        for j in range(i + 1, n):
            if labels[i][j] != labels[j][i]:
                raise NonSymmetric(
                    f"m({names[i]},{names[j]}) != m({names[j]},{names[i]})",
                    {"pair": [names[i], names[j]],
                     "labels": [format_label(labels[i][j]), format_label(labels[j][i])]},
                )
    return CoxeterMatrix(names, tuple(tuple(row) for row in labels))


def diagram_components(cm: CoxeterMatrix, T: Iterable[str]) -> List[Tuple[str, ...]]:
    """Irreducible components of W_T (connected by labels other than 2)."""
    members = cm.ordered(T)
    graph = nx.Graph()
    graph.add_nodes_from(members)
    graph.add_edges_from((s, t) for s, t in itertools.combinations(members, 2) if cm.m(s, t) != 2)
    comps = [cm.ordered(c) for c in nx.connected_components(graph)]
    return sorted(comps, key=lambda c: cm.index(c[0]))


@dataclass(frozen=True)
class _ComponentType:
    kind: str
    signature: Signature
    name: Optional[str]
    order: Optional[int]


@lru_cache(maxsize=None)
def _component_type(labels: Tuple[Tuple[Label, ...], ...], max_bits: int) -> _ComponentType:
    signature = label_signature(labels, max_bits)
    n_plus, n_zero, n_minus = signature
    if n_zero == 0 and n_minus == 0:
        gram_kind = diagrams.SPHERICAL
    elif n_minus == 0 and n_zero == 1:
        gram_kind = diagrams.AFFINE
    else:
        gram_kind = "other"

    match = diagrams.identify(labels)
    table_kind = match.kind if match else "other"
    if table_kind != gram_kind:
        raise InternalDisagreement(
            "Gram signature and diagram tables disagree",
            {"labels": [[format_label(m) for m in row] for row in labels],
             "gram": gram_kind, "table": table_kind, "signature": list(signature)},
        )
    return _ComponentType(gram_kind, signature,
                          match.name if match else None,
                          match.order if match else None)


def gram_matrix(cm: CoxeterMatrix, T: Optional[Iterable[str]] = None) -> GramMatrix:
    names = cm.ordered(cm.generators if T is None else T)
    return gram_from_labels(names, cm.submatrix(names))


@lru_cache(maxsize=None)
def _classify(cm: CoxeterMatrix, T: Subset, max_bits: int) -> SubgroupType:
    if not T:
        return SubgroupType(SubgroupType.SPHERICAL, (0, 0, 0), order=1)

    parts = [_component_type(cm.submatrix(c), max_bits) for c in diagram_components(cm, T)]
    signature = (sum(p.signature[0] for p in parts),
                 sum(p.signature[1] for p in parts),
                 sum(p.signature[2] for p in parts))
    names = tuple(p.name for p in parts if p.name)

    if all(p.kind == diagrams.SPHERICAL for p in parts):
        return SubgroupType(SubgroupType.SPHERICAL, signature,
                            order=math.prod(p.order or 1 for p in parts),
                            components=names, rank=len(T))
    if all(p.kind == diagrams.AFFINE for p in parts) and len(T) >= 3:
        return SubgroupType(SubgroupType.EUCLIDEAN, signature, components=names, rank=len(T))
    if signature[2] >= 1 and all(_classify(cm, T - {s}, max_bits).is_spherical for s in T):
        return SubgroupType(SubgroupType.LANNER, signature, rank=len(T))
    return SubgroupType(SubgroupType.OTHER, signature, components=names, rank=len(T))


def classify_subset(cm: CoxeterMatrix, T: Iterable[str],
                    precision_bits: int = DEFAULT_PRECISION_BITS) -> SubgroupType:
    return _classify(cm, cm.subset(T), precision_bits)


def spherical_subsets(cm: CoxeterMatrix, threads: int = 1,
                      precision_bits: int = DEFAULT_PRECISION_BITS) -> SphericalPoset:
    """Upward BFS in the subset lattice; a candidate is classified only when
    every facet is already known to be spherical."""
    found: Dict[Subset, SubgroupType] = {frozenset(): classify_subset(cm, ())}
    level: List[Subset] = [frozenset()]
    while level:
        candidates = []
        for T in level:
            top = max((cm.index(s) for s in T), default=-1)
            for s in cm.generators[top + 1:]:
                U = T | {s}
                if all(U - {u} in found for u in U):
                    candidates.append(U)
        types = parallel_map(lambda U: classify_subset(cm, U, precision_bits), candidates, threads)
        level = []
        for U, kind in zip(candidates, types):
            if kind.is_spherical:
                found[U] = kind
                level.append(U)
        logger.debug("spherical subsets of size %d: %d", len(level[0]) if level else -1, len(level))

    def key(T: Subset) -> Tuple[int, Tuple[int, ...]]:
        return len(T), tuple(sorted(cm.index(s) for s in T))

    return SphericalPoset(cm, tuple((T, found[T]) for T in sorted(found, key=key)))


def generator_classes(cm: CoxeterMatrix) -> GeneratorClasses:
    graph = nx.Graph()
    graph.add_nodes_from(cm.generators)
    for s, t in itertools.combinations(cm.generators, 2):
        m = cm.m(s, t)
        if m != INFINITY and m % 2 == 1:
            graph.add_edge(s, t)
    blocks = sorted((cm.ordered(c) for c in nx.connected_components(graph)), key=lambda b: cm.index(b[0]))
    return GeneratorClasses(tuple(blocks))


def product_decomposition(cm: CoxeterMatrix) -> List[Tuple[str, ...]]:
    return diagram_components(cm, cm.generators)


def star_generators(cm: CoxeterMatrix, t: str) -> Subset:
    """St(t) = {s : m_st < infinity}, t included."""
    return frozenset(s for s in cm.generators if cm.m(s, t) != INFINITY)


# ---------------------------------------------------------------------------
# Lanner census
# ---------------------------------------------------------------------------

def _diagram(cm: CoxeterMatrix) -> nx.Graph:
    return diagrams.diagram_graph(cm.labels)


def _canonical_key(cm: CoxeterMatrix) -> Tuple[Label, ...]:
    n = cm.rank
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(cm.labels[perm[i]][perm[j]] for i in range(n) for j in range(i + 1, n))
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def _census_candidate(labels: Tuple[int, ...], rank: int, precision_bits: int) -> Optional[CoxeterMatrix]:
    raw = [[1] * rank for _ in range(rank)]
    for (i, j), m in zip(itertools.combinations(range(rank), 2), labels):
        raw[i][j] = raw[j][i] = m
    cm = validate_matrix(raw)
    if not nx.is_connected(_diagram(cm)):
        return None
    gens = cm.generators
    if not all(classify_subset(cm, set(gens) - {s}, precision_bits).is_spherical for s in gens):
        return None
    return cm if classify_subset(cm, gens, precision_bits).is_lanner else None


def lanner_census(max_label: int = 5, rank: int = 4, threads: int = 1,
                  precision_bits: int = DEFAULT_PRECISION_BITS) -> List[CoxeterMatrix]:
    """All rank-`rank` Lanner matrices with labels in 2..max_label, one per
    diagram isomorphism class, sorted by canonical label tuple."""
    if rank not in (3, 4):
        raise ValueError(f"census supports rank 3 or 4, got {rank}")
    if max_label < 5:
        logger.warning("max_label=%d below 5: the census will be incomplete", max_label)

    pairs = rank * (rank - 1) // 2
    grid = list(itertools.product(range(2, max_label + 1), repeat=pairs))
    candidates = parallel_map(lambda ls: _census_candidate(ls, rank, precision_bits), grid, threads)

    edge_match = categorical_edge_match("label", None)
    kept: List[CoxeterMatrix] = []
    for cm in candidates:
        if cm is None:
            continue
        graph = _diagram(cm)
        if any(nx.is_isomorphic(graph, _diagram(other), edge_match=edge_match) for other in kept):
            continue
        kept.append(cm)
    kept.sort(key=_canonical_key)
    logger.info("Lanner census (rank %d, labels <= %d): %d diagrams", rank, max_label, len(kept))
    return kept
