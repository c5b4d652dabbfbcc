"""
davis/cells.py
--------------
Sigma(U) as a complex of Coxeter cells.

A cell of type T is a coset of W_T. Cosets are taken on the left-action side,
W_T w, which is the image of w^{-1} W_T under inversion; incidence is coset
containment. Homology is computed on the order complex of the cell poset.
For infinite W_U only the cosets lying wholly inside a ball are kept and the
complex is flagged partial.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from modules.coxeter import CoxeterMatrix, Subset, spherical_subsets
from modules.cyclotomic import DEFAULT_PRECISION_BITS
from modules.growth import DEFAULT_MAX_ORDER, CayleyTable, cayley_table
from modules.simplicial import SimplicialComplex

from .chamber import maximal_chains

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cell:
    id: int
    type: Subset
    elements: FrozenSet[int]        # indices into the Cayley table
    representative: int             # shortest element of the coset

    @property
    def dimension(self) -> int:
        return len(self.type)


@dataclass(frozen=True)
class SigmaComplex:
    cm: CoxeterMatrix
    U: Tuple[str, ...]
    table: CayleyTable
    cells: Tuple[Cell, ...]
    facets: Tuple[Tuple[int, ...], ...]     # codimension-one faces of each cell
    partial: bool = False

    def cells_of_type(self, T: Iterable[str]) -> List[Cell]:
        T = frozenset(T)
        return [c for c in self.cells if c.type == T]

    def closure(self, ids: Iterable[int]) -> Set[int]:
        seen: Set[int] = set()
        stack = list(ids)
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            stack.extend(self.facets[c])
        return seen

    @cached_property
    def _cover(self) -> nx.DiGraph:
        cover = nx.DiGraph()
        cover.add_nodes_from(c.id for c in self.cells)
        cover.add_edges_from((f, c) for c in range(len(self.cells)) for f in self.facets[c])
        return cover

    def order_complex(self, ids: Optional[Iterable[int]] = None) -> SimplicialComplex:
        """Barycentric triangulation of a downward-closed set of cells."""
        ids = set(range(len(self.cells))) if ids is None else set(ids)
        if not ids:
            return SimplicialComplex.empty()
        cover = self._cover.subgraph(ids)
        bottoms = [c for c in sorted(ids) if self.cells[c].dimension == 0]
        tops = [c for c in sorted(ids) if cover.out_degree(c) == 0]
        return SimplicialComplex.from_faces(maximal_chains(cover, bottoms, tops), sorted(ids))

    def to_dict(self) -> Dict[str, Any]:
        out = self.order_complex().to_dict()
        out["U"] = list(self.U)
        out["partial"] = self.partial
        out["cells"] = [
            {"id": c.id, "type": list(self.cm.ordered(c.type)), "dimension": c.dimension,
             "representative": list(self.table.elements[c.representative].word)}
            for c in self.cells
        ]
        return out


def build_sigma(cm: CoxeterMatrix, U: Optional[Iterable[str]] = None, radius: Optional[int] = None,
                max_order: int = DEFAULT_MAX_ORDER, precision_bits: int = DEFAULT_PRECISION_BITS,
                ambient: bool = False) -> SigmaComplex:
    U = cm.ordered(cm.generators if U is None else U)
    poset = spherical_subsets(cm, precision_bits=precision_bits).restrict(U)
    table = cayley_table(cm, U, radius, max_order, precision_bits, ambient)
    position = {s: i for i, s in enumerate(table.generators)}

    cells: List[Cell] = []
    cell_of: Dict[Tuple[Subset, int], int] = {}
    for T in poset.elements:
        order = poset.type_of(T).order
        graph = nx.Graph()
        graph.add_nodes_from(range(len(table)))
        for s in T:
            row = table.left[position[s]]
            graph.add_edges_from((i, j) for i, j in enumerate(row) if j >= 0)
        for members in sorted(nx.connected_components(graph), key=min):
            if len(members) != order:
                continue
            cell = Cell(len(cells), T, frozenset(members), min(members))
            cells.append(cell)
            for i in members:
                cell_of[(T, i)] = cell.id

    facets = tuple(
        tuple(sorted({cell_of[(c.type - {s}, i)] for s in c.type for i in c.elements}))
        for c in cells
    )
    logger.debug("Sigma(%s): %d cells%s", ",".join(U), len(cells), " (partial)" if table.partial else "")
    if table.partial:
        logger.warning("⚠️ Sigma(%s) truncated to a ball of radius %s", ",".join(U), radius)
    return SigmaComplex(cm, U, table, tuple(cells), facets, table.partial)


def cell_boundary(sigma: SigmaComplex, cell: int) -> SimplicialComplex:
    """Order complex of the proper faces of one cell."""
    faces = sigma.closure([cell]) - {cell}
    return sigma.order_complex(faces)
