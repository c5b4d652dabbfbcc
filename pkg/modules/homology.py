"""
modules/homology.py
-------------------
Integral simplicial homology of a complex or of a pair (L, A).

Boundary matrices are kept sparse. Unit pivots are eliminated first (the
usual case for simplicial boundaries); whatever remains is handed to sympy's
Smith normal form over ZZ.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Set, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from models.errors import HomologyTooLarge, NotASubcomplex
from modules.simplicial import SimplicialComplex

logger = logging.getLogger(__name__)

# sympy's invariant_factors recurses once per pivot
_MAX_DENSE_CORE = 400

SparseRows = Dict[int, Dict[int, int]]


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: Tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_dict(self) -> Dict[str, Any]:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) or "0"


def _eliminate_units(rows: SparseRows) -> Tuple[int, SparseRows]:
    cols: Dict[int, Set[int]] = defaultdict(set)
    for r, row in rows.items():
        for c in row:
            cols[c].add(r)

    rank = 0
    changed = True
    while changed:
        changed = False
        for r in sorted(rows):
            row = rows.get(r)
            if row is None:
                continue
            pivot = next((c for c in sorted(row) if row[c] in (1, -1)), None)
            if pivot is None:
                continue
            sign = row[pivot]
            for r2 in sorted(cols[pivot] - {r}):
                row2 = rows[r2]
                factor = row2[pivot] * sign
                for c, v in row.items():
                    new = row2.get(c, 0) - factor * v
                    if new:
                        row2[c] = new
                        cols[c].add(r2)
                    elif c in row2:
                        del row2[c]
                        cols[c].discard(r2)
                if not row2:
                    del rows[r2]
            # the pivot column is now zero off row r; column operations clear the row
            for c in row:
                cols[c].discard(r)
            del rows[r]
            cols.pop(pivot, None)
            rank += 1
            changed = True
    return rank, rows


def smith_invariants(rows: SparseRows) -> Tuple[int, Tuple[int, ...]]:
    """(rank, torsion coefficients > 1) of a sparse integer matrix."""
    rows = {r: dict(row) for r, row in rows.items() if row}
    rank, core = _eliminate_units(rows)
    if not core:
        return rank, ()

    row_ids = sorted(core)
    col_ids = sorted({c for row in core.values() for c in row})
    if min(len(row_ids), len(col_ids)) > _MAX_DENSE_CORE:
        raise HomologyTooLarge("Smith normal form core too large",
                               {"rows": len(row_ids), "cols": len(col_ids)})
    dense = [[ZZ(core[r].get(c, 0)) for c in col_ids] for r in row_ids]
    factors = invariant_factors(DomainMatrix(dense, (len(row_ids), len(col_ids)), ZZ))
    values = [abs(int(f)) for f in factors if f]
    logger.debug("Smith core %dx%d -> %s", len(row_ids), len(col_ids), values)
    return rank + len(values), tuple(v for v in values if v > 1)


def boundary_matrix(basis_high: List[Tuple[Any, ...]],
                    index_low: Dict[frozenset, int]) -> SparseRows:
    """Sparse boundary map, rows = (k-1)-faces, columns = k-faces; faces
    missing from `index_low` (relative part) are dropped."""
    rows: SparseRows = {}
    for j, face in enumerate(basis_high):
        full = frozenset(face)
        for i, v in enumerate(face):
            r = index_low.get(full - {v})
            if r is not None:
                rows.setdefault(r, {})[j] = -1 if i % 2 else 1
    return rows


def smith_homology(L: SimplicialComplex, A: Optional[SimplicialComplex] = None) -> List[HomologyGroup]:
    """H_0 .. H_dim of L, or of the pair (L, A) when A is given."""
    if A is not None and not A.is_subcomplex_of(L):
        raise NotASubcomplex("relative homology needs A to be a subcomplex of L")
    d = L.dimension
    if d < 0:
        return []
    excluded = A.all_faces if A is not None else frozenset()
    basis = {k: [f for f in L.faces(k) if frozenset(f) not in excluded] for k in range(d + 1)}
    index = {k: {frozenset(f): i for i, f in enumerate(basis[k])} for k in range(d + 1)}

    invariants: Dict[int, Tuple[int, Tuple[int, ...]]] = {}
    for k in range(1, d + 1):
        invariants[k] = smith_invariants(boundary_matrix(basis[k], index[k - 1]))

    groups = []
    for k in range(d + 1):
        rank_out = invariants[k][0] if k >= 1 else 0
        rank_in, torsion = invariants.get(k + 1, (0, ()))
        groups.append(HomologyGroup(len(basis[k]) - rank_out - rank_in, torsion))
    return groups


def is_point_homology(groups: List[HomologyGroup]) -> bool:
    return bool(groups) and groups[0] == HomologyGroup(1) and all(g.is_trivial for g in groups[1:])


def is_sphere_homology(groups: List[HomologyGroup], n: int) -> bool:
    """Homology of S^n, padding missing top degrees with zeros."""
    if n == 0:
        return bool(groups) and groups[0] == HomologyGroup(2) and all(g.is_trivial for g in groups[1:])
    padded = list(groups) + [HomologyGroup(0)] * max(0, n + 1 - len(groups))
    return (padded[0] == HomologyGroup(1) and padded[n] == HomologyGroup(1)
            and all(g.is_trivial for k, g in enumerate(padded) if k not in (0, n)))
