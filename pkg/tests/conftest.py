import itertools
import json

import pytest

from modules.coxeter import validate_matrix
from modules.simplicial import SimplicialComplex

# ------------------------- Builders ------------------------- #


def matrix(raw, generators=None):
    return validate_matrix(raw, generators)


def right_angled(n, edges):
    """Right-angled matrix: label 2 on the edges of a graph, infinity elsewhere."""
    edges = {frozenset(e) for e in edges}
    raw = [[1 if i == j else (2 if frozenset((i, j)) in edges else "inf") for j in range(n)]
           for i in range(n)]
    return validate_matrix(raw)


def cross_polytope_edges(n_pairs):
    n = 2 * n_pairs
    antipodes = {frozenset((2 * k, 2 * k + 1)) for k in range(n_pairs)}
    return [(i, j) for i, j in itertools.combinations(range(n), 2) if frozenset((i, j)) not in antipodes]


ICOSAHEDRON_EDGES = (
    [(0, i) for i in range(1, 6)]
    + [(i, i % 5 + 1) for i in range(1, 6)]
    + [(5 + i, 5 + i % 5 + 1) for i in range(1, 6)]
    + [(11, 5 + i) for i in range(1, 6)]
    + [(i, 5 + i) for i in range(1, 6)]
    + [(i, 5 + i % 5 + 1) for i in range(1, 6)]
)


def flag_complex(n, edges):
    """Clique complex of a graph on 0..n-1 (cliques up to size 4)."""
    edges = {frozenset(e) for e in edges}
    faces = [(v,) for v in range(n)]
    for k in (2, 3, 4):
        for c in itertools.combinations(range(n), k):
            if all(frozenset(p) in edges for p in itertools.combinations(c, 2)):
                faces.append(c)
    return SimplicialComplex.from_faces(faces, list(range(n)))


def write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


# ------------------------- Coxeter fixtures ------------------------- #

@pytest.fixture
def a2():
    return matrix([[1, 3], [3, 1]])


@pytest.fixture
def b2():
    return matrix([[1, 4], [4, 1]])


@pytest.fixture
def dinf():
    return matrix([[1, "inf"], ["inf", 1]])


@pytest.fixture
def a3():
    return matrix([[1, 3, 2], [3, 1, 3], [2, 3, 1]])


@pytest.fixture
def b3():
    return matrix([[1, 4, 2], [4, 1, 3], [2, 3, 1]])


@pytest.fixture
def h3():
    return matrix([[1, 5, 2], [5, 1, 3], [2, 3, 1]])


@pytest.fixture
def h4():
    return matrix([[1, 5, 2, 2], [5, 1, 3, 2], [2, 3, 1, 3], [2, 2, 3, 1]])


@pytest.fixture
def triangle237():
    return matrix([[1, 2, 3], [2, 1, 7], [3, 7, 1]])


@pytest.fixture
def lanner435():
    return matrix([[1, 4, 2, 2], [4, 1, 3, 2], [2, 3, 1, 5], [2, 2, 5, 1]])


@pytest.fixture
def icosahedral():
    return right_angled(12, ICOSAHEDRON_EDGES)


@pytest.fixture
def octahedral():
    return right_angled(6, cross_polytope_edges(3))


@pytest.fixture
def sixteen_cell_group():
    return right_angled(8, cross_polytope_edges(4))


@pytest.fixture
def suspension_group():
    """Poles n, s with m = inf; the equator a, b, c is an affine triangle."""
    names = ["n", "s", "a", "b", "c"]
    labels = {("n", "s"): "inf", ("n", "a"): 3, ("s", "a"): 3,
              ("n", "b"): 2, ("n", "c"): 2, ("s", "b"): 2, ("s", "c"): 2,
              ("a", "b"): 3, ("b", "c"): 3, ("a", "c"): 3}
    raw = [[1] * 5 for _ in range(5)]
    for (x, y), m in labels.items():
        i, j = names.index(x), names.index(y)
        raw[i][j] = raw[j][i] = m
    return matrix(raw, names)


# ------------------------- Complex fixtures ------------------------- #

@pytest.fixture
def icosahedron():
    return flag_complex(12, ICOSAHEDRON_EDGES)


@pytest.fixture
def octahedron():
    return flag_complex(6, cross_polytope_edges(3))


@pytest.fixture
def sixteen_cell():
    return flag_complex(8, cross_polytope_edges(4))


@pytest.fixture
def tetrahedron_boundary():
    return SimplicialComplex.boundary_of_simplex([0, 1, 2, 3])


@pytest.fixture
def suspended_triangle():
    """Non-flag 2-sphere: the empty triangle a, b, c with two cone points."""
    faces = [("n", "a", "b"), ("n", "b", "c"), ("n", "a", "c"),
             ("s", "a", "b"), ("s", "b", "c"), ("s", "a", "c")]
    return SimplicialComplex.from_faces(faces, ["n", "s", "a", "b", "c"])
