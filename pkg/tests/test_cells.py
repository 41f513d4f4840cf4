from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from coxtile.cells import (
    delone_cell_at_vertex,
    delone_orbit,
    delone_two_faces_at,
    voronoi_subset,
    voronoi_two_faces,
    voronoi_vertices,
)
from coxtile.root_lattice import LatticeVector, inner_product, k_vector, k_vectors
from hull_oracle import faces_of_dimension


def k(n, *idx):
    v = LatticeVector.zero(n)
    for i in idx:
        v = v + k_vector(n, i)
    return v


@pytest.mark.parametrize("n", range(1, 12))
def test_vertex_count_law(n):
    cell = voronoi_vertices(n)
    assert len(cell.vertices) == 2 ** (n + 1) - 2
    assert [len(cell.orbit(i)) for i in range(1, n + 1)] == [comb(n + 1, i) for i in range(1, n + 1)]


def test_small_cells():
    c3 = voronoi_vertices(3)
    assert [len(c3.orbit(i)) for i in (1, 2, 3)] == [4, 6, 4]
    assert set(c3.orbit(3)) == {-kk for kk in k_vectors(3)}
    assert len(voronoi_vertices(4).vertices) == 30
    assert len(voronoi_vertices(1).vertices) == 2
    with pytest.raises(ValueError):
        voronoi_vertices(21)


def test_a3_face_example_and_errors():
    faces = voronoi_two_faces(3)
    assert len(faces) == 12
    f = next(f for f in faces if f.base == {1} and f.edge_pair == (2, 3))
    assert set(f.vertices) == {k(3, 1), k(3, 1, 2), k(3, 1, 3), -k_vector(3, 4)}
    with pytest.raises(ValueError):
        voronoi_two_faces(2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_two_faces_match_exact_hull(n):
    pts = [v.coords[:n] for v in voronoi_vertices(n).vertices]
    hull_faces, _ = faces_of_dimension(pts, 2)
    mine = {frozenset(v.coords[:n] for v in f.vertices) for f in voronoi_two_faces(n)}
    assert set(hull_faces) == mine


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_faces_are_rhombi_of_cell_vertices(n):
    verts = set(voronoi_vertices(n).vertices)
    for f in voronoi_two_faces(n):
        a, b, c, d = f.vertices
        assert {a, b, c, d} <= verts
        e1, e2 = b - a, d - a
        assert inner_product(e1, e1) == inner_product(e2, e2)
        assert c - a == e1 + e2  # planar parallelogram
        assert e1 == k_vector(n, f.edge_pair[0]) and e2 == k_vector(n, f.edge_pair[1])


def test_delone_orbits():
    assert len(delone_orbit(3, 2)) == 6
    assert set(delone_orbit(4, 1)) == set(k_vectors(4))
    for n in range(1, 8):
        for i in range(1, n + 1):
            assert set(delone_orbit(n, i)) == {-v for v in delone_orbit(n, n + 1 - i)}
    with pytest.raises(ValueError):
        delone_orbit(3, 4)


def test_delone_cells_at_vertices():
    n = 4
    cell = set(delone_cell_at_vertex(k_vector(n, 1)))
    assert cell == {LatticeVector.zero(n)} | {k(n, 1) - k(n, j) for j in (2, 3, 4, 5)}
    # ten points around k_1 + k_2
    cell2 = set(delone_cell_at_vertex(k(n, 1, 2)))
    expected = {k(n, 1, 2) - k(n, a, b) for a, b in combinations(range(1, 6), 2)}
    assert cell2 == expected and len(cell2) == 10
    for v in voronoi_vertices(n).vertices:
        c = delone_cell_at_vertex(v)
        assert LatticeVector.zero(n) in c
        assert all(p.in_root_lattice() for p in c)
    with pytest.raises(ValueError):
        delone_cell_at_vertex(k(n, 1, 1))


def test_voronoi_subset_round_trip():
    cell = voronoi_vertices(5)
    for v in cell.vertices:
        assert voronoi_subset(v) == cell.subsets[v]


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_delone_faces_equilateral_roots(n):
    p = k(n, 1) - k(n, 2)
    faces = delone_two_faces_at(p)
    assert len(faces) == 2 * (n + 1) * comb(n, 2)
    for f in faces:
        e = f.edges
        assert e[0] + e[1] + e[2] == LatticeVector.zero(n)
        for x in e:
            assert inner_product(x, x) == 2
            assert sorted(x.coords) == sorted(x.coords) and x.in_root_lattice()
    with pytest.raises(ValueError):
        delone_two_faces_at(k_vector(n, 1))


def test_a2_triangle_at_origin():
    f = delone_two_faces_at(LatticeVector.zero(2))
    edges = {frozenset(ff.edges) for ff in f}
    target = frozenset({k(2, 1) - k(2, 2), k(2, 2) - k(2, 3), k(2, 3) - k(2, 1)})
    assert target in edges or frozenset(-e for e in target) in edges


@pytest.mark.parametrize("n", [3, 4])
def test_half_root_midpoints_on_boundary(n):
    # supporting function: max over vertices of (r, v) equals (r, r/2) for r = k_i - k_j
    verts = voronoi_vertices(n).vertices
    for i, j in combinations(range(1, n + 2), 2):
        r = k_vector(n, i) - k_vector(n, j)
        mid = r * Fraction(1, 2)
        assert max(inner_product(r, v) for v in verts) == inner_product(r, mid)
