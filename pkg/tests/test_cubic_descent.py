from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxtile.cubic_descent import (
    CubeVertex,
    a2_hexagon_check,
    cube_orbit_decomposition,
    decompose,
    edge_image_check,
    image_law_check,
    k_lift,
    k_lift_check,
    project_cube_vertex,
    rhombohedron_descent,
)
from coxtile.root_lattice import LatticeVector, k_vector


def ks(n, *idx):
    v = LatticeVector.zero(n)
    for i in idx:
        v = v + k_vector(n, i)
    return v


def test_examples():
    n = 4
    assert project_cube_vertex(CubeVertex((1,) * 5)) == LatticeVector.zero(n)
    assert project_cube_vertex(CubeVertex((-1,) * 5)) == LatticeVector.zero(n)
    assert project_cube_vertex(CubeVertex((-1, 1, 1, 1, 1))) == -k_vector(n, 1)
    assert project_cube_vertex(CubeVertex.parse("+----")) == k_vector(n, 1)


def test_parse_rejects_bad_signs():
    with pytest.raises(ValueError):
        CubeVertex.parse("+-x")
    with pytest.raises(ValueError):
        CubeVertex((1, 0, -1))
    with pytest.raises(ValueError):
        project_cube_vertex(CubeVertex((1, -1)), 3)


def test_orbit_histograms():
    assert cube_orbit_decomposition(4) == [1, 1, 5, 10, 10, 5]
    assert cube_orbit_decomposition(2) == [1, 1, 3, 3]
    for n in range(1, 9):
        h = cube_orbit_decomposition(n)
        assert sum(h) == 2 ** (n + 1)
        assert h[2:] == [comb(n + 1, j) for j in range(1, n + 1)]


@pytest.mark.parametrize("n", range(1, 9))
def test_image_law(n):
    assert image_law_check(n)["pass"]


def test_k_lift_identities():
    assert k_lift_check(4)
    c, rhs = k_lift(4, 1)
    assert c == Fraction(3, 10)
    assert rhs == (Fraction(1, 2),) + (Fraction(-1, 2),) * 4
    d = decompose(k_lift(4, 5)[1], 4)
    assert d.hyperplane == k_vector(4, 5) and d.l0_coefficient == Fraction(-3, 10)
    # summing the five right-hand sides gives -(3/2) l_0 and no hyperplane part
    total = [sum(k_lift(4, i)[1][j] for i in range(1, 6)) for j in range(5)]
    assert total == [Fraction(-3, 2)] * 5
    assert decompose(total, 4).hyperplane == LatticeVector.zero(4)


def test_rhombohedron():
    rep = rhombohedron_descent(4)
    assert rep["pass"] and not rep["diff"]
    assert rep["mapping"]["++---"] == "k1+k2"
    assert rep["mapping"]["++++-"] == "-k5"
    assert rep["cos_obtuse"] == "-1/4"
    assert abs(rep["obtuse_angle_deg"] - 104.4775121859) < 1e-9
    with pytest.raises(ValueError):
        rhombohedron_descent(3)


def test_rhombohedron_images_directly():
    n = 4
    got = {project_cube_vertex(CubeVertex((1, a, b, c, -1))) for a, b, c in product((1, -1), repeat=3)}
    want = {ks(n, 1), -ks(n, 5), ks(n, 1, 2), ks(n, 1, 3), ks(n, 1, 4),
            -ks(n, 4, 5), -ks(n, 3, 5), -ks(n, 2, 5)}
    assert got == want
    centre = sum(got, LatticeVector.zero(n)) * Fraction(1, 8)
    assert centre == (k_vector(n, 1) - k_vector(n, 5)) * Fraction(1, 2)


def test_a2_and_edges():
    assert a2_hexagon_check()["pass"]
    for n in range(1, 7):
        assert edge_image_check(n)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10).flatmap(lambda n: st.lists(st.sampled_from((1, -1)), min_size=n + 1, max_size=n + 1)))
def test_image_is_minus_sum_of_negated_ks(signs):
    n = len(signs) - 1
    v = CubeVertex(tuple(signs))
    expected = -ks(n, *v.minus)
    assert project_cube_vertex(v) == expected
    # the dropped l_0 part is exactly (#plus - #minus) / (2h)
    d = decompose(v.l_coords(), n)
    assert d.l0_coefficient == Fraction(sum(signs), 2 * (n + 1))
