import math
from fractions import Fraction

import numpy as np
import pytest

from coxtile.prototiles import (
    Degenerate,
    TriangleClass,
    catalog,
    catalog_json,
    classify_rhombus,
    classify_triangle,
    dart_and_kite,
    interior_angles,
    rhombic_prototiles,
    triangular_prototiles,
)


def partitions3(h):
    # brute force over all ordered triples
    return sorted({tuple(sorted((a, b, h - a - b))) for a in range(1, h) for b in range(1, h) if h - a - b >= 1})


@pytest.mark.parametrize("n", range(2, 12))
def test_triangle_catalog_is_all_partitions(n):
    assert [c.parts for c in triangular_prototiles(n)] == partitions3(n + 1)


def test_triangle_counts_and_examples():
    assert [len(triangular_prototiles(n)) for n in range(2, 12)] == [1, 1, 2, 3, 4, 5, 7, 8, 10, 12]
    assert [c.parts for c in triangular_prototiles(4)] == [(1, 1, 3), (1, 2, 2)]
    assert [c.parts for c in triangular_prototiles(6)] == [(1, 1, 5), (1, 2, 4), (1, 3, 3), (2, 2, 3)]
    assert [c.parts for c in triangular_prototiles(11)][-2:] == [(3, 4, 5), (4, 4, 4)]
    with pytest.raises(ValueError):
        triangular_prototiles(1)


def test_rhombus_catalog_examples():
    pairs = lambda n: [c.angles for c in rhombic_prototiles(n)]
    assert pairs(4) == [(Fraction(2, 5), Fraction(3, 5)), (Fraction(4, 5), Fraction(1, 5))]
    assert pairs(7) == [(Fraction(1, 4), Fraction(3, 4)), (Fraction(1, 2), Fraction(1, 2))]
    assert pairs(5) == [(Fraction(1, 3), Fraction(2, 3))]
    assert len(pairs(11)) == 3 and any(c.is_square for c in rhombic_prototiles(11))
    with pytest.raises(ValueError):
        rhombic_prototiles(2)


def test_rhombus_counts():
    expected = {3: 1, 4: 2, 5: 1, 6: 3, 7: 2, 8: 4, 9: 2, 10: 5, 11: 3}
    assert {n: len(rhombic_prototiles(n)) for n in expected} == expected


@pytest.mark.parametrize("n", range(3, 12))
def test_rhombus_count_matches_angle_pair_enumeration(n):
    # independent route: fold the edge angle 2 pi d/h into (0, pi] and collect {t, 1 - t}
    h = n + 1
    seen = set()
    for d in range(1, h):
        t = Fraction(2 * d, h)
        t = t if t <= 1 else 2 - t
        if t != 1:
            seen.add(frozenset({t, 1 - t}))
    assert len(seen) == len(rhombic_prototiles(n))
    assert seen == {frozenset(c.angles) for c in rhombic_prototiles(n)}


def test_classify_rhombus_examples():
    sq = classify_rhombus(1, 2, 3)
    assert sq.is_square and sq.angles == (Fraction(1, 2), Fraction(1, 2))
    assert classify_rhombus(1, 3, 5) == classify_rhombus(1, 2, 5)
    assert classify_rhombus(2, 4, 4).m == 2
    assert isinstance(classify_rhombus(1, 4, 5), Degenerate)  # h = 6, antiparallel
    with pytest.raises(ValueError):
        classify_rhombus(2, 2, 4)


@pytest.mark.parametrize("n", range(3, 12))
def test_every_pair_maps_into_catalog_and_is_surjective(n):
    h = n + 1
    got = {classify_rhombus(i, j, n) for i in range(1, h + 1) for j in range(i + 1, h + 1)}
    got.discard(Degenerate(""))
    assert got == set(rhombic_prototiles(n))
    tri = {classify_triangle(i, j, l, n) for i in range(1, h + 1) for j in range(i + 1, h + 1) for l in range(j + 1, h + 1)}
    assert tri == set(triangular_prototiles(n))


def test_classify_triangle_examples():
    assert classify_triangle(4, 2, 1, 4).parts == (1, 2, 2)
    assert classify_triangle(3, 1, 2, 4).parts == (1, 1, 3)
    t = TriangleClass(5, (1, 2, 2))
    s1, s2 = 2 * math.sin(math.pi / 5), 2 * math.sin(2 * math.pi / 5)
    assert np.allclose(t.edge_lengths, (s1, s2, s2))
    with pytest.raises(ValueError):
        classify_triangle(1, 1, 2, 4)


def test_dart_and_kite():
    shapes = dart_and_kite(4)
    kite = np.degrees(interior_angles(shapes["kite"]))
    dart = np.degrees(interior_angles(shapes["dart"]))
    assert sorted(np.round(kite, 9)) == [72, 72, 72, 144]
    assert sorted(np.round(dart, 9)) == [36, 36, 72, 216]
    phi = (1 + 5 ** 0.5) / 2
    for poly in shapes.values():
        e = np.linalg.norm(np.roll(poly, -1, axis=0) - poly, axis=1)
        lengths = sorted(set(np.round(e, 9)))
        assert len(lengths) == 2 and abs(lengths[1] / lengths[0] - phi) < 1e-9
        assert abs(max(e) - 1) < 1e-12
    with pytest.raises(ValueError):
        dart_and_kite(5)


def test_catalog_json_shape():
    c = catalog(4)
    assert c["h"] == 5
    assert c["rhombi"][0]["angles_deg"] == [72.0, 108.0]
    assert c["rhombi"][0]["angles_pi"] == ["2/5", "3/5"]
    assert c["triangles"][1]["parts"] == [1, 2, 2]
    assert '"triangles"' in catalog_json(4)
