"""Independent face lattice of a lattice polytope.

qhull proposes facet planes; every proposal is then re-derived and certified
in exact rational arithmetic, so floating error cannot add or drop a face.
Lower dimensional faces are intersections of a face with a facet that have
the right affine dimension.
"""

from fractions import Fraction

import numpy as np
from scipy.spatial import ConvexHull


def _rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def affine_dim(points):
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    return _rank([[a - b for a, b in zip(p, base)] for p in pts[1:]]) if len(pts) > 1 else 0


def _nullvector(rows, dim):
    """A nonzero exact vector orthogonal to all rows (rows span dim-1)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots, r = [], 0
    for c in range(dim):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(dim) if c not in pivots][0]
    v = [Fraction(0)] * dim
    v[free] = Fraction(1)
    for row, c in zip(m, pivots):
        v[c] = -row[free]
    return v


def exact_facets(points):
    """Facets of conv(points) as frozensets of point indices, certified exactly."""
    pts = [tuple(int(x) for x in p) for p in points]
    dim = len(pts[0])
    hull = ConvexHull(np.array(pts, dtype=float))
    facets = set()
    for eq in hull.equations:
        near = [i for i, p in enumerate(pts) if abs(np.dot(eq[:-1], p) + eq[-1]) < 1e-7]
        base = pts[near[0]]
        diffs = [[a - b for a, b in zip(pts[i], base)] for i in near[1:]]
        if _rank(diffs) != dim - 1:
            raise AssertionError("qhull proposed a plane that is not a facet")
        normal = _nullvector(diffs, dim)
        off = sum(a * b for a, b in zip(normal, base))
        vals = [sum(a * b for a, b in zip(normal, p)) - off for p in pts]
        if any(v > 0 for v in vals) and any(v < 0 for v in vals):
            raise AssertionError("proposed facet plane cuts the polytope")
        facets.add(frozenset(i for i, v in enumerate(vals) if v == 0))
    return facets, pts


def faces_of_dimension(points, d):
    facets, pts = exact_facets(points)
    dim = len(pts[0])
    level = set(facets)
    for k in range(dim - 2, d - 1, -1):
        nxt = set()
        for F in level:
            for G in facets:
                E = F & G
                if E != F and E and affine_dim([pts[i] for i in E]) == k:
                    nxt.add(frozenset(E))
        level = nxt
    return [frozenset(pts[i] for i in F) for F in level], pts
