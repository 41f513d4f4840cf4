"""Integer classification of projected rhombi and triangles.

A rhombus spanned by (k_i)_par and (k_j)_par has angle 2 pi d/h between its
edges, d = (j - i) mod h.  Folding d to 1..h/2 and, for even h, identifying
d with h/2 - d (the pair {2 pi d/h, pi - 2 pi d/h} is unordered) gives the
class parameter m.  d = h/2 is a flat rhombus.

A triangle with edges (k_i - k_j)_par, (k_j - k_l)_par, (k_l - k_i)_par has
angles n_1 pi/h, n_2 pi/h, n_3 pi/h with n_1 + n_2 + n_3 = h.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .root_lattice import LatticeRank, as_rank


class Degenerate:
    """Marker for a projected tile of zero area."""

    def __init__(self, reason: str):
        self.reason = reason

    def __repr__(self):
        return f"Degenerate({self.reason!r})"

    def __eq__(self, other):
        return isinstance(other, Degenerate)

    def __hash__(self):
        return hash(Degenerate)


@dataclass(frozen=True, order=True)
class RhombusClass:
    h: int
    m: int

    @property
    def angles(self) -> tuple[Fraction, Fraction]:
        """Interior angles as multiples of pi: (2m/h, 1 - 2m/h)."""
        a = Fraction(2 * self.m, self.h)
        return a, 1 - a

    @property
    def angles_deg(self) -> tuple[float, float]:
        return tuple(float(a) * 180.0 for a in self.angles)

    @property
    def is_square(self) -> bool:
        return 4 * self.m == self.h

    @property
    def name(self) -> str:
        a, b = self.angles
        return f"rhombus-{a.numerator}/{a.denominator}-{b.numerator}/{b.denominator}"

    @property
    def id(self) -> str:
        return f"R{self.h}.{self.m}"


@dataclass(frozen=True, order=True)
class TriangleClass:
    h: int
    parts: tuple  # sorted ascending

    @property
    def angles(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(p, self.h) for p in self.parts)

    @property
    def angles_deg(self) -> tuple[float, ...]:
        return tuple(180.0 * p / self.h for p in self.parts)

    @property
    def edge_lengths(self) -> tuple[float, ...]:
        """Edge opposite each angle, 2 sin(n_k pi/h), with the factor c dropped."""
        return tuple(2.0 * math.sin(p * math.pi / self.h) for p in self.parts)

    @property
    def id(self) -> str:
        return f"T{self.h}." + "-".join(map(str, self.parts))


def rhombus_class_param(d: int, h: int) -> int | None:
    """Canonical m for an edge-angle index d (mod h); None when flat."""
    d %= h
    d = min(d, h - d)
    if d == 0 or 2 * d == h:
        return None
    if h % 2 == 0:
        d = min(d, h // 2 - d)
    return d


def classify_rhombus(i: int, j: int, rank: LatticeRank | int) -> RhombusClass | Degenerate:
    h = as_rank(rank).h
    if i == j:
        raise ValueError("a rhombus needs two distinct edge directions")
    for x in (i, j):
        if not 1 <= x <= h:
            raise ValueError(f"k index {x} out of range 1..{h}")
    m = rhombus_class_param(j - i, h)
    if m is None:
        return Degenerate(f"(k_{i})_par and (k_{j})_par are antiparallel")
    return RhombusClass(h, m)


def rhombic_prototiles(rank: LatticeRank | int) -> list[RhombusClass]:
    r = as_rank(rank)
    if r.n < 3:
        raise ValueError("rhombic prototiles need n >= 3")
    h = r.h
    ms = {rhombus_class_param(d, h) for d in range(1, h)}
    ms.discard(None)
    return [RhombusClass(h, m) for m in sorted(ms)]


def classify_triangle(i: int, j: int, l: int, rank: LatticeRank | int) -> TriangleClass:
    h = as_rank(rank).h
    if len({i, j, l}) != 3:
        raise ValueError("triangle indices must be distinct")
    for x in (i, j, l):
        if not 1 <= x <= h:
            raise ValueError(f"k index {x} out of range 1..{h}")
    a, b, c = sorted((i, j, l), reverse=True)
    parts = tuple(sorted((a - b, b - c, h - (a - c))))
    return TriangleClass(h, parts)


def triangular_prototiles(rank: LatticeRank | int) -> list[TriangleClass]:
    r = as_rank(rank)
    if r.n < 2:
        raise ValueError("triangular prototiles need n >= 2")
    h = r.h
    out = []
    for a in range(1, h // 3 + 1):
        for b in range(a, (h - a) // 2 + 1):
            c = h - a - b
            if c >= b:
                out.append(TriangleClass(h, (a, b, c)))
    return out


def dart_and_kite(rank: LatticeRank | int = 4) -> dict[str, np.ndarray]:
    """Kite from two (1,2,2) triangles, dart from two (1,1,3) triangles.

    Each shape is a (4, 2) array of vertices in counter-clockwise order with
    the long edges of unit length; the first vertex is the apex on the
    symmetry axis (the 72 degree corner of the kite, the 72 degree tail of the
    dart).
    """
    h = as_rank(rank).h
    if h != 5:
        raise ValueError("darts and kites come from h = 5 only")
    long_edge = 2 * math.sin(2 * math.pi / 5)

    # kite: (1,2,2) triangle P (36 deg apex), Q, R; mirror R across PQ
    L = 2 * math.sin(2 * math.pi / 5) / long_edge
    P = np.array([0.0, 0.0])
    Q = np.array([L, 0.0])
    R = L * np.array([math.cos(math.pi / 5), math.sin(math.pi / 5)])
    R2 = R * np.array([1.0, -1.0])
    kite = np.array([P, R2, Q, R])

    # dart: (1,1,3) triangle Y (36), Z (36), X (108); mirror Z across XY
    s = 2 * math.sin(math.pi / 5) / long_edge
    Y = np.array([0.0, 0.0])
    X = np.array([s, 0.0])
    Z = np.array([math.cos(math.pi / 5), math.sin(math.pi / 5)])  # |YZ| = 1
    Z2 = Z * np.array([1.0, -1.0])
    dart = np.array([Y, Z2, X, Z])
    return {"kite": _ccw(kite), "dart": _ccw(dart)}


def _ccw(poly: np.ndarray) -> np.ndarray:
    x, y = poly[:, 0], poly[:, 1]
    area = 0.5 * np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)
    return poly if area > 0 else poly[::-1].copy()


def interior_angles(poly: np.ndarray) -> np.ndarray:
    """Interior angles (radians) of a simple counter-clockwise polygon."""
    out = []
    k = len(poly)
    for idx in range(k):
        a, b, c = poly[idx - 1], poly[idx], poly[(idx + 1) % k]
        u, v = a - b, c - b
        # sweep counter-clockwise from b->c to b->a
        ang = math.atan2(v[0] * u[1] - v[1] * u[0], u @ v)
        out.append(ang % (2 * math.pi))
    return np.array(out)


def catalog(rank: LatticeRank | int) -> dict:
    """JSON-ready prototile catalog."""
    r = as_rank(rank)
    rhombi = []
    if r.n >= 3:
        for c in rhombic_prototiles(r):
            rhombi.append(
                {
                    "m": c.m,
                    "angles_deg": [round(a, 6) for a in c.angles_deg],
                    "angles_pi": [f"{a.numerator}/{a.denominator}" for a in c.angles],
                }
            )
    triangles = [
        {
            "parts": list(c.parts),
            "angles_deg": [round(a, 6) for a in c.angles_deg],
            "angles_pi": [f"{a.numerator}/{a.denominator}" for a in c.angles],
            "edge_lengths": [round(e, 12) for e in c.edge_lengths],
        }
        for c in triangular_prototiles(r)
    ]
    return {"h": r.h, "rhombi": rhombi, "triangles": triangles}


def catalog_json(rank: LatticeRank | int) -> str:
    return json.dumps(catalog(rank), indent=2)
