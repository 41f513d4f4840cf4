"""Descent from the cube of B_{n+1} to the Voronoi cell of A_n.

A cube vertex 1/2 (s_1 l_1 + ... + s_h l_h), s_i = +-1, becomes a vector of
the A_n hyperplane once l_i = l_0/h + k_i is substituted and the l_0 part is
dropped.  Since sum k_i = 0 the image is -(sum of k_i over the minus signs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .cells import voronoi_vertices
from .root_lattice import LatticeRank, LatticeVector, as_rank, inner_product, k_vector

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CubeVertex:
    """Sign pattern of 1/2 (+-l_1 +- ... +- l_{n+1})."""

    signs: tuple

    def __post_init__(self):
        s = tuple(int(x) for x in self.signs)
        if not s or any(x not in (1, -1) for x in s):
            raise ValueError(f"cube vertex signs must be +1/-1, got {self.signs!r}")
        object.__setattr__(self, "signs", s)

    @classmethod
    def parse(cls, text: str) -> "CubeVertex":
        """Build from a string such as '+-+--'."""
        table = {"+": 1, "-": -1}
        try:
            return cls(tuple(table[c] for c in text.strip()))
        except KeyError as exc:
            raise ValueError(f"sign string may contain only '+' and '-': {text!r}") from exc

    @property
    def minus(self) -> tuple:
        return tuple(i + 1 for i, s in enumerate(self.signs) if s < 0)

    def l_coords(self) -> tuple:
        return tuple(HALF * s for s in self.signs)


@dataclass(frozen=True)
class Decomposition:
    """A vector written as a + c * l_0 with a orthogonal to l_0."""

    hyperplane: LatticeVector
    l0_coefficient: Fraction


def decompose(l_coords, n: int) -> Decomposition:
    """Split exact l-coordinates into the A_n part and the l_0 coefficient."""
    c = [Fraction(x) for x in l_coords]
    if len(c) != n + 1:
        raise ValueError(f"expected {n + 1} l-coordinates, got {len(c)}")
    h = n + 1
    l0 = sum(c) / h
    # l_i = l_0/h + k_i, so sum c_i l_i = (sum c_i / h) l_0 + sum c_i k_i
    return Decomposition(LatticeVector(n, tuple(c)), l0)


def project_cube_vertex(v: CubeVertex, rank: LatticeRank | int | None = None) -> LatticeVector:
    n = len(v.signs) - 1 if rank is None else as_rank(rank).n
    if len(v.signs) != n + 1:
        raise ValueError(f"a cube vertex for A_{n} needs {n + 1} signs, got {len(v.signs)}")
    return decompose(v.l_coords(), n).hyperplane


def cube_vertices(rank: LatticeRank | int):
    n = as_rank(rank).n
    for signs in product((1, -1), repeat=n + 1):
        yield CubeVertex(signs)


def cube_orbit_decomposition(rank: LatticeRank | int) -> list[int]:
    """Sizes [all-plus, all-minus, 1 minus, 2 minus, ..., n minus]."""
    n = as_rank(rank).n
    counts = [0] * (n + 2)
    for v in cube_vertices(n):
        j = len(v.minus)
        if j == 0:
            counts[0] += 1
        elif j == n + 1:
            counts[1] += 1
        else:
            counts[j + 1] += 1
    return counts


def expected_orbit_sizes(rank: LatticeRank | int) -> list[int]:
    h = as_rank(rank).h
    return [1, 1] + [comb(h, j) for j in range(1, h)]


def image_law_check(rank: LatticeRank | int) -> dict:
    """Images are V(0) vertices plus 0; each vertex with |S| = j is hit once."""
    n = as_rank(rank).n
    images: dict = {}
    for v in cube_vertices(n):
        w = project_cube_vertex(v, n)
        images.setdefault(w, []).append(v)
        expected = -sum((k_vector(n, i) for i in v.minus), LatticeVector.zero(n))
        if w != expected:
            return {"pass": False, "details": f"{v.signs} -> {w}, expected {expected}"}
    targets = set(voronoi_vertices(n).vertices) | {LatticeVector.zero(n)}
    ok = set(images) == targets and len(images[LatticeVector.zero(n)]) == 2
    ok = ok and all(len(p) == 1 for w, p in images.items() if w != LatticeVector.zero(n))
    return {
        "pass": ok,
        "details": {"images": len(images), "histogram": cube_orbit_decomposition(n)},
    }


def k_lift(rank: LatticeRank | int, i: int) -> tuple:
    """The cube vertex identity k_i - c l_0 = 1/2 (l_i - sum_{j != i} l_j), c = 1/2 - 1/h.

    Returns (c, l-coordinates of the right-hand side).
    """
    n = as_rank(rank).n
    h = n + 1
    rhs = tuple(HALF if j == i - 1 else -HALF for j in range(h))
    return HALF - Fraction(1, h), rhs


def k_lift_check(rank: LatticeRank | int = 4) -> bool:
    """Check every lift identity with the l_0 part tracked explicitly."""
    n = as_rank(rank).n
    h = n + 1
    total_l0 = Fraction(0)
    total = LatticeVector.zero(n)
    for i in range(1, h + 1):
        c, rhs = k_lift(n, i)
        d = decompose(rhs, n)
        if d.hyperplane != k_vector(n, i) or d.l0_coefficient != -c:
            return False
        total = total + d.hyperplane
        total_l0 += d.l0_coefficient
    # summing all identities: sum k_i = 0 and the l_0 parts add to -h c
    return total == LatticeVector.zero(n) and total_l0 == -h * (HALF - Fraction(1, h))


RHOMBOHEDRON_TARGETS = {
    (1, 1, 1, 1, -1): "-k5",
    (1, -1, -1, -1, -1): "k1",
    (1, 1, -1, -1, -1): "k1+k2",
    (1, -1, 1, -1, -1): "k1+k3",
    (1, -1, -1, 1, -1): "k1+k4",
    (1, 1, 1, -1, -1): "-(k4+k5)",
    (1, 1, -1, 1, -1): "-(k3+k5)",
    (1, -1, 1, 1, -1): "-(k2+k5)",
}


def _parse_target(expr: str, n: int) -> LatticeVector:
    neg = expr.startswith("-")
    body = expr.lstrip("-").strip("()")
    v = LatticeVector.zero(n)
    for term in body.split("+"):
        v = v + k_vector(n, int(term[1:]))
    return -v if neg else v


def rhombohedron_descent(rank: LatticeRank | int = 4) -> dict:
    """Project the 3-cube 1/2 (l_1 +- l_2 +- l_3 +- l_4 - l_5) onto A_4.

    Returns {'pass', 'mapping', 'diff', 'center', 'obtuse_angle_deg'}.
    """
    n = as_rank(rank).n
    if n != 4:
        raise ValueError("the rhombohedral facet descent is stated for n = 4")
    mapping, diff = {}, []
    for signs, expr in RHOMBOHEDRON_TARGETS.items():
        got = project_cube_vertex(CubeVertex(signs), n)
        want = _parse_target(expr, n)
        label = "".join("+" if s > 0 else "-" for s in signs)
        mapping[label] = expr
        if got != want:
            diff.append({"vertex": label, "expected": expr, "got": list(map(str, got.coords))})
    images = [project_cube_vertex(CubeVertex(s), n) for s in RHOMBOHEDRON_TARGETS]
    centroid = sum(images, LatticeVector.zero(n)) * Fraction(1, len(images))
    center = (k_vector(n, 1) - k_vector(n, 5)) * HALF
    if centroid != center:
        diff.append({"center": list(map(str, centroid.coords))})
    k1, k2 = k_vector(n, 1), k_vector(n, 2)
    cos_theta = inner_product(k1, k2) / inner_product(k1, k1)
    return {
        "pass": not diff,
        "mapping": mapping,
        "diff": diff,
        "center": "1/2(k1-k5)",
        "cos_obtuse": str(cos_theta),
        "obtuse_angle_deg": math.degrees(math.acos(float(cos_theta))),
    }


def a2_hexagon_check() -> dict:
    """The six non-diagonal vertices of the 3-cube project onto +-k_1, +-k_2, +-k_3."""
    n = 2
    images = {project_cube_vertex(v, n) for v in cube_vertices(n) if 0 < len(v.minus) < 3}
    ks = [k_vector(n, i) for i in (1, 2, 3)]
    expected = set(ks) | {-k for k in ks}
    return {"pass": images == expected, "details": sorted(str(v.coords) for v in images)}


def edge_image_check(rank: LatticeRank | int) -> bool:
    """Flipping sign i from - to + moves the image by exactly k_i."""
    n = as_rank(rank).n
    for v in cube_vertices(n):
        for i, s in enumerate(v.signs):
            if s > 0:
                continue
            w = list(v.signs)
            w[i] = 1
            step = project_cube_vertex(CubeVertex(tuple(w)), n) - project_cube_vertex(v, n)
            if step != k_vector(n, i + 1):
                return False
    return True
