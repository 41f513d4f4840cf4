"""Voronoi cell V(0) of A_n and the Delone cells around its vertices.

Vertices of V(0) are the sums k_S = sum_{i in S} k_i over subsets S with
1 <= |S| <= n; the subsets of a fixed size i form the orbit of omega_i, a copy
of a Delone polytope.  2-faces of V(0) are the rhombi
{k_S, k_S + k_a, k_S + k_b, k_S + k_a + k_b} with a, b outside S and
1 <= |S| <= n - 2.  2-faces of Delone cells are equilateral triangles whose
edges are roots k_i - k_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .root_lattice import LatticeRank, LatticeVector, as_rank, k_vector, subset_sum

MAX_ENUMERATION_RANK = 20


def _sort_key(v: LatticeVector):
    return v.coords


@dataclass(frozen=True)
class VoronoiCell:
    rank: LatticeRank
    vertices: tuple  # LatticeVector, sorted
    subsets: dict  # LatticeVector -> frozenset of k-indices

    def orbit(self, i: int) -> tuple:
        return tuple(v for v in self.vertices if len(self.subsets[v]) == i)


@dataclass(frozen=True)
class RhombicFace:
    base: frozenset
    edge_pair: tuple  # (a, b), a < b
    vertices: tuple  # (k_S, k_S + k_a, k_S + k_a + k_b, k_S + k_b), cyclic order


@dataclass(frozen=True)
class DeloneFace:
    anchor: LatticeVector
    indices: tuple  # (i, j, l)
    vertices: tuple  # anchor and two more, cyclic order
    kind: str  # "apex+" for {p, p+k_i-k_j, p+k_i-k_l}, "apex-" for the negated shape

    @property
    def edges(self) -> tuple:
        a, b, c = self.vertices
        return (b - a, c - b, a - c)


def _check_enumerable(n: int):
    if n > MAX_ENUMERATION_RANK:
        raise ValueError(
            f"enumerating 2^{n + 1} subsets is refused for n > {MAX_ENUMERATION_RANK}"
        )


def voronoi_vertices(rank: LatticeRank | int) -> VoronoiCell:
    r = as_rank(rank)
    n = r.n
    _check_enumerable(n)
    subsets = {}
    for size in range(1, n + 1):
        for S in combinations(range(1, n + 2), size):
            subsets[subset_sum(n, S)] = frozenset(S)
    vertices = tuple(sorted(subsets, key=_sort_key))
    return VoronoiCell(r, vertices, subsets)


def voronoi_two_faces(rank: LatticeRank | int) -> list[RhombicFace]:
    r = as_rank(rank)
    n = r.n
    if n < 3:
        raise ValueError("V(0) has 2-faces distinct from itself only for n >= 3")
    _check_enumerable(n)
    labels = range(1, n + 2)
    faces = []
    for a, b in combinations(labels, 2):
        rest = [i for i in labels if i not in (a, b)]
        for size in range(1, n - 1):
            for S in combinations(rest, size):
                base = subset_sum(n, S)
                ka, kb = k_vector(n, a), k_vector(n, b)
                verts = (base, base + ka, base + ka + kb, base + kb)
                faces.append(RhombicFace(frozenset(S), (a, b), verts))
    faces.sort(key=lambda f: (f.edge_pair, sorted(f.base)))
    return faces


def delone_orbit(rank: LatticeRank | int, i: int) -> tuple:
    """Sums of i distinct k's: the vertex set of the Delone polytope (omega_i)."""
    n = as_rank(rank).n
    if not 1 <= i <= n:
        raise ValueError(f"orbit index {i} out of range 1..{n}")
    _check_enumerable(n)
    return tuple(
        sorted((subset_sum(n, S) for S in combinations(range(1, n + 2), i)), key=_sort_key)
    )


def voronoi_subset(v: LatticeVector) -> frozenset:
    """The subset S with v = k_S, or ValueError if v is not a vertex of V(0)."""
    n = v.n
    if not v.is_integral():
        raise ValueError(f"{v!r} is not a vertex of V(0)")
    # canonical coords of k_S are 0/1 if n+1 not in S, else 0/-1 with S = zeros
    vals = set(v.coords)
    if vals <= {0, 1}:
        S = frozenset(i + 1 for i, x in enumerate(v.coords) if x == 1)
    elif vals <= {0, -1}:
        S = frozenset(i + 1 for i, x in enumerate(v.coords) if x == 0)
    else:
        raise ValueError(f"{v!r} is not a vertex of V(0)")
    if not 1 <= len(S) <= n:
        raise ValueError(f"{v!r} is not a vertex of V(0)")
    return S


def delone_cell_at_vertex(v: LatticeVector) -> tuple:
    """Vertices of the Delone cell whose center is the Voronoi vertex v.

    For v in the orbit of omega_i this is v + (omega_{n+1-i}) orbit, which
    contains 0 because -v is a sum of the complementary n + 1 - i k's.
    """
    S = voronoi_subset(v)
    n = v.n
    i = len(S)
    return tuple(sorted((v + w for w in delone_orbit(n, n + 1 - i)), key=_sort_key))


def delone_two_faces_at(p: LatticeVector) -> list[DeloneFace]:
    """Every Delone 2-face having p as a vertex.

    Both orientations occur in the Delone complex: {p, p + k_i - k_j, p + k_i - k_l}
    (a face of a simplex centred at the hole p + k_i) and its negative
    {p, p - k_i + k_j, p - k_i + k_l} (simplex centred at p - k_i).
    """
    if not p.in_root_lattice():
        raise ValueError(f"{p!r} is not a root-lattice point")
    n = p.n
    if n < 2:
        raise ValueError("Delone 2-faces need n >= 2")
    labels = range(1, n + 2)
    faces = []
    for i in labels:
        ki = k_vector(n, i)
        for j, l in combinations([x for x in labels if x != i], 2):
            kj, kl = k_vector(n, j), k_vector(n, l)
            faces.append(DeloneFace(p, (i, j, l), (p, p + ki - kj, p + ki - kl), "apex+"))
            faces.append(DeloneFace(p, (i, j, l), (p, p - ki + kj, p - ki + kl), "apex-"))
    return faces


def triangle_key(face: DeloneFace) -> frozenset:
    return frozenset(face.vertices)


def voronoi_vertex_count(n: int) -> int:
    return sum(comb(n + 1, i) for i in range(1, n + 1))
