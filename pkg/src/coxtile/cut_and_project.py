"""Cut-and-project patches of the Coxeter plane.

Windows are zonotopes written in H-form, so membership is a handful of dot
products for any n:

* root lattice A_n: the window is V(0)_perp = sum_t [-1/2, 1/2] (k_t)_perp;
* weight lattice A_n*: a point of index s = sum(m) mod h is tested against
  the slice of the lifted unit cube at height s, i.e. conv((omega_s)_perp),
  the perp shadow of a Delone polytope.  The union of the slices is V(0)_perp.
  An optional ``layer_shift`` moves the slicing heights off the integers.

Rhombi are emitted from accepted weight points when all four corners are
accepted.  Triangles are emitted from root points by the dual-face rule: the
Delone triangle is kept when the cut plane meets its dual Voronoi face.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .coxeter_projection import CoxeterFrame, build_frame
from .cells import voronoi_vertices
from .prototiles import (
    RhombusClass,
    TriangleClass,
    classify_rhombus,
    classify_triangle,
)
from .root_lattice import LatticeRank, LatticeVector, as_rank

INSIDE, OUTSIDE, SINGULAR = "inside", "outside", "singular"
DEFAULT_TOL = 1e-9
CRYSTALLOGRAPHIC_H = (3, 4, 6)


def default_shift(n: int) -> np.ndarray:
    """Fixed generic E_perp shift: component d is (d + 1) * 1e-4 * sqrt(2)."""
    return np.array([(d + 1) * 1e-4 * math.sqrt(2) for d in range(max(n - 2, 0))])


def thread_count() -> int:
    raw = os.environ.get("COXTILE_THREADS", "0")
    try:
        k = int(raw)
    except ValueError:
        k = 0
    return k if k > 0 else (os.cpu_count() or 1)


def _zonotope_hrep(gens: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unit normals and half-widths of a centred zonotope sum_t [-1/2, 1/2] g_t."""
    g, d = gens.shape
    if d == 0:
        return np.zeros((0, 0)), np.zeros(0)
    if d == 1:
        normals = np.array([[1.0]])
    else:
        found = []
        for sub in combinations(range(g), d - 1):
            A = gens[list(sub)]
            _, s, vt = np.linalg.svd(A, full_matrices=True)
            if s[-1] < 1e-9 * max(s[0], 1.0):
                continue
            nu = vt[-1]
            nu = nu if nu[np.argmax(np.abs(nu) > 1e-12)] > 0 else -nu
            found.append(nu)
        normals = np.array(found)
        # drop repeated hyperplanes
        keep = []
        for nu in normals:
            if not any(abs(abs(nu @ k) - 1.0) < 1e-10 for k in keep):
                keep.append(nu)
        normals = np.array(keep)
    half = 0.5 * np.abs(normals @ gens.T).sum(axis=1)
    return normals, half


@dataclass
class Window:
    """Acceptance domain in internal space, with a shift and a tolerance.

    Internal coordinates are E_perp for the root lattice and
    (E_perp, sum/sqrt(h)) for the weight lattice.  Points within ``tolerance``
    of the boundary are reported as singular.
    """

    rank: LatticeRank
    frame: CoxeterFrame
    lattice: str
    shift: np.ndarray
    layer_shift: float
    tolerance: float
    generators: np.ndarray = field(repr=False)
    center: np.ndarray = field(repr=False)
    normals: np.ndarray = field(repr=False)
    halfwidths: np.ndarray = field(repr=False)

    @property
    def perp_points(self) -> np.ndarray:
        """E_perp images of the vertices of V(0), shifted."""
        verts = voronoi_vertices(self.rank).vertices
        M = np.array([[float(x) for x in v.coords] for v in verts])
        return M @ self.frame.perp_matrix.T + self.shift

    def layer_points(self, s: int) -> np.ndarray:
        """E_perp images of the orbit of omega_s (the index-s slice), shifted."""
        from .cells import delone_orbit

        M = np.array([[float(x) for x in v.coords] for v in delone_orbit(self.rank, s)])
        return M @ self.frame.perp_matrix.T + self.shift

    def internal(self, coords: np.ndarray) -> np.ndarray:
        """Internal coordinates of k-coefficient rows, relative to the window centre."""
        coords = np.atleast_2d(np.asarray(coords, dtype=float))
        perp = coords @ self.frame.perp_matrix.T - self.shift
        if self.lattice == "root":
            return perp
        h = self.rank.h
        s = np.rint(coords.sum(axis=1))
        level = np.mod(s - h * self.layer_shift, h)
        return np.column_stack([perp, level / math.sqrt(h)]) - self.center

    def slack(self, coords: np.ndarray) -> np.ndarray:
        """Smallest signed distance to a window facet (positive inside)."""
        z = self.internal(coords)
        if len(self.halfwidths) == 0:
            return np.full(len(z), np.inf)
        return (self.halfwidths[None, :] - np.abs(z @ self.normals.T)).min(axis=1)

    def classify(self, coords: np.ndarray) -> np.ndarray:
        """0 outside, 1 inside, 2 singular for each row of k-coefficients."""
        coords = np.atleast_2d(np.asarray(coords))
        threads = thread_count()
        if threads > 1 and len(coords) > 20000:
            chunks = np.array_split(coords, threads)
            with ThreadPoolExecutor(threads) as ex:
                sl = np.concatenate(list(ex.map(self.slack, chunks)))
        else:
            sl = self.slack(coords)
        out = np.zeros(len(sl), dtype=np.int8)
        out[sl > self.tolerance] = 1
        out[np.abs(sl) <= self.tolerance] = 2
        return out


def build_window(
    rank: LatticeRank | int,
    shift=None,
    lattice: str = "weight",
    layer_shift: float = 0.0,
    tolerance: float = DEFAULT_TOL,
    frame: CoxeterFrame | None = None,
) -> Window:
    r = as_rank(rank)
    if r.n < 3:
        raise ValueError("a cut-and-project window needs n >= 3")
    if lattice not in ("root", "weight"):
        raise ValueError(f"lattice must be 'root' or 'weight', got {lattice!r}")
    frame = frame or build_frame(r)
    d = r.n - 2
    shift = np.zeros(d) if shift is None else np.asarray(shift, dtype=float).reshape(-1)
    if shift.shape != (d,):
        raise ValueError(f"shift must have {d} components for n = {r.n}")
    h = r.h
    perp_k = frame.perp_matrix.T  # (h, d): row t is (k_t)_perp
    if lattice == "root":
        gens = perp_k
        center = np.zeros(d)
    else:
        gens = np.column_stack([perp_k, np.full(h, 1.0 / math.sqrt(h))])
        center = np.concatenate([np.zeros(d), [0.5 * h / math.sqrt(h)]])
    normals, half = _zonotope_hrep(gens)
    return Window(r, frame, lattice, shift, float(layer_shift), tolerance,
                  gens, center, normals, half)


def accept(q: LatticeVector, window: Window) -> str:
    if q.n != window.rank.n:
        raise ValueError("rank mismatch between point and window")
    if window.lattice == "root" and not q.in_root_lattice():
        raise ValueError(f"{q!r} is not in the root lattice")
    if window.lattice == "weight" and not q.is_integral():
        raise ValueError(f"{q!r} is not in the weight lattice")
    code = window.classify(np.array([q.coords], dtype=float))[0]
    return (OUTSIDE, INSIDE, SINGULAR)[code]


def debruijn_index(q: LatticeVector) -> int:
    """Sum of k-coefficients mod 5 for a point of A_4*."""
    if q.n != 4:
        raise ValueError("the de Bruijn index is defined for n = 4")
    return q.index()


# patches


@dataclass(frozen=True)
class Tile:
    cls: RhombusClass | TriangleClass
    vertices: np.ndarray  # (k, 2), counter-clockwise
    source: tuple  # anchor k-coefficients followed by the k-indices used

    @property
    def centroid(self) -> np.ndarray:
        return self.vertices.mean(axis=0)

    @property
    def area(self) -> float:
        x, y = self.vertices[:, 0], self.vertices[:, 1]
        return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


@dataclass
class Patch:
    rank: LatticeRank
    lattice_kind: str
    tiles: list
    radius: float
    shift: np.ndarray
    layer_shift: float = 0.0
    points: np.ndarray = field(default=None, repr=False)  # accepted k-coefficients
    singular: int = 0
    diagnostic: str = ""

    @property
    def n(self) -> int:
        return self.rank.n

    @property
    def h(self) -> int:
        return self.rank.h

    def classes(self) -> set:
        return {t.cls for t in self.tiles}


def _ccw(poly: np.ndarray) -> np.ndarray:
    x, y = poly[:, 0], poly[:, 1]
    area = np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)
    return poly if area > 0 else poly[::-1].copy()


def _steps(n: int, lattice: str) -> np.ndarray:
    h = n + 1
    eye = np.eye(h, dtype=np.int64)
    if lattice == "weight":
        steps = np.vstack([eye, -eye])
    else:
        steps = np.array([eye[i] - eye[j] for i in range(h) for j in range(h) if i != j])
    return steps - steps[:, -1:]


def _canon(m: np.ndarray) -> np.ndarray:
    return m - m[:, -1:]


def accepted_points(window: Window, radius: float, seeds: np.ndarray | None = None):
    """Accepted lattice points with |q_par| <= radius, grown outwards by lattice steps.

    Returns (points, singular_count).  Every accepted point reachable from the
    seeds through accepted neighbours inside the radius is found.
    """
    n = window.rank.n
    frame = window.frame
    steps = _steps(n, window.lattice)
    P = frame.parallel_matrix.T
    if seeds is None:
        base = [np.zeros(n + 1, dtype=np.int64)]
        base += [np.array(v.coords, dtype=np.int64) for v in voronoi_vertices(n).vertices]
        seeds = np.array(base)
        if window.lattice == "root":
            seeds = np.vstack([seeds[:1], seeds[:1] + steps])
    seeds = _canon(np.asarray(seeds, dtype=np.int64))
    seen = set(map(tuple, seeds))
    codes = window.classify(seeds)
    keep = (codes == 1) & (np.linalg.norm(seeds @ P, axis=1) <= radius)
    frontier = seeds[keep]
    found = [frontier]
    singular = int(np.sum(codes == 2))
    while len(frontier):
        cand = _canon((frontier[:, None, :] + steps[None, :, :]).reshape(-1, n + 1))
        cand = np.unique(cand, axis=0)
        fresh = [i for i, row in enumerate(map(tuple, cand)) if row not in seen]
        cand = cand[fresh]
        seen.update(map(tuple, cand))
        if not len(cand):
            break
        cand = cand[np.linalg.norm(cand @ P, axis=1) <= radius]
        codes = window.classify(cand)
        singular += int(np.sum(codes == 2))
        frontier = cand[codes == 1]
        found.append(frontier)
    pts = np.vstack(found) if found else np.zeros((0, n + 1), dtype=np.int64)
    return pts, singular


def _finish(patch_tiles, h, dedupe):
    if dedupe:
        uniq = {}
        for t in patch_tiles:
            key = (t.cls, frozenset(map(tuple, np.round(t.vertices, 9).tolist())))
            uniq.setdefault(key, t)
        patch_tiles = list(uniq.values())
    patch_tiles.sort(key=lambda t: (t.cls.id, np.round(t.vertices, 9).ravel().tolist()))
    return patch_tiles


def generate_rhombic_patch(
    rank: LatticeRank | int,
    radius: float,
    shift=None,
    lattice: str = "weight",
    layer_shift: float = 0.0,
    tolerance: float = DEFAULT_TOL,
    margin: float | None = None,
) -> Patch:
    """Rhombi (q; a, b) whose four corners are accepted points of A_n*."""
    r = as_rank(rank)
    if r.n < 3:
        raise ValueError("rhombic patches need n >= 3")
    if radius <= 0:
        raise ValueError("radius must be positive")
    if lattice != "weight":
        raise ValueError("rhombic tiles have corners in the weight lattice; use lattice='weight'")
    n, h = r.n, r.h
    shift = default_shift(n) if shift is None else np.asarray(shift, dtype=float)
    window = build_window(r, shift, "weight", layer_shift, tolerance)
    frame = window.frame
    margin = 3.0 if margin is None else margin
    pts, singular = accepted_points(window, radius + margin)
    P = frame.parallel_matrix.T
    if not len(pts):
        return Patch(r, "weight", [], radius, shift, layer_shift, pts, singular,
                     "no accepted points: window and shift admit no lattice point")
    index = {row: i for i, row in enumerate(map(tuple, pts))}
    eye = np.eye(h, dtype=np.int64)
    eye = eye - eye[:, -1:]
    proj = pts @ P
    tiles = []
    for a, b in combinations(range(h), 2):
        cls = classify_rhombus(a + 1, b + 1, r)
        if not isinstance(cls, RhombusClass):
            continue
        qa = pts + eye[a]
        qb = pts + eye[b]
        qab = qa + eye[b]
        for i in range(len(pts)):
            ia = index.get(tuple(qa[i]))
            if ia is None:
                continue
            ib = index.get(tuple(qb[i]))
            if ib is None:
                continue
            iab = index.get(tuple(qab[i]))
            if iab is None:
                continue
            verts = proj[[i, ia, iab, ib]]
            if np.linalg.norm(verts.mean(axis=0)) > radius:
                continue
            src = tuple(int(x) for x in pts[i]) + (a + 1, b + 1)
            tiles.append(Tile(cls, _ccw(verts), src))
    tiles = _finish(tiles, h, h in CRYSTALLOGRAPHIC_H)
    diag = "" if tiles else "no tile has all corners accepted"
    return Patch(r, "weight", tiles, radius, shift, layer_shift, pts, singular, diag)


def _dual_face_systems(frame: CoxeterFrame):
    """For each (i, {j, l}) the offset and inverse basis of the dual face in E_perp."""
    h = frame.h
    K = frame.perp_matrix.T  # (h, d)
    out = {}
    for i in range(h):
        for j, l in combinations([x for x in range(h) if x != i], 2):
            others = [t for t in range(h) if t not in (i, j, l)]
            offset = 0.5 * (K[i] - K[j] - K[l])
            B = K[others].T  # (d, d)
            out[(i, j, l)] = (offset, np.linalg.inv(B) if B.size else B)
    return out


def generate_triangular_patch(
    rank: LatticeRank | int,
    radius: float,
    shift=None,
    tolerance: float = DEFAULT_TOL,
    rule: str = "dual",
    margin: float | None = None,
) -> Patch:
    """Projected Delone triangles of the root lattice.

    ``rule='dual'`` keeps a triangle when the shifted cut meets its dual
    (n-2)-face of the Voronoi tessellation; ``rule='corners'`` keeps every
    triangle whose three corners are accepted (a superset).
    """
    r = as_rank(rank)
    if r.n < 2:
        raise ValueError("triangular patches need n >= 2")
    if radius <= 0:
        raise ValueError("radius must be positive")
    if rule not in ("dual", "corners"):
        raise ValueError(f"unknown rule {rule!r}")
    n, h = r.n, r.h
    shift = default_shift(n) if shift is None else np.asarray(shift, dtype=float)
    if n == 2:
        return _triangular_patch_a2(r, radius)
    window = build_window(r, shift, "root", 0.0, tolerance)
    frame = window.frame
    margin = 4.0 if margin is None else margin
    pts, singular = accepted_points(window, radius + margin)
    if not len(pts):
        return Patch(r, "root", [], radius, shift, 0.0, pts, singular,
                     "no accepted points: window and shift admit no lattice point")
    index = {row: i for i, row in enumerate(map(tuple, pts))}
    P = frame.parallel_matrix.T
    proj = pts @ P
    perp = pts @ frame.perp_matrix.T
    eye = np.eye(h, dtype=np.int64)
    eye = eye - eye[:, -1:]
    systems = _dual_face_systems(frame) if rule == "dual" else None
    tiles = []
    for i in range(h):
        for j, l in combinations([x for x in range(h) if x != i], 2):
            cls = classify_triangle(i + 1, j + 1, l + 1, r)
            for sign in (1, -1):
                qb = pts + sign * (eye[i] - eye[j])
                qc = pts + sign * (eye[i] - eye[l])
                if systems is not None:
                    offset, Binv = systems[(i, j, l)]
                    rel = (shift[None, :] - perp) - sign * offset
                    coef = rel @ Binv.T if Binv.size else np.zeros((len(pts), 0))
                    dual_ok = np.all(np.abs(coef) < 0.5 - tolerance, axis=1)
                else:
                    dual_ok = np.ones(len(pts), dtype=bool)
                for a in np.nonzero(dual_ok)[0]:
                    ib = index.get(tuple(qb[a]))
                    if ib is None:
                        continue
                    ic = index.get(tuple(qc[a]))
                    if ic is None:
                        continue
                    # each triangle is reached from all three corners
                    if not (tuple(pts[a]) < tuple(pts[ib]) and tuple(pts[a]) < tuple(pts[ic])):
                        continue
                    verts = proj[[a, ib, ic]]
                    if np.linalg.norm(verts.mean(axis=0)) > radius:
                        continue
                    e1, e2 = verts[1] - verts[0], verts[2] - verts[0]
                    if abs(e1[0] * e2[1] - e1[1] * e2[0]) < 1e-12:
                        continue
                    src = tuple(int(x) for x in pts[a]) + (i + 1, j + 1, l + 1)
                    tiles.append(Tile(cls, _ccw(verts), src))
    tiles = _finish(tiles, h, h in CRYSTALLOGRAPHIC_H)
    diag = "" if tiles else "no Delone triangle was accepted"
    return Patch(r, "root", tiles, radius, shift, 0.0, pts, singular, diag)


def _triangular_patch_a2(r: LatticeRank, radius: float) -> Patch:
    # E_perp is trivial: A_2 is the triangular lattice itself
    frame = build_frame(r)
    P = frame.parallel_matrix.T
    span = int(math.ceil(radius / math.sqrt(3))) + 2
    pts = []
    for a in range(-2 * span, 2 * span + 1):
        for b in range(-2 * span, 2 * span + 1):
            pts.append((a, b, 0) if (a + b) % 3 == 0 else None)
    pts = np.array([p for p in pts if p is not None], dtype=np.int64)
    pts = pts[np.linalg.norm(pts @ P, axis=1) <= radius + 4]
    index = {row: i for i, row in enumerate(map(tuple, pts))}
    proj = pts @ P
    eye = np.eye(3, dtype=np.int64)
    eye = eye - eye[:, -1:]
    cls = classify_triangle(1, 2, 3, r)
    tiles = []
    for sign in (1, -1):
        for a in range(len(pts)):
            qb = tuple(pts[a] + sign * (eye[0] - eye[1]))
            qc = tuple(pts[a] + sign * (eye[0] - eye[2]))
            if qb in index and qc in index:
                verts = proj[[a, index[qb], index[qc]]]
                if np.linalg.norm(verts.mean(axis=0)) <= radius:
                    src = tuple(int(x) for x in pts[a]) + (1, 2, 3)
                    tiles.append(Tile(cls, _ccw(verts), src))
    tiles = _finish(tiles, 3, True)
    return Patch(r, "root", tiles, radius, np.zeros(0), 0.0, pts, 0, "")


# validation and symmetry


def tiling_defects(patch: Patch, tol: float = 1e-9) -> list[str]:
    """Overlaps and non edge-to-edge contacts between tiles of a patch."""
    from shapely import STRtree
    from shapely.geometry import Polygon

    polys = [Polygon(t.vertices) for t in patch.tiles]
    tree = STRtree(polys)
    problems = []
    for a, pa in enumerate(polys):
        for b in tree.query(pa):
            b = int(b)
            if b <= a:
                continue
            pb = polys[b]
            inter = pa.intersection(pb).area
            if inter > tol * max(min(pa.area, pb.area), tol):
                problems.append(f"tiles {a} and {b} overlap (area {inter:.3g})")
                continue
            # no vertex of one tile may sit inside an edge of the other
            va, vb = patch.tiles[a].vertices, patch.tiles[b].vertices
            if any(_on_edge_interior(v, vb, tol) for v in va) or any(
                _on_edge_interior(v, va, tol) for v in vb
            ):
                problems.append(f"tiles {a} and {b} meet vertex-to-edge")
    return problems


def _on_edge_interior(v: np.ndarray, poly: np.ndarray, tol: float) -> bool:
    k = len(poly)
    for idx in range(k):
        p, q = poly[idx], poly[(idx + 1) % k]
        d = q - p
        L2 = d @ d
        t = ((v - p) @ d) / L2
        if tol < t < 1 - tol:
            foot = p + t * d
            if np.linalg.norm(v - foot) < tol * 10:
                return True
    return False


def patch_symmetry_report(patch: Patch, tol: float = 1e-6, center=(0.0, 0.0)) -> dict:
    """Largest d dividing 2h such that rotation by 2 pi/d maps the tiles onto themselves."""
    from scipy.spatial import cKDTree

    if not patch.tiles:
        raise ValueError("symmetry of an empty patch is undefined")
    c = np.asarray(center, dtype=float)
    cents = np.array([t.centroid for t in patch.tiles]) - c
    tree = cKDTree(cents)
    h = patch.h
    checked = {}
    best = 1
    for d in sorted((d for d in range(1, 2 * h + 1) if (2 * h) % d == 0), reverse=True):
        th = 2 * math.pi / d
        R = np.array([[math.cos(th), -math.sin(th)], [math.sin(th), math.cos(th)]])
        ok = True
        for t, cen in zip(patch.tiles, cents):
            dist, j = tree.query(R @ cen)
            if dist > tol:
                ok = False
                break
            other = patch.tiles[j]
            if other.cls != t.cls:
                ok = False
                break
            rot = (t.vertices - c) @ R.T
            dmat = np.linalg.norm(rot[:, None, :] - (other.vertices - c)[None, :, :], axis=2)
            if dmat.min(axis=1).max() > tol:
                ok = False
                break
        checked[d] = ok
        if ok:
            best = d
            break
    return {"order": best, "checked": checked, "tiles": len(patch.tiles)}
