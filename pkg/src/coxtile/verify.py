"""Self-checks grouped in suites; each check reports {pass, details}."""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

from . import reference_tables as ref
from .coxeter_projection import (
    ORTHO_TOL,
    build_frame,
    cartan_eigensystem,
    coxeter_rotation_check,
    project_parallel,
)
from .cubic_descent import (
    a2_hexagon_check,
    cube_orbit_decomposition,
    edge_image_check,
    expected_orbit_sizes,
    image_law_check,
    k_lift_check,
    rhombohedron_descent,
)
from .prototiles import (
    RhombusClass,
    classify_rhombus,
    classify_triangle,
    interior_angles,
    rhombic_prototiles,
    triangular_prototiles,
)
from .root_lattice import cartan_matrix

SUITES = ("tables", "descent", "eigen", "all")


def _result(ok: bool, details) -> dict:
    return {"pass": bool(ok), "details": details}


def check_triangle_table() -> dict:
    bad = {}
    for h, rows in ref.TRIANGLES.items():
        got = [c.parts for c in triangular_prototiles(h - 1)]
        if got != sorted(rows):
            bad[h] = {"got": got, "expected": rows}
    return _result(not bad, bad or "all rows match")


def _pairs(classes):
    return sorted(tuple(sorted(c.angles)) for c in classes)


def check_rhombus_table() -> dict:
    bad, notes = {}, {}
    for h, rows in ref.RHOMBI.items():
        got = _pairs(rhombic_prototiles(h - 1))
        want = sorted(tuple(sorted(p)) for p in rows)
        if h in ref.INCOMPLETE_RHOMBUS_ROWS:
            first = _pairs(rhombic_prototiles(h - 1)[: len(rows)])
            ok = len(got) == ref.INCOMPLETE_RHOMBUS_ROWS[h] and first == want
            notes[h] = f"rule gives {len(got)} classes, reference lists {len(rows)}"
            if not ok:
                bad[h] = {"got": got, "expected": want}
        elif got != want:
            bad[h] = {"got": got, "expected": want}
    return _result(not bad, {"mismatch": bad, "notes": notes})


def check_projection_consistency(ns=range(2, 12), tol: float = 1e-9) -> dict:
    """Floating angles and edges of projected tiles agree with the integer classes."""
    worst = 0.0
    for n in ns:
        frame = build_frame(n)
        h = n + 1
        k = project_parallel(np.eye(h), frame)
        if n >= 3:
            for i, j in combinations(range(h), 2):
                cls = classify_rhombus(i + 1, j + 1, n)
                if not isinstance(cls, RhombusClass):
                    continue
                poly = np.array([np.zeros(2), k[i], k[i] + k[j], k[j]])
                if k[i][0] * k[j][1] - k[i][1] * k[j][0] < 0:
                    poly = poly[::-1]
                ang = sorted(interior_angles(poly))
                want = sorted([float(a) * math.pi for a in cls.angles] * 2)
                worst = max(worst, max(abs(a - b) for a, b in zip(ang, want)))
                worst = max(worst, abs(np.linalg.norm(k[i]) - 1), abs(np.linalg.norm(k[j]) - 1))
        for i, j, l in combinations(range(h), 3):
            cls = classify_triangle(i + 1, j + 1, l + 1, n)
            poly = np.array([k[i], k[j], k[l]])
            e1, e2 = poly[1] - poly[0], poly[2] - poly[0]
            if e1[0] * e2[1] - e1[1] * e2[0] < 0:
                poly = poly[::-1]
            ang = interior_angles(poly)
            # edge opposite vertex v
            edges = [np.linalg.norm(poly[(v + 1) % 3] - poly[(v + 2) % 3]) for v in range(3)]
            order = np.argsort(ang)
            want_ang = [float(a) * math.pi for a in cls.angles]
            worst = max(worst, max(abs(ang[o] - w) for o, w in zip(order, want_ang)))
            worst = max(worst, max(abs(edges[o] - e) for o, e in zip(order, cls.edge_lengths)))
    return _result(worst < tol, {"max_error": float(worst)})


def check_eigensystem(ns=range(2, 12)) -> dict:
    rows = {}
    ok = True
    for n in ns:
        lam, X = cartan_eigensystem(n)
        C = np.array(cartan_matrix(n), dtype=float)
        resid = float(np.abs(C @ X - X * lam).max())
        frame = build_frame(n)
        B = frame.full_basis()
        ortho = float(np.abs(B @ B.T - np.eye(n)).max())
        rot = coxeter_rotation_check(frame)
        rows[n] = {"residual": resid, "orthonormality": ortho, "rotation": rot}
        ok &= resid < 1e-10 and ortho < ORTHO_TOL and rot
    return _result(ok, rows)


def check_orbit_histograms(ns=range(1, 9)) -> dict:
    got = {n: cube_orbit_decomposition(n) for n in ns}
    ok = all(got[n] == expected_orbit_sizes(n) for n in ns)
    return _result(ok and got.get(4) == [1, 1, 5, 10, 10, 5], got)


def check_image_law(ns=range(1, 9)) -> dict:
    res = {n: image_law_check(n) for n in ns}
    return _result(all(r["pass"] for r in res.values()),
                   {n: r["details"] for n, r in res.items()})


def run_suite(name: str) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    checks = {}
    if name in ("tables", "all"):
        checks["triangle_table"] = check_triangle_table()
        checks["rhombus_table"] = check_rhombus_table()
        checks["projection_consistency"] = check_projection_consistency()
    if name in ("descent", "all"):
        checks["image_law"] = check_image_law()
        checks["orbit_histogram"] = check_orbit_histograms()
        checks["k_lift"] = _result(k_lift_check(4), "five lift identities with l_0 tracked")
        rh = rhombohedron_descent(4)
        checks["rhombohedron"] = _result(rh["pass"], {k: v for k, v in rh.items() if k != "pass"})
        checks["a2_hexagon"] = a2_hexagon_check()
        checks["edge_images"] = _result(all(edge_image_check(n) for n in range(1, 7)),
                                        "cube edges along l_i map to k_i for n <= 6")
    if name in ("eigen", "all"):
        checks["eigensystem"] = check_eigensystem()
    return checks


def format_report(checks: dict) -> str:
    lines = [f"{'PASS' if c['pass'] else 'FAIL'}  {name}" for name, c in checks.items()]
    failed = sum(not c["pass"] for c in checks.values())
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines)
