"""Coxeter plane of A_n from the closed-form Cartan eigensystem.

The frame vectors are

    x_i = (2/h)^(1/2) * lambda_i^(-1/2) * sum_j alpha'_j X_ji

where lambda_i = 2(1 + cos(m_i pi/h)) and X_ji = (-1)^(j+1) sin(j m_i pi/h),
m_i = i.  The extra (2/h)^(1/2) makes the columns of X unit vectors, which the
orthonormality of the x_i requires.

With the simple roots taken along the chain k_1, k_2, ..., k_{n+1} the pair
(x_1, x_n) spans the plane of the *bipartite* Coxeter element, on which the
k's appear in zigzag order.  We therefore lay the chain out as
alpha'_c = k_{s(c)} - k_{s(c+1)} with s = (1, 2, h, 3, h-1, 4, ...) so that the
plane is the one rotated by R = r_1 ... r_n and k_j projects to angle 2 pi j/h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .root_lattice import LatticeRank, LatticeVector, as_rank, coxeter_action, k_vectors

ORTHO_TOL = 1e-12
GEOM_TOL = 1e-9


def cartan_eigensystem(rank: LatticeRank | int) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues lambda_i and eigenvector matrix X (columns) of the A_n Cartan matrix.

    Ordered by Coxeter exponent m_i = i.  Columns of X are not normalized.
    """
    n = as_rank(rank).n
    if n < 2:
        raise ValueError("the Coxeter plane needs n >= 2")
    h = n + 1
    m = np.arange(1, n + 1)
    j = np.arange(1, n + 1)
    eigenvalues = 2.0 * (1.0 + np.cos(m * np.pi / h))
    X = ((-1.0) ** (j[:, None] + 1)) * np.sin(np.outer(j, m) * np.pi / h)
    return eigenvalues, X


def chain_order(n: int) -> list[int]:
    """k-labels along the Dynkin chain that make (x_1, x_n) the plane of R.

    Position c (1-based) of the chain carries label 1 for c = 1, c/2 + 1 for
    even c and h + 1 - (c - 1)/2 for odd c >= 3.
    """
    h = n + 1
    out = []
    for c in range(1, h + 1):
        if c == 1:
            out.append(1)
        elif c % 2 == 0:
            out.append(c // 2 + 1)
        else:
            out.append(h + 1 - (c - 1) // 2)
    return out


@dataclass(frozen=True)
class CoxeterFrame:
    """Orthonormal frame of the A_n hyperplane adapted to the Coxeter element.

    All basis vectors are given as l-coordinates (length n + 1, orthogonal to
    l_0).  ``basis_parallel`` spans E_par and is rotated so that k_h lands on
    the positive x-axis with k_1 at angle 2 pi/h.  ``basis_perp`` spans E_perp
    and is grouped in pairs (x_m, +-x_{h-m}), each oriented so that R turns it
    by +2 pi m/h; for even h the last vector is x_{h/2}, on which R is -1.
    ``scale`` is the common length sqrt(2/h) of the projected k's, divided out
    by ``project_parallel`` unless asked otherwise.
    """

    rank: LatticeRank
    eigenvalues: np.ndarray
    eigenmatrix: np.ndarray
    basis_parallel: np.ndarray  # (2, n+1)
    basis_perp: np.ndarray  # (n-2, n+1)
    perp_exponents: tuple
    scale: float

    @property
    def n(self) -> int:
        return self.rank.n

    @property
    def h(self) -> int:
        return self.rank.h

    @property
    def parallel_matrix(self) -> np.ndarray:
        """(2, n+1) map from k-coefficients to normalized E_par coordinates."""
        return self.basis_parallel / self.scale

    @property
    def perp_matrix(self) -> np.ndarray:
        return self.basis_perp

    def full_basis(self) -> np.ndarray:
        return np.vstack([self.basis_parallel, self.basis_perp])


def build_frame(rank: LatticeRank | int) -> CoxeterFrame:
    r = as_rank(rank)
    n, h = r.n, r.h
    eigenvalues, X = cartan_eigensystem(r)
    labels = chain_order(n)

    # alpha'_c in l-coordinates
    roots = np.zeros((n, h))
    for c in range(n):
        roots[c, labels[c] - 1] = 1.0
        roots[c, labels[c + 1] - 1] = -1.0
    xs = (roots.T @ X) * math.sqrt(2.0 / h) / np.sqrt(eigenvalues)
    xs = xs.T  # row i is x_{i+1}

    scale = math.sqrt(2.0 / h)
    raw = np.vstack([xs[0], xs[n - 1]])
    # orthogonal 2x2 map sending images of k_h, k_1 to scale*(1, 0), scale*(cos, sin)
    src = np.column_stack([raw[:, h - 1], raw[:, 0]])
    t = 2.0 * math.pi / h
    dst = scale * np.array([[1.0, math.cos(t)], [0.0, math.sin(t)]])
    Q = dst @ np.linalg.inv(src)
    if not np.allclose(Q @ Q.T, np.eye(2), atol=1e-10):
        raise RuntimeError(f"E_par orientation map is not orthogonal for n={n}")
    parallel = Q @ raw

    perp_rows, exps = [], []
    for m in range(2, (h - 1) // 2 + 1):
        a, b = xs[m - 1], xs[h - m - 1]
        # R moves k_j to k_{j+1}: on k-coefficients a cyclic shift
        Ra = np.roll(a, 1)
        s = b @ Ra
        if s * math.sin(2 * math.pi * m / h) < 0:
            b = -b
        perp_rows += [a, b]
        exps += [m, h - m]
    if h % 2 == 0 and n >= 3:
        perp_rows.append(xs[h // 2 - 1])
        exps.append(h // 2)
    perp = np.array(perp_rows).reshape(-1, h)

    return CoxeterFrame(
        rank=r,
        eigenvalues=eigenvalues,
        eigenmatrix=X,
        basis_parallel=parallel,
        basis_perp=perp,
        perp_exponents=tuple(exps),
        scale=scale,
    )


def _coords(v) -> np.ndarray:
    if isinstance(v, LatticeVector):
        return np.array([float(x) for x in v.coords])
    return np.asarray(v, dtype=float)


def _check(v, frame: CoxeterFrame):
    if isinstance(v, LatticeVector) and v.n != frame.n:
        raise ValueError(f"rank mismatch: vector of A_{v.n}, frame of A_{frame.n}")


def project_parallel(v, frame: CoxeterFrame, normalized: bool = True) -> np.ndarray:
    """E_par coordinates of a vector (or an array of k-coefficient rows).

    With ``normalized`` the factor sqrt(2/h) is dropped, so k_j maps to
    (cos 2 pi j/h, sin 2 pi j/h).
    """
    _check(v, frame)
    M = frame.parallel_matrix if normalized else frame.basis_parallel
    return _coords(v) @ M.T


def project_perp(v, frame: CoxeterFrame) -> np.ndarray:
    """Orthonormal E_perp coordinates (n - 2 of them; empty for n = 2)."""
    _check(v, frame)
    return _coords(v) @ frame.basis_perp.T


def coxeter_matrix(frame: CoxeterFrame) -> np.ndarray:
    """Matrix of R in the frame (E_par first, then E_perp), orthonormal coordinates."""
    B = frame.full_basis()
    # R permutes l-coordinates cyclically; B rows are orthonormal in l-space
    return B @ np.roll(B, 1, axis=1).T


def _rotation(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def coxeter_rotation_check(frame: CoxeterFrame, tol: float = GEOM_TOL) -> bool:
    """R acts on E_par as rotation by 2 pi/h, and blockwise on E_perp; R^h = 1."""
    h = frame.h
    M = coxeter_matrix(frame)
    expected = np.zeros_like(M)
    expected[:2, :2] = _rotation(2 * math.pi / h)
    exps = frame.perp_exponents
    i = 0
    while i < len(exps):
        if 2 * exps[i] == h:
            expected[2 + i, 2 + i] = -1.0
            i += 1
        else:
            expected[2 + i : 4 + i, 2 + i : 4 + i] = _rotation(2 * math.pi * exps[i] / h)
            i += 2
    if not np.allclose(M, expected, atol=tol, rtol=0):
        return False
    # the lattice-side action must agree with the matrix
    for k in k_vectors(frame.n):
        lhs = np.concatenate([project_parallel(coxeter_action(k), frame, False),
                              project_perp(coxeter_action(k), frame)])
        rhs = M @ np.concatenate([project_parallel(k, frame, False), project_perp(k, frame)])
        if not np.allclose(lhs, rhs, atol=tol, rtol=0):
            return False
    return bool(np.allclose(np.linalg.matrix_power(M, h), np.eye(len(M)), atol=1e-8, rtol=0))


def perp_rotation_angles(frame: CoxeterFrame) -> list[float]:
    """Rotation angle of R on each 2-block of E_perp (pi for a -1 singleton)."""
    exps = frame.perp_exponents
    out, i = [], 0
    while i < len(exps):
        out.append(2 * math.pi * exps[i] / frame.h)
        i += 1 if 2 * exps[i] == frame.h else 2
    return out
