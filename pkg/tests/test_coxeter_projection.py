import math

import numpy as np
import pytest

from coxtile.coxeter_projection import (
    build_frame,
    cartan_eigensystem,
    coxeter_matrix,
    coxeter_rotation_check,
    perp_rotation_angles,
    project_parallel,
    project_perp,
)
from coxtile.root_lattice import LatticeVector, cartan_matrix, k_vector, k_vectors, norm2

NS = range(2, 12)


def test_eigensystem_n2():
    lam, _ = cartan_eigensystem(2)
    assert np.allclose(sorted(lam), [1, 3])
    with pytest.raises(ValueError):
        cartan_eigensystem(1)


@pytest.mark.parametrize("n", NS)
def test_eigensystem_matches_numerical_solver(n):
    lam, X = cartan_eigensystem(n)
    C = np.array(cartan_matrix(n), dtype=float)
    assert np.abs(C @ X - X * lam).max() < 1e-10
    assert np.allclose(np.sort(lam), np.linalg.eigvalsh(C), atol=1e-12)
    m = np.arange(1, n + 1)
    assert np.allclose(lam, 2 * (1 + np.cos(m * np.pi / (n + 1))))


@pytest.mark.parametrize("n", NS)
def test_frame_orthonormal_and_complete(n):
    f = build_frame(n)
    B = f.full_basis()
    assert B.shape == (n, n + 1)
    assert np.abs(B @ B.T - np.eye(n)).max() < 1e-12
    assert np.abs(B.sum(axis=1)).max() < 1e-12  # inside the A_n hyperplane
    assert f.basis_perp.shape[0] == n - 2


@pytest.mark.parametrize("n", NS)
def test_k_images_on_unit_circle(n):
    f = build_frame(n)
    h = n + 1
    for j in range(1, h + 1):
        p = project_parallel(k_vector(n, j), f)
        assert np.allclose(p, [math.cos(2 * math.pi * j / h), math.sin(2 * math.pi * j / h)], atol=1e-9)
    assert np.allclose(project_parallel(np.ones(h), f), 0, atol=1e-12)


@pytest.mark.parametrize("n", NS)
def test_k_gram_on_the_plane(n):
    f = build_frame(n)
    P = project_parallel(np.eye(n + 1), f)
    G = P @ P.T / (P[0] @ P[0])
    j = np.arange(n + 1)
    assert np.allclose(G, np.cos(2 * np.pi * (j[:, None] - j[None, :]) / (n + 1)), atol=1e-9)


@pytest.mark.parametrize("n", NS)
def test_pythagoras_and_linearity(n):
    rng = np.random.default_rng(n)
    f = build_frame(n)
    for _ in range(20):
        a = rng.integers(-5, 6, n + 1)
        b = rng.integers(-5, 6, n + 1)
        va, vb = LatticeVector.from_k(tuple(int(x) for x in a)), LatticeVector.from_k(tuple(int(x) for x in b))
        par = project_parallel(va, f, normalized=False)
        perp = project_perp(va, f)
        assert abs(par @ par + perp @ perp - float(norm2(va))) < 1e-10
        assert np.allclose(project_parallel(va + vb, f), project_parallel(va, f) + project_parallel(vb, f), atol=1e-12)


@pytest.mark.parametrize("n", NS)
def test_dihedral_invariance_of_k_star(n):
    f = build_frame(n)
    P = project_parallel(np.eye(n + 1), f)
    t = 2 * math.pi / (n + 1)
    R = np.array([[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]])
    for M in (R, np.diag([1.0, -1.0])):
        Q = P @ M.T
        d = np.linalg.norm(Q[:, None] - P[None, :], axis=2)
        assert d.min(axis=1).max() < 1e-9


def test_a3_square():
    f = build_frame(3)
    P = project_parallel(np.eye(4), f)
    target = np.array([(0, 1), (-1, 0), (0, -1), (1, 0)], dtype=float)
    # a single orthogonal map takes ours to the target
    Q, *_ = np.linalg.lstsq(P, target, rcond=None)
    assert np.allclose(Q @ Q.T, np.eye(2), atol=1e-9)
    assert np.allclose(P @ Q, target, atol=1e-9)
    s = k_vector(3, 1) + k_vector(3, 3)
    assert np.linalg.norm(project_parallel(s, f)) < 1e-12
    assert abs(np.linalg.norm(project_perp(s, f)) ** 2 - float(norm2(s))) < 1e-12
    assert norm2(s) == 1


def test_a4_perp_pentagram():
    f = build_frame(4)
    Q = np.array([project_perp(k, f) for k in k_vectors(4)])
    for j in range(5):
        a, b = Q[j], Q[(j + 1) % 5]
        ang = math.atan2(a[0] * b[1] - a[1] * b[0], a @ b) % (2 * math.pi)
        assert abs(ang - 4 * math.pi / 5) < 1e-9


@pytest.mark.parametrize("n", NS)
def test_rotation_check(n):
    f = build_frame(n)
    assert coxeter_rotation_check(f)
    M = coxeter_matrix(f)
    assert np.allclose(np.linalg.matrix_power(M, n + 1), np.eye(n), atol=1e-8)


def test_a4_block_angles():
    f = build_frame(4)
    M = coxeter_matrix(f)
    assert abs(math.atan2(M[1, 0], M[0, 0]) - 2 * math.pi / 5) < 1e-9
    assert np.allclose(perp_rotation_angles(f), [4 * math.pi / 5])


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError):
        project_parallel(k_vector(3, 1), build_frame(4))


def test_n2_perp_is_empty():
    assert project_perp(k_vector(2, 1), build_frame(2)).shape == (0,)
