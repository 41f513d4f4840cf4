"""Exact arithmetic on the root lattice A_n and its weight lattice A_n*.

Vectors live in the hyperplane of R^{n+1} orthogonal to l_0 = l_1 + ... + l_{n+1}
and are stored by their coefficients on the vectors

    k_i = l_i - l_0 / (n + 1),      k_1 + ... + k_{n+1} = 0.

Because the k's sum to zero a vector has many coefficient tuples; we keep the
one whose last entry is zero.  All arithmetic is exact (``int`` or
``fractions.Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

BASES = ("k", "alpha", "omega", "l")


def _exact(x) -> int | Fraction:
    if isinstance(x, bool):
        raise TypeError("booleans are not lattice coordinates")
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        f = Fraction(x)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"coordinate {x!r} is not an exact rational")


@dataclass(frozen=True)
class LatticeRank:
    """Rank n of A_n together with its Coxeter number h = n + 1."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"rank must be a positive integer, got {self.n!r}")

    @property
    def h(self) -> int:
        return self.n + 1


def as_rank(rank: LatticeRank | int) -> LatticeRank:
    return rank if isinstance(rank, LatticeRank) else LatticeRank(rank)


@dataclass(frozen=True)
class LatticeVector:
    """A vector of the A_n hyperplane in canonical k-coordinates.

    ``coords`` has length n + 1 and its last entry is always 0.  ``basis``
    records the basis the vector was declared in; it takes no part in
    equality or hashing.
    """

    n: int
    coords: tuple
    basis: str = field(default="k", compare=False)

    def __post_init__(self):
        if len(self.coords) != self.n + 1:
            raise ValueError(
                f"expected {self.n + 1} k-coordinates, got {len(self.coords)}"
            )
        c = [_exact(x) for x in self.coords]
        last = c[-1]
        if last != 0:
            c = [_exact(x - last) for x in c]
        object.__setattr__(self, "coords", tuple(c))

    # constructors

    @classmethod
    def from_k(cls, coords: Sequence, n: int | None = None) -> "LatticeVector":
        n = len(coords) - 1 if n is None else n
        return cls(n, tuple(coords), "k")

    @classmethod
    def from_basis(cls, coords: Sequence, basis: str, n: int) -> "LatticeVector":
        """Build a vector from coordinates in the k, alpha, omega or l basis.

        alpha and omega coordinates have length n; k and l have length n + 1.
        l-coordinates must describe a vector orthogonal to l_0.
        """
        c = [_exact(x) for x in coords]
        if basis == "k":
            return cls(n, tuple(c), "k")
        if basis == "alpha":
            _check_len(c, n)
            # alpha_i = k_i - k_{i+1}
            m = [0] * (n + 1)
            for i, b in enumerate(c):
                m[i] += b
                m[i + 1] -= b
            return cls(n, tuple(m), "alpha")
        if basis == "omega":
            _check_len(c, n)
            # omega_i = k_1 + ... + k_i
            m = [0] * (n + 1)
            acc = 0
            for i in range(n - 1, -1, -1):
                acc += c[i]
                m[i] = acc
            return cls(n, tuple(m), "omega")
        if basis == "l":
            _check_len(c, n + 1)
            if sum(c) != 0:
                raise ValueError("l-coordinates have a nonzero l_0 component")
            return cls(n, tuple(c), "l")
        raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")

    @classmethod
    def zero(cls, n: int) -> "LatticeVector":
        return cls(n, (0,) * (n + 1))

    # coordinate views

    def to_basis(self, basis: str) -> tuple:
        m = self.coords
        n = self.n
        if basis == "k":
            return m
        if basis == "l":
            mean = Fraction(sum(m), n + 1)
            return tuple(_exact(x - mean) for x in m)
        if basis == "alpha":
            x = self.to_basis("l")
            out, acc = [], 0
            for i in range(n):
                acc += x[i]
                out.append(_exact(acc))
            return tuple(out)
        if basis == "omega":
            # canonical form has m_{n+1} = 0
            return tuple(_exact(m[i] - m[i + 1]) for i in range(n))
        raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")

    # arithmetic

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        _same_rank(self, other)
        return LatticeVector(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        _same_rank(self, other)
        return LatticeVector(self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(self.n, tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> "LatticeVector":
        s = _exact(scalar)
        return LatticeVector(self.n, tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        """True for points of the weight lattice A_n*."""
        return all(isinstance(x, int) for x in self.coords)

    def in_root_lattice(self) -> bool:
        return self.is_integral() and sum(self.coords) % (self.n + 1) == 0

    def index(self) -> int:
        """Sum of the integer k-coefficients modulo n + 1 (class in A_n*/A_n)."""
        if not self.is_integral():
            raise ValueError("index is defined only on the weight lattice")
        return sum(self.coords) % (self.n + 1)

    def __repr__(self):
        return f"LatticeVector(n={self.n}, k={list(map(str, self.coords))})"


def _check_len(c, length):
    if len(c) != length:
        raise ValueError(f"expected {length} coordinates, got {len(c)}")


def _same_rank(a: LatticeVector, b: LatticeVector):
    if a.n != b.n:
        raise ValueError(f"rank mismatch: A_{a.n} vs A_{b.n}")


def k_vector(n: int, i: int) -> LatticeVector:
    """k_i (1-based) of A_n."""
    if not 1 <= i <= n + 1:
        raise IndexError(f"k index {i} out of range 1..{n + 1}")
    m = [0] * (n + 1)
    m[i - 1] = 1
    return LatticeVector(n, tuple(m))


def k_vectors(rank: LatticeRank | int) -> list[LatticeVector]:
    n = as_rank(rank).n
    return [k_vector(n, i) for i in range(1, n + 2)]


def simple_root(n: int, i: int) -> LatticeVector:
    """alpha_i = k_i - k_{i+1}."""
    if not 1 <= i <= n:
        raise IndexError(f"root index {i} out of range 1..{n}")
    return k_vector(n, i) - k_vector(n, i + 1)


def subset_sum(n: int, subset: Iterable[int]) -> LatticeVector:
    """Sum of k_i over a set of 1-based indices."""
    m = [0] * (n + 1)
    for i in subset:
        m[i - 1] += 1
    return LatticeVector(n, tuple(m))


# Gram data


@lru_cache(maxsize=None)
def cartan_matrix(rank: LatticeRank | int) -> tuple[tuple[int, ...], ...]:
    n = as_rank(rank).n
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


@lru_cache(maxsize=None)
def cartan_inverse(rank: LatticeRank | int) -> tuple[tuple[Fraction, ...], ...]:
    # closed form for the A_n chain: min(i,j) * (h - max(i,j)) / h, 1-based
    n = as_rank(rank).n
    h = n + 1
    return tuple(
        tuple(Fraction(min(i, j) * (h - max(i, j)), h) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def k_gram(rank: LatticeRank | int) -> tuple[tuple[Fraction, ...], ...]:
    n = as_rank(rank).n
    h = n + 1
    return tuple(
        tuple(Fraction(int(i == j)) - Fraction(1, h) for j in range(h)) for i in range(h)
    )


@dataclass(frozen=True)
class GramData:
    cartan: tuple
    cartan_inverse: tuple
    k_gram: tuple


def gram_data(rank: LatticeRank | int) -> GramData:
    r = as_rank(rank)
    return GramData(cartan_matrix(r.n), cartan_inverse(r.n), k_gram(r.n))


def fundamental_weights(rank: LatticeRank | int) -> list[LatticeVector]:
    """omega_1 .. omega_n, built from the inverse Cartan matrix."""
    n = as_rank(rank).n
    cinv = cartan_inverse(n)
    weights = []
    for i in range(n):
        w = LatticeVector.zero(n)
        for j in range(n):
            w = w + simple_root(n, j + 1) * cinv[i][j]
        weights.append(LatticeVector(n, w.coords, "omega"))
    return weights


def inner_product(a: LatticeVector, b: LatticeVector) -> int | Fraction:
    """Exact scalar product, (k_i, k_j) = delta_ij - 1/(n+1)."""
    _same_rank(a, b)
    h = a.n + 1
    dot = sum(x * y for x, y in zip(a.coords, b.coords))
    return _exact(dot - Fraction(sum(a.coords) * sum(b.coords), h))


def inner_product_alpha(a: LatticeVector, b: LatticeVector) -> int | Fraction:
    """Same scalar product evaluated through the Cartan matrix."""
    _same_rank(a, b)
    c = cartan_matrix(a.n)
    x, y = a.to_basis("alpha"), b.to_basis("alpha")
    return _exact(sum(x[i] * c[i][j] * y[j] for i in range(a.n) for j in range(a.n)))


def norm2(a: LatticeVector) -> int | Fraction:
    return inner_product(a, a)


def simple_reflection(i: int, v: LatticeVector) -> LatticeVector:
    """r_i: swaps the coefficients of k_i and k_{i+1}."""
    if not 1 <= i <= v.n:
        raise IndexError(f"reflection index {i} out of range 1..{v.n}")
    m = list(v.coords)
    m[i - 1], m[i] = m[i], m[i - 1]
    return LatticeVector(v.n, tuple(m))


def reflect(v: LatticeVector, root: LatticeVector) -> LatticeVector:
    """Reflection in the hyperplane orthogonal to ``root``."""
    return v - root * Fraction(2 * inner_product(v, root), inner_product(root, root))


def coxeter_action(v: LatticeVector, power: int = 1) -> LatticeVector:
    """R = r_1 r_2 ... r_n, acting as k_1 -> k_2 -> ... -> k_{n+1} -> k_1."""
    m = list(v.coords)
    s = power % (v.n + 1)
    if s:
        m = m[-s:] + m[:-s]
    return LatticeVector(v.n, tuple(m))
