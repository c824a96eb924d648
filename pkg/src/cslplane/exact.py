"""Exact rational scalars and 2x2 integer/rational matrix algebra.

Everything in this package is built on arbitrary-precision rationals
(``fractions.Fraction``) and the two tiny matrix types below. Matrices
are stored row-major (``m11 m12 / m21 m22``) but are read column-wise:
column j is the image of basis vector j.

Enumerations up to sigma ~ 1e4 overflow 64-bit intermediates, so all
integer work stays on Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DomainError

Rational = Fraction


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with g = a*x + b*y and g >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


class Mat2Q:
    """2x2 matrix over Q. Immutable by convention; entries are Fractions."""

    __slots__ = ("m11", "m12", "m21", "m22")

    def __init__(self, m11, m12, m21, m22):
        self.m11 = Fraction(m11)
        self.m12 = Fraction(m12)
        self.m21 = Fraction(m21)
        self.m22 = Fraction(m22)

    @classmethod
    def identity(cls) -> "Mat2Q":
        return cls(1, 0, 0, 1)

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Row-major entry tuple."""
        return (self.m11, self.m12, self.m21, self.m22)

    def column(self, j: int) -> tuple[Fraction, Fraction]:
        if j == 0:
            return (self.m11, self.m21)
        if j == 1:
            return (self.m12, self.m22)
        raise IndexError(j)

    def det(self) -> Fraction:
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self) -> Fraction:
        return self.m11 + self.m22

    def transpose(self) -> "Mat2Q":
        return Mat2Q(self.m11, self.m21, self.m12, self.m22)

    def __matmul__(self, other: "Mat2Q") -> "Mat2Q":
        return Mat2Q(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def __add__(self, other: "Mat2Q") -> "Mat2Q":
        return Mat2Q(
            self.m11 + other.m11,
            self.m12 + other.m12,
            self.m21 + other.m21,
            self.m22 + other.m22,
        )

    def __neg__(self) -> "Mat2Q":
        return Mat2Q(-self.m11, -self.m12, -self.m21, -self.m22)

    def scale(self, k) -> "Mat2Q":
        k = Fraction(k)
        return Mat2Q(k * self.m11, k * self.m12, k * self.m21, k * self.m22)

    def apply(self, v: tuple) -> tuple[Fraction, Fraction]:
        """Image of the coordinate vector v = (v1, v2)."""
        v1, v2 = Fraction(v[0]), Fraction(v[1])
        return (self.m11 * v1 + self.m12 * v2, self.m21 * v1 + self.m22 * v2)

    def inverse(self) -> "Mat2Q":
        d = self.det()
        if d == 0:
            raise DomainError("singular matrix has no inverse")
        return Mat2Q(self.m22 / d, -self.m12 / d, -self.m21 / d, self.m11 / d)

    def is_integral(self) -> bool:
        return all(e.denominator == 1 for e in self.entries())

    def to_z(self) -> "Mat2Z":
        if not self.is_integral():
            raise DomainError("matrix is not integral")
        return Mat2Z(*(int(e) for e in self.entries()))

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat2Q) and self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __repr__(self) -> str:
        return f"Mat2Q({self.m11}, {self.m12}, {self.m21}, {self.m22})"


class Mat2Z:
    """2x2 integer matrix; used mainly as a column basis of a sublattice."""

    __slots__ = ("m11", "m12", "m21", "m22")

    def __init__(self, m11: int, m12: int, m21: int, m22: int):
        for e in (m11, m12, m21, m22):
            if not isinstance(e, int):
                raise TypeError(f"integer entry expected, got {e!r}")
        self.m11 = m11
        self.m12 = m12
        self.m21 = m21
        self.m22 = m22

    @classmethod
    def identity(cls) -> "Mat2Z":
        return cls(1, 0, 0, 1)

    @classmethod
    def scaled_identity(cls, k: int) -> "Mat2Z":
        return cls(k, 0, 0, k)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.m11, self.m12, self.m21, self.m22)

    def column(self, j: int) -> tuple[int, int]:
        if j == 0:
            return (self.m11, self.m21)
        if j == 1:
            return (self.m12, self.m22)
        raise IndexError(j)

    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __matmul__(self, other: "Mat2Z") -> "Mat2Z":
        return Mat2Z(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def to_q(self) -> Mat2Q:
        return Mat2Q(*self.entries())

    def contains(self, v: tuple[int, int]) -> bool:
        """Membership of the integer vector v in the column lattice."""
        d = self.det()
        if d == 0:
            raise DomainError("not a lattice basis: zero determinant")
        # adj(M) v must be divisible by det
        x = self.m22 * v[0] - self.m12 * v[1]
        y = -self.m21 * v[0] + self.m11 * v[1]
        return x % d == 0 and y % d == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat2Z) and self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __repr__(self) -> str:
        return f"Mat2Z({self.m11}, {self.m12}, {self.m21}, {self.m22})"


def hnf2(m: Mat2Z) -> tuple[Mat2Z, Mat2Z]:
    """Column-style Hermite normal form of a nonsingular 2x2 integer matrix.

    Returns (H, U) with M @ U = H, U unimodular, and H lower triangular
    by columns: h12 = 0, h11 > 0, h22 > 0, 0 <= h21 < h22. H is the
    canonical basis of the column lattice of M.
    """
    if m.det() == 0:
        raise DomainError("hnf2 requires a nonsingular matrix")
    a, c = m.column(0)
    b, d = m.column(1)
    u11, u21 = 1, 0  # U column 1
    u12, u22 = 0, 1  # U column 2

    # Zero the top entry of column 2 with a unimodular combination of
    # the two columns; the pivot becomes gcd(a, b) > 0.
    g, x, y = xgcd(a, b)
    p, q = -(b // g), a // g
    a, c, b, d = (
        x * a + y * b,
        x * c + y * d,
        p * a + q * b,
        p * c + q * d,
    )
    u11, u21, u12, u22 = (
        x * u11 + y * u12,
        x * u21 + y * u22,
        p * u11 + q * u12,
        p * u21 + q * u22,
    )

    if d < 0:
        b, d, u12, u22 = -b, -d, -u12, -u22
    k = c // d
    c -= k * d
    u11 -= k * u12
    u21 -= k * u22

    return Mat2Z(a, b, c, d), Mat2Z(u11, u12, u21, u22)


def _kernel_columns(w: list[list[int]]) -> list[tuple[int, int, int, int]]:
    """Integer kernel basis of a rank-2 matrix with 2 rows and 4 columns.

    Column-reduces w in place while accumulating the unimodular column
    transform; the two columns that end up identically zero correspond
    to kernel generators.
    """
    ncols = 4
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def colop(row, jp, j):
        a, b = w[row][jp], w[row][j]
        g, x, y = xgcd(a, b)
        p, q = -(b // g), a // g
        for r in range(2):
            w[r][jp], w[r][j] = x * w[r][jp] + y * w[r][j], p * w[r][jp] + q * w[r][j]
        for r in range(ncols):
            u[r][jp], u[r][j] = x * u[r][jp] + y * u[r][j], p * u[r][jp] + q * u[r][j]

    pivot = 0
    for row in range(2):
        j0 = next((j for j in range(pivot, ncols) if w[row][j] != 0), None)
        if j0 is None:
            raise DomainError("matrix does not have full row rank")
        if j0 != pivot:
            for r in range(2):
                w[r][pivot], w[r][j0] = w[r][j0], w[r][pivot]
            for r in range(ncols):
                u[r][pivot], u[r][j0] = u[r][j0], u[r][pivot]
        for j in range(pivot + 1, ncols):
            if w[row][j] != 0:
                colop(row, pivot, j)
        pivot += 1

    return [tuple(u[r][j] for r in range(ncols)) for j in range(pivot, ncols)]


def intersect_integer_lattices(a: Mat2Z, b: Mat2Z) -> Mat2Z:
    """HNF basis of the intersection of the column lattices of a and b.

    Solves a@x = b@y over the integers: kernel vectors of the 2x4 block
    matrix [a | -b] give the coefficient pairs, and their a-images
    generate the intersection.
    """
    if a.det() == 0 or b.det() == 0:
        raise DomainError("lattice bases must be nonsingular")
    w = [
        [a.m11, a.m12, -b.m11, -b.m12],
        [a.m21, a.m22, -b.m21, -b.m22],
    ]
    k1, k2 = _kernel_columns(w)
    x = Mat2Z(k1[0], k2[0], k1[1], k2[1])
    h, _ = hnf2(a @ x)
    return h


def denominator(m: Mat2Q) -> int:
    """Least d > 0 such that d*m is integral (lcm of entry denominators)."""
    d = 1
    for e in m.entries():
        d = d * e.denominator // gcd(d, e.denominator)
    return d
