"""Planar lattice shapes given by exact rational invariants.

A lattice is identified by the squared length ratio of its two basis
vectors and the mixed Gram entry (both rational), never by embedded
coordinates: the basis angle and length themselves are irrational in
general. Lattice vectors are integer coordinate pairs in that basis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError
from .exact import Mat2Q, Mat2Z, hnf2

LatticeVector = tuple[int, int]

HALF = Fraction(1, 2)


class LatticeClass(enum.Enum):
    SQUARE = "square"
    RECTANGULAR = "rectangular"
    RHOMBIC = "rhombic"
    HEXAGONAL = "hexagonal"
    OBLIQUE = "oblique"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class LatticeParams:
    """Shape invariants: sigma2 is the squared basis-length ratio,
    sigma_cos the mixed Gram entry. Both exact rationals."""

    sigma2: Fraction
    sigma_cos: Fraction


def make_lattice(sigma2, sigma_cos) -> LatticeParams:
    """Validated lattice shape; rejects degenerate (collinear) bases."""
    s2 = Fraction(sigma2)
    sc = Fraction(sigma_cos)
    if s2 <= 0 or s2 - sc * sc <= 0:
        raise DomainError("degenerate lattice")
    return LatticeParams(s2, sc)


def gram(lat: LatticeParams) -> Mat2Q:
    """Symmetric positive definite matrix of basis inner products."""
    return Mat2Q(1, lat.sigma_cos, lat.sigma_cos, lat.sigma2)


def gram_dot(lat: LatticeParams, u, v) -> Fraction:
    """Inner product of two coordinate vectors under the lattice Gram."""
    u1, u2 = Fraction(u[0]), Fraction(u[1])
    v1, v2 = Fraction(v[0]), Fraction(v[1])
    sc, s2 = lat.sigma_cos, lat.sigma2
    return u1 * v1 + sc * (u1 * v2 + u2 * v1) + s2 * u2 * v2


def gram_norm2(lat: LatticeParams, v) -> Fraction:
    return gram_dot(lat, v, v)


def classify(lat: LatticeParams) -> LatticeClass:
    if lat.sigma_cos == 0:
        return LatticeClass.SQUARE if lat.sigma2 == 1 else LatticeClass.RECTANGULAR
    if lat.sigma2 == 1:
        if abs(lat.sigma_cos) == HALF:
            return LatticeClass.HEXAGONAL
        return LatticeClass.RHOMBIC
    return LatticeClass.OBLIQUE


def primitive_vector(v) -> LatticeVector:
    """Divide out the gcd and make the first nonzero coordinate positive."""
    a, b = int(v[0]), int(v[1])
    if a == 0 and b == 0:
        raise DomainError("zero vector has no primitive representative")
    g = gcd(abs(a), abs(b))
    a, b = a // g, b // g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return (a, b)


#: columns are the two diagonal vectors of the unit cell.
DIAGONAL_BASIS = Mat2Z(1, 1, 1, -1)


def diagonal_sublattice(
    lat: LatticeParams,
) -> tuple[LatticeVector, LatticeVector, int]:
    """The sublattice spanned by the two cell diagonals and its index.

    The coordinates are shape independent; the index is recomputed from
    the HNF determinant rather than hard coded.
    """
    h, _ = hnf2(DIAGONAL_BASIS)
    return (1, 1), (1, -1), abs(h.det())


def decompose_diagonal(x: LatticeVector) -> tuple[tuple[int, int], int]:
    """Write x as an integer combination of the diagonals plus k copies
    of the first basis vector, k in {0, 1}.

    Returns ((n1, n2), k) with x = n1*(1,1) + n2*(1,-1) + k*(1,0);
    k = 0 exactly when the coordinates of x have equal parity.
    """
    b1, b2 = int(x[0]), int(x[1])
    k = (b1 + b2) % 2
    r1 = b1 - k
    return ((r1 + b2) // 2, (r1 - b2) // 2), k


def dual_shape(lat: LatticeParams) -> LatticeParams:
    """Shape invariants of the diagonal sublattice in its own ordered
    basis, normalized so its first vector has unit reference length.

    Rectangular shapes come back rhombic or square and vice versa.
    """
    s2, sc = lat.sigma2, lat.sigma_cos
    d1_norm2 = 1 + 2 * sc + s2
    d2_norm2 = 1 - 2 * sc + s2
    d1_dot_d2 = 1 - s2
    return make_lattice(d2_norm2 / d1_norm2, d1_dot_d2 / d1_norm2)
