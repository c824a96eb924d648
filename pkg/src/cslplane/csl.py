"""Coincidence site lattices: intersection bases, sigma indices, coset
oracle, and exhaustive enumeration of coincidence rotations/reflections.

The structural path computes the intersection of Z^2 with its image
lattice through integer HNF machinery; the oracle recounts the same
index by enumerating quotient-group cosets, following a completely
different route. Agreement of the two is the package's self check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError, UsageError
from .exact import Mat2Q, Mat2Z, denominator, intersect_integer_lattices
from .isometry import (
    _as_mat,
    axis_e2_vector,
    is_gram_orthogonal,
    mirror_angle_degrees,
    reflection_matrix,
    rotation_angle_degrees,
    rotation_general,
)
from .lattice import DIAGONAL_BASIS, LatticeParams, LatticeVector, gram_norm2


@dataclass(frozen=True)
class CoincidenceReport:
    """Everything the intersection computation knows about one isometry."""

    denominator: int
    csl_basis: Mat2Z
    sigma: int
    oracle_sigma: int | None = None


@dataclass(frozen=True)
class EnumerationEntry:
    p: int
    q: int
    theta_degrees: float
    sigma: int
    matrix: Mat2Q


@dataclass(frozen=True)
class ReflectionEntry:
    c: LatticeVector
    theta_degrees: float
    sigma: int
    matrix: Mat2Q


def _intersection_report(mat: Mat2Q) -> tuple[int, Mat2Z, int]:
    """Denominator, HNF basis and index of Z^2 intersected with M Z^2.

    With d the matrix denominator and A = d*M integral, the image
    lattice is (1/d) A Z^2, so the intersection is (1/d)(A Z^2 n d Z^2),
    which is again an integer lattice.
    """
    d = denominator(mat)
    a = mat.scale(d).to_z()
    scaled = intersect_integer_lattices(a, Mat2Z.scaled_identity(d))
    basis = Mat2Z(*(e // d for e in scaled.entries()))
    return d, basis, abs(basis.det())


def csl_basis(lat: LatticeParams, m, with_oracle: bool = False) -> CoincidenceReport:
    """Coincidence report for a Gram-orthogonal rational matrix: the HNF
    basis of the coincidence lattice and its index sigma.

    Sigma is finite for every rational orthogonal matrix, so no
    finiteness guard is needed beyond rationality of the input.
    """
    mat = _as_mat(m)
    if not is_gram_orthogonal(lat, mat):
        raise DomainError("csl_basis requires a Gram-orthogonal matrix")
    d, basis, sigma = _intersection_report(mat)
    oracle = oracle_order(lat, m) if with_oracle else None
    return CoincidenceReport(d, basis, sigma, oracle)


def oracle_order(lat: LatticeParams, m) -> int:
    """Order of the quotient of the image lattice by the coincidence
    lattice, counted by brute force.

    Finds the least multiples k1, k2 that pull each image basis vector
    back into Z^2, spans all k1*k2 candidate cosets, and deduplicates
    representatives modulo Z^2 (differences of image vectors always stay
    in the image lattice, so integrality alone decides coset equality).
    Equals sigma via the standard quotient isomorphism.
    """
    mat = _as_mat(m)
    if not is_gram_orthogonal(lat, mat):
        raise DomainError("oracle_order requires a Gram-orthogonal matrix")
    d = denominator(mat)
    a = mat.scale(d).to_z()
    a11, a21 = a.column(0)
    a12, a22 = a.column(1)
    k1 = d // gcd(d, gcd(abs(a11), abs(a21)))
    k2 = d // gcd(d, gcd(abs(a12), abs(a22)))
    seen = set()
    for r1 in range(k1):
        x1, y1 = r1 * a11, r1 * a21
        for r2 in range(k2):
            seen.add(((x1 + r2 * a12) % d, (y1 + r2 * a22) % d))
    return len(seen)


def element_order(lat: LatticeParams, m, x: LatticeVector) -> int:
    """Least k >= 1 whose multiple of the image of x lies in the
    coincidence lattice: k*Mx must be integral and its preimage too.
    """
    mat = _as_mat(m)
    if not is_gram_orthogonal(lat, mat):
        raise DomainError("element_order requires a Gram-orthogonal matrix")
    image = mat.apply(x)
    preimage = mat.inverse().apply((Fraction(x[0]), Fraction(x[1])))
    k = 1
    for coord in (*image, *preimage):
        k = k * coord.denominator // gcd(k, coord.denominator)
    return k


def search_norm_bound(lat: LatticeParams, sigma_max: int) -> int:
    """Upper bound on p^2 + q^2 for mirror vectors (p, q) whose rotation
    can still have sigma <= sigma_max.

    Sigma is a multiple of the matrix denominator, which is bounded
    below by the Gram norm of (p, q) divided by lattice constants
    (denominator-clearing factor, second-mirror norm, and a rational
    lower bound on the smallest Gram eigenvalue). Acceptance re-checks
    the bound empirically with a widened sweep.
    """
    e, f = lat.sigma_cos, lat.sigma2
    dp = e.denominator * f.denominator // gcd(e.denominator, f.denominator)
    b = axis_e2_vector(lat)
    nb = dp * gram_norm2(lat, b)
    bound = 2 * dp * nb * (1 + f) * sigma_max
    return math.ceil(bound)


def _coprime_pairs_up_to_sign(norm_bound: int):
    """Primitive (p, q) with p^2 + q^2 <= norm_bound, one per sign pair."""
    yield (1, 0)
    qmax = math.isqrt(norm_bound)
    for q in range(1, qmax + 1):
        pmax = math.isqrt(norm_bound - q * q)
        for p in range(-pmax, pmax + 1):
            if gcd(abs(p), q) == 1:
                yield (p, q)


def enumerate_rotations(
    lat: LatticeParams, sigma_max: int
) -> list[EnumerationEntry]:
    """All coincidence rotations with sigma <= sigma_max, one entry per
    rotation, sorted by (sigma, p, q).

    (p, q) and (-p, -q) span the same mirror and are identified; other
    collisions are removed by exact matrix equality.
    """
    if sigma_max <= 0:
        raise UsageError("sigma_max must be a positive integer")
    return _enumerate_rotations_bounded(lat, sigma_max, search_norm_bound(lat, sigma_max))


def _enumerate_rotations_bounded(
    lat: LatticeParams, sigma_max: int, norm_bound: int
) -> list[EnumerationEntry]:
    seen: dict[tuple, EnumerationEntry] = {}
    for p, q in _coprime_pairs_up_to_sign(norm_bound):
        rot = rotation_general(lat, (p, q))
        # sigma is a positive multiple of the matrix denominator, so the
        # intersection can be skipped when the denominator already exceeds
        # the cap
        if denominator(rot.m) > sigma_max:
            continue
        report = csl_basis(lat, rot)
        if report.sigma > sigma_max:
            continue
        key = rot.m.entries()
        if key in seen:
            continue
        seen[key] = EnumerationEntry(
            p, q, rotation_angle_degrees(lat, rot), report.sigma, rot.m
        )
    return sorted(seen.values(), key=lambda en: (en.sigma, en.p, en.q))


def enumerate_reflections(
    lat: LatticeParams, coord_bound: int
) -> list[ReflectionEntry]:
    """Reflections through every primitive mirror with coordinates up to
    coord_bound (one per sign pair), each with its sigma."""
    if coord_bound <= 0:
        raise UsageError("coord_bound must be a positive integer")
    entries = []
    for c1 in range(0, coord_bound + 1):
        for c2 in range(-coord_bound, coord_bound + 1):
            if c1 == 0 and c2 <= 0:
                continue
            if c1 > 0 and gcd(c1, abs(c2)) != 1:
                continue
            if c1 == 0 and c2 != 1:
                continue
            refl = reflection_matrix(lat, (c1, c2))
            report = csl_basis(lat, refl)
            entries.append(
                ReflectionEntry(
                    (c1, c2),
                    mirror_angle_degrees(lat, (c1, c2)),
                    report.sigma,
                    refl.m,
                )
            )
    return sorted(entries, key=lambda en: (en.sigma, en.c))


def conjugate_to_diagonal_basis(m) -> Mat2Q:
    """The same map written in the diagonal-sublattice basis: S^-1 M S
    for the diagonal basis-change S."""
    s = DIAGONAL_BASIS.to_q()
    return s.inverse() @ _as_mat(m) @ s


def sigma_of_matrix(mat: Mat2Q) -> int:
    """Index of Z^2 n M Z^2 for any nonsingular rational M; no
    orthogonality requirement (used for conjugated matrices)."""
    if mat.det() == 0:
        raise DomainError("singular matrix")
    _, _, sigma = _intersection_report(mat)
    return sigma
