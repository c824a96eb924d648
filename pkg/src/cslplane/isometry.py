"""Exact reflections and rotations in lattice-basis coordinates.

Orthogonal maps are represented by their rational matrices in the
lattice basis; orthogonality means M^T P M = P for the lattice Gram
matrix P, checked exactly. Every rotation here is a product of two
mirror reflections, and can be decomposed back into one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError, RecompositionError, UsageError
from .exact import Mat2Q, denominator
from .lattice import (
    LatticeParams,
    LatticeVector,
    gram,
    gram_dot,
    gram_norm2,
    primitive_vector,
)

REFLECTION = "reflection"
ROTATION_PQ = "rotation_pq"
RAW = "raw"


@dataclass(frozen=True)
class IsometryMatrix:
    """A rational orthogonal matrix tagged with how it was built.

    kind is one of REFLECTION (source = mirror vector), ROTATION_PQ
    (source = (p, q) of the first mirror) or RAW (source = None).
    """

    m: Mat2Q
    kind: str = RAW
    source: tuple[int, int] | None = None

    def det(self) -> Fraction:
        return self.m.det()


def _as_mat(m) -> Mat2Q:
    return m.m if isinstance(m, IsometryMatrix) else m


def is_gram_orthogonal(lat: LatticeParams, m) -> bool:
    """Exact test of M^T P M = P."""
    mat = _as_mat(m)
    p = gram(lat)
    return mat.transpose() @ p @ mat == p


def reflection_matrix(lat: LatticeParams, c: LatticeVector) -> IsometryMatrix:
    """Mirror reflection through the line spanned by the lattice vector c.

    Column j is e_j - 2 (Pc)_j / (c^T P c) * c, which is the simple
    reflection formula written in lattice coordinates. Scaling c leaves
    the result unchanged, so any nonzero integer vector works.
    """
    c1, c2 = int(c[0]), int(c[1])
    if c1 == 0 and c2 == 0:
        raise DomainError("reflection mirror vector must be nonzero")
    sc, s2 = lat.sigma_cos, lat.sigma2
    pc1 = c1 + sc * c2
    pc2 = sc * c1 + s2 * c2
    n2 = c1 * pc1 + c2 * pc2
    f1 = 2 * pc1 / n2
    f2 = 2 * pc2 / n2
    mat = Mat2Q(1 - f1 * c1, -f2 * c1, -f1 * c2, 1 - f2 * c2)
    return IsometryMatrix(mat, REFLECTION, (c1, c2))


def is_coincidence_reflection_condition(lat: LatticeParams, c: LatticeVector) -> bool:
    """Executable witness that both projection coefficients of the mirror
    map are rational for this lattice.

    With rational shape invariants this always holds (the constructor
    admits nothing else), so the function is a documented tautology kept
    as an explicit check.
    """
    c1, c2 = int(c[0]), int(c[1])
    if c1 == 0 and c2 == 0:
        raise DomainError("reflection mirror vector must be nonzero")
    n2 = gram_norm2(lat, (c1, c2))
    coeff_e1 = Fraction(c1 + lat.sigma_cos * c2) / n2
    coeff_e2 = Fraction(lat.sigma2 * c2 + lat.sigma_cos * c1) / n2
    return isinstance(coeff_e1, Fraction) and isinstance(coeff_e2, Fraction)


def axis_e2_vector(lat: LatticeParams) -> LatticeVector:
    """Primitive lattice vector pointing along the second orthonormal axis.

    Writing sigma_cos = s/t in lowest terms, (-s, t) has vanishing
    first-axis component, so it is a positive multiple of e2.
    """
    sc = lat.sigma_cos
    return (-sc.numerator, sc.denominator)


def rotation_rect(lat: LatticeParams, p: int, q: int) -> IsometryMatrix:
    """Coincidence rotation of a rectangular (or square) lattice from the
    coprime parameter pair (p, q); the first mirror vector is (p, q) and
    the second the unit second-axis vector.
    """
    if lat.sigma_cos != 0:
        raise DomainError("closed-form rectangular rotation needs sigma_cos = 0")
    if gcd(abs(p), abs(q)) != 1:
        raise UsageError(f"(p, q) = ({p}, {q}) must be coprime")
    s2 = lat.sigma2
    d = p * p + s2 * q * q
    diag = (s2 * q * q - p * p) / d
    mat = Mat2Q(diag, 2 * s2 * p * q / d, Fraction(-2 * p * q) / d, diag)
    return IsometryMatrix(mat, ROTATION_PQ, (p, q))


def rotation_general(lat: LatticeParams, c: LatticeVector) -> IsometryMatrix:
    """Rotation obtained by composing the mirror through c with the
    mirror through the second-axis vector.

    Built as an exact product of two reflections, so Gram-orthogonality
    and det +1 hold by construction on every lattice shape.
    """
    c1, c2 = int(c[0]), int(c[1])
    first = reflection_matrix(lat, (c1, c2))
    second = reflection_matrix(lat, axis_e2_vector(lat))
    return IsometryMatrix(first.m @ second.m, ROTATION_PQ, (c1, c2))


def rotation_closed_form(lat: LatticeParams, c: LatticeVector) -> Mat2Q:
    """Closed-form entries of the same rotation, written directly in the
    shape invariants. Used only as a cross-check of rotation_general;
    the composed product is the ground truth.
    """
    a1, a2 = int(c[0]), int(c[1])
    if a1 == 0 and a2 == 0:
        raise DomainError("reflection mirror vector must be nonzero")
    e, f = lat.sigma_cos, lat.sigma2
    dc = a1 * a1 + f * a2 * a2 + 2 * e * a1 * a2
    mix = a1 + e * a2
    return Mat2Q(
        (f * a2 * a2 - a1 * a1) / dc,
        2 * f * a2 * mix / dc,
        -2 * a2 * mix / dc,
        -((a1 + 2 * e * a2) ** 2 - f * a2 * a2) / dc,
    )


def closed_form_mismatches(
    lat: LatticeParams, c: LatticeVector
) -> list[tuple[str, Fraction, Fraction]]:
    """Entrywise comparison of the composed rotation against its closed
    form: returns (entry, composed, closed_form) for every disagreement.
    Reported, not asserted; see rotation_closed_form.
    """
    composed = rotation_general(lat, c).m
    closed = rotation_closed_form(lat, c)
    names = ("m11", "m12", "m21", "m22")
    return [
        (name, have, want)
        for name, have, want in zip(names, composed.entries(), closed.entries())
        if have != want
    ]


def cos_theta(m) -> Fraction:
    """Exact cosine of the rotation angle, half the trace."""
    return _as_mat(m).trace() / 2


def half_angle_tan2(lat: LatticeParams, c: LatticeVector) -> Fraction:
    """Exact squared tangent of the half rotation angle of the rotation
    built from mirror c: the angle between c and the second-axis mirror,
    computed from Gram inner products.

    Undefined (division by zero) when the mirrors are perpendicular,
    which is the half-turn case cos theta = -1.
    """
    b = axis_e2_vector(lat)
    cb = gram_dot(lat, c, b)
    if cb == 0:
        raise DomainError("half-turn rotation: half-angle tangent is infinite")
    return (gram_norm2(lat, c) * gram_norm2(lat, b) - cb * cb) / (cb * cb)


def cartan_decompose(
    lat: LatticeParams, m
) -> tuple[LatticeVector, LatticeVector]:
    """Split a coincidence rotation into two mirror vectors (c, b) with
    reflection(c) @ reflection(b) exactly equal to the input.

    b is always the second-axis vector. For the identity c = b; otherwise
    c spans the -1 eigenspace of M @ reflection(b), which reproduces the
    first-column recipe on rectangular lattices and stays valid for the
    half turn and for oblique shapes. The recomposition is verified
    exactly before returning.
    """
    mat = _as_mat(m)
    if not is_gram_orthogonal(lat, mat):
        raise DomainError("cartan_decompose requires a Gram-orthogonal matrix")
    if mat.det() != 1:
        raise DomainError("cartan_decompose requires det +1")
    b = axis_e2_vector(lat)
    rb = reflection_matrix(lat, b).m
    if mat == Mat2Q.identity():
        return b, b

    n = mat @ rb
    k = n + Mat2Q.identity()
    if (k.m11, k.m12) != (0, 0):
        v = (k.m12, -k.m11)
    elif (k.m21, k.m22) != (0, 0):
        v = (k.m22, -k.m21)
    else:
        raise RecompositionError("mirror product unexpectedly equals -identity")
    scale = v[0].denominator * v[1].denominator
    c = primitive_vector((int(v[0] * scale), int(v[1] * scale)))

    if reflection_matrix(lat, c).m @ rb != mat:
        raise RecompositionError(
            f"decomposition of {mat!r} through c={c} failed to recompose"
        )
    return c, b


def _orthonormal_frame(lat: LatticeParams) -> tuple[float, float, float]:
    """Float basis data (sigma*cos, sigma*sin, sigma) for display angles."""
    s2 = float(lat.sigma2)
    sc = float(lat.sigma_cos)
    sigma = math.sqrt(s2)
    ssin = math.sqrt(s2 - sc * sc)
    return sc, ssin, sigma


def rotation_angle_degrees(lat: LatticeParams, m) -> float:
    """Display-only rotation angle; exact logic never consumes this."""
    mat = _as_mat(m)
    ct = float(cos_theta(mat))
    # sine of theta is the (2,1) entry of the orthonormal-frame
    # conjugate L M L^-1, which reduces to sigma*sin(omega) * m21
    _, ssin, _ = _orthonormal_frame(lat)
    st = ssin * float(mat.m21)
    return math.degrees(math.atan2(st, ct))


def mirror_angle_degrees(lat: LatticeParams, c: LatticeVector) -> float:
    """Display-only angle of the mirror line of c against the first axis."""
    sc, ssin, _ = _orthonormal_frame(lat)
    x = float(c[0]) + sc * float(c[1])
    y = ssin * float(c[1])
    return math.degrees(math.atan2(y, x))


def isometry_denominator(m) -> int:
    return denominator(_as_mat(m))
