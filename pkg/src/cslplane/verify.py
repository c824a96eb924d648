"""Self-verification sweep: structural sigma against the coset oracle.

Runs a fixed family of lattice shapes through every coprime mirror pair
and primitive reflection in a box, and cross-checks each isometry four
ways: intersection index versus oracle count, exact Gram-orthogonality,
reflection-pair decomposition roundtrip, and orthogonality of the
matrix rewritten in the diagonal-sublattice basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import UsageError
from .exact import Mat2Q
from .csl import (
    conjugate_to_diagonal_basis,
    csl_basis,
    oracle_order,
    sigma_of_matrix,
)
from .isometry import (
    cartan_decompose,
    is_gram_orthogonal,
    reflection_matrix,
    rotation_general,
)
from .lattice import LatticeParams, classify, dual_shape, make_lattice

#: lattice shapes exercised by default: squares, rectangles of several
#: aspect ratios, hexagonal, rhombic, and two oblique shapes.
DEFAULT_GRID: tuple[tuple[Fraction, Fraction], ...] = tuple(
    (Fraction(a), Fraction(b))
    for a, b in [
        (1, 0),
        (2, 0),
        (3, 0),
        (Fraction(1, 2), 0),
        (5, 0),
        (1, Fraction(1, 2)),
        (1, Fraction(1, 3)),
        (2, Fraction(1, 2)),
        (3, 1),
    ]
)

PQ_SWEEP_BOUND = 12
REFLECTION_SWEEP_BOUND = 6


@dataclass
class LatticeCheck:
    """Verification outcome for a single lattice shape."""

    sigma2: Fraction
    sigma_cos: Fraction
    lattice_class: str
    rotations_checked: int = 0
    reflections_checked: int = 0
    sigma_values: list[int] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _sweep_pairs(bound: int):
    """Coprime (p, q) with |p|, |q| <= bound, one per sign pair."""
    yield (1, 0)
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if gcd(abs(p), q) == 1:
                yield (p, q)


def _sweep_mirrors(bound: int):
    """Primitive mirrors with coordinates up to bound, one per sign pair."""
    for c1 in range(0, bound + 1):
        for c2 in range(-bound, bound + 1):
            if c1 == 0 and c2 != 1:
                continue
            if c1 > 0 and gcd(c1, abs(c2)) != 1:
                continue
            yield (c1, c2)


def check_lattice(
    lat: LatticeParams,
    sigma_max: int,
    pq_bound: int = PQ_SWEEP_BOUND,
    coord_bound: int = REFLECTION_SWEEP_BOUND,
) -> LatticeCheck:
    result = LatticeCheck(lat.sigma2, lat.sigma_cos, classify(lat).value)
    dual = dual_shape(lat)
    sigmas = set()

    for p, q in _sweep_pairs(pq_bound):
        rot = rotation_general(lat, (p, q))
        report = csl_basis(lat, rot)
        if report.sigma > sigma_max:
            continue
        result.rotations_checked += 1
        sigmas.add(report.sigma)
        tag = f"rotation ({p},{q})"
        if not is_gram_orthogonal(lat, rot):
            result.failures.append(f"{tag}: not Gram-orthogonal")
            continue
        oracle = oracle_order(lat, rot)
        if oracle != report.sigma:
            result.failures.append(
                f"{tag}: structural sigma {report.sigma} != oracle {oracle}"
            )
        c, b = cartan_decompose(lat, rot)
        recomposed = reflection_matrix(lat, c).m @ reflection_matrix(lat, b).m
        if recomposed != rot.m:
            result.failures.append(f"{tag}: mirror-pair recomposition mismatch")
        conjugated = conjugate_to_diagonal_basis(rot)
        if not is_gram_orthogonal(dual, conjugated):
            result.failures.append(f"{tag}: diagonal-basis conjugate not orthogonal")
        if sigma_of_matrix(conjugated) < 1:
            result.failures.append(f"{tag}: diagonal-basis conjugate has no index")

    identity = Mat2Q.identity()
    for c in _sweep_mirrors(coord_bound):
        refl = reflection_matrix(lat, c)
        report = csl_basis(lat, refl)
        if report.sigma > sigma_max:
            continue
        result.reflections_checked += 1
        sigmas.add(report.sigma)
        tag = f"reflection {c}"
        if not is_gram_orthogonal(lat, refl):
            result.failures.append(f"{tag}: not Gram-orthogonal")
            continue
        if refl.m.det() != -1:
            result.failures.append(f"{tag}: determinant is not -1")
        if refl.m @ refl.m != identity:
            result.failures.append(f"{tag}: not an involution")
        image = refl.m.apply(c)
        if image != (Fraction(-c[0]), Fraction(-c[1])):
            result.failures.append(f"{tag}: mirror vector not negated")
        oracle = oracle_order(lat, refl)
        if oracle != report.sigma:
            result.failures.append(
                f"{tag}: structural sigma {report.sigma} != oracle {oracle}"
            )

    result.sigma_values = sorted(sigmas)
    return result


def run_verification(
    lattices=None,
    sigma_max: int = 50,
    pq_bound: int = PQ_SWEEP_BOUND,
    coord_bound: int = REFLECTION_SWEEP_BOUND,
) -> list[LatticeCheck]:
    """Run the full sweep; returns one LatticeCheck per lattice shape."""
    if sigma_max <= 0:
        raise UsageError("sigma_max must be a positive integer")
    if lattices is None:
        lattices = [make_lattice(s2, sc) for s2, sc in DEFAULT_GRID]
    return [check_lattice(lat, sigma_max, pq_bound, coord_bound) for lat in lattices]
