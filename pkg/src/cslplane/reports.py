"""Handlers shared by the HTTP service and the CLI: validated requests
in, Report envelopes out. All domain work is delegated to the core
modules; this layer only parses fractions and shapes payloads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Optional

from .csl import csl_basis, enumerate_reflections, enumerate_rotations
from .errors import UsageError
from .exact import Mat2Q, Mat2Z
from .isometry import (
    cartan_decompose,
    mirror_angle_degrees,
    reflection_matrix,
    rotation_angle_degrees,
    rotation_general,
)
from .lattice import LatticeParams, classify, gram, make_lattice
from .schemas import (
    ClassifyRequest,
    DecomposeRequest,
    EnumerateRequest,
    LatticeIn,
    ReflectionRequest,
    Report,
    RotationRequest,
    VerifyRequest,
)
from .verify import LatticeCheck, run_verification

DEFAULT_ENUMERATE_SIGMA = 25
DEFAULT_COORD_BOUND = 6


def parse_fraction(value) -> Fraction:
    """Exact fraction from a string like '3/5' or an integer."""
    if isinstance(value, Fraction):
        return value
    try:
        if isinstance(value, int):
            return Fraction(value)
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a valid fraction: {value!r}") from exc


def parse_lattice(shape: LatticeIn) -> LatticeParams:
    return make_lattice(parse_fraction(shape.sigma2), parse_fraction(shape.sigma_cos))


def _fraction_strings(mat: Mat2Q) -> list[str]:
    return [str(e) for e in mat.entries()]


def _int_entries(mat: Mat2Z) -> list[int]:
    return list(mat.entries())


def _lattice_inputs(lat: LatticeParams) -> dict:
    return {"sigma2": str(lat.sigma2), "sigma_cos": str(lat.sigma_cos)}


def build_classify(request: ClassifyRequest) -> Report:
    lat = parse_lattice(request.lattice)
    return Report(
        inputs={"subcommand": "classify", **_lattice_inputs(lat)},
        lattice_class=classify(lat).value,
        result={"gram": _fraction_strings(gram(lat))},
    )


def build_rotation(request: RotationRequest) -> Report:
    lat = parse_lattice(request.lattice)
    p, q = request.p, request.q
    if gcd(abs(p), abs(q)) != 1:
        raise UsageError(f"(p, q) = ({p}, {q}) must be coprime")
    rot = rotation_general(lat, (p, q))
    report = csl_basis(lat, rot)
    return Report(
        inputs={"subcommand": "rotation", **_lattice_inputs(lat), "p": p, "q": q},
        lattice_class=classify(lat).value,
        result={
            "matrix": _fraction_strings(rot.m),
            "denominator": report.denominator,
            "sigma": report.sigma,
            "csl_basis": _int_entries(report.csl_basis),
            "theta_degrees": round(rotation_angle_degrees(lat, rot), 6),
        },
    )


def build_reflection(request: ReflectionRequest) -> Report:
    lat = parse_lattice(request.lattice)
    c = (request.c[0], request.c[1])
    refl = reflection_matrix(lat, c)
    report = csl_basis(lat, refl)
    return Report(
        inputs={"subcommand": "reflection", **_lattice_inputs(lat), "c": list(c)},
        lattice_class=classify(lat).value,
        result={
            "matrix": _fraction_strings(refl.m),
            "denominator": report.denominator,
            "sigma": report.sigma,
            "csl_basis": _int_entries(report.csl_basis),
            "theta_degrees": round(mirror_angle_degrees(lat, c), 6),
        },
    )


def build_decompose(request: DecomposeRequest) -> Report:
    lat = parse_lattice(request.lattice)
    entries = [parse_fraction(tok) for tok in request.matrix]
    mat = Mat2Q(*entries)
    c, b = cartan_decompose(lat, mat)
    return Report(
        inputs={
            "subcommand": "decompose",
            **_lattice_inputs(lat),
            "matrix": _fraction_strings(mat),
        },
        lattice_class=classify(lat).value,
        result={
            "c": list(c),
            "b": list(b),
            "theta_degrees": round(rotation_angle_degrees(lat, mat), 6),
        },
    )


def build_enumerate(request: EnumerateRequest) -> Report:
    lat = parse_lattice(request.lattice)
    inputs = {"subcommand": "enumerate", **_lattice_inputs(lat), "kind": request.kind}
    if request.kind == "rotations":
        max_sigma = (
            request.max_sigma
            if request.max_sigma is not None
            else DEFAULT_ENUMERATE_SIGMA
        )
        inputs["max_sigma"] = max_sigma
        rows = [
            {
                "p": en.p,
                "q": en.q,
                "theta_degrees": round(en.theta_degrees, 6),
                "sigma": en.sigma,
                "matrix": _fraction_strings(en.matrix),
            }
            for en in enumerate_rotations(lat, max_sigma)
        ]
    else:
        coord_bound = (
            request.coord_bound
            if request.coord_bound is not None
            else DEFAULT_COORD_BOUND
        )
        inputs["coord_bound"] = coord_bound
        rows = [
            {
                "p": en.c[0],
                "q": en.c[1],
                "theta_degrees": round(en.theta_degrees, 6),
                "sigma": en.sigma,
                "matrix": _fraction_strings(en.matrix),
            }
            for en in enumerate_reflections(lat, coord_bound)
        ]
    return Report(
        inputs=inputs,
        lattice_class=classify(lat).value,
        result={"kind": request.kind, "count": len(rows), "entries": rows},
    )


def build_verify(
    request: VerifyRequest,
    on_check: Optional[Callable[[LatticeCheck], None]] = None,
) -> Report:
    lattices = None
    inputs: dict = {"subcommand": "verify", "sigma_max": request.sigma_max}
    if request.lattice is not None:
        lat = parse_lattice(request.lattice)
        lattices = [lat]
        inputs.update(_lattice_inputs(lat))
    else:
        inputs["grid"] = "default"
    checks = run_verification(lattices=lattices, sigma_max=request.sigma_max)
    rows = []
    for check in checks:
        if on_check is not None:
            on_check(check)
        rows.append(
            {
                "sigma2": str(check.sigma2),
                "sigma_cos": str(check.sigma_cos),
                "lattice_class": check.lattice_class,
                "rotations_checked": check.rotations_checked,
                "reflections_checked": check.reflections_checked,
                "sigma_values": check.sigma_values,
                "passed": check.passed,
                "failures": check.failures,
            }
        )
    all_passed = all(check.passed for check in checks)
    return Report(
        inputs=inputs,
        lattice_class=rows[0]["lattice_class"] if len(rows) == 1 else None,
        result={"lattices": rows, "all_passed": all_passed},
        status="ok" if all_passed else "fail",
    )
