"""Command-line client for the report builders behind the service.

Exit codes: 0 success, 1 usage or parse error, 2 domain error
(degenerate lattice, zero vector, non-orthogonal matrix), 3 when verify
finds a mismatch. The report goes to stdout; everything human goes to
stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import DomainError, RecompositionError, UsageError
from .reports import (
    build_classify,
    build_decompose,
    build_enumerate,
    build_reflection,
    build_rotation,
    build_verify,
)
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


class _Parser(argparse.ArgumentParser):
    """argparse reports usage problems as UsageError (exit code 1)."""

    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cslplane", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, lattice=True, lattice_required=True):
        p = sub.add_parser(name, help=help_text)
        if lattice:
            p.add_argument(
                "--sigma2",
                required=lattice_required,
                help="squared basis-length ratio, as a fraction string",
            )
            p.add_argument(
                "--sigma-cos",
                default="0",
                help="mixed Gram entry, as a fraction string (default 0)",
            )
        p.add_argument(
            "--format", choices=("json", "csv"), default="json", dest="fmt"
        )
        return p

    add("classify", "name the Bravais class and print the Gram matrix")

    p = add("rotation", "coincidence rotation from a coprime mirror pair (p, q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = add("reflection", "coincidence reflection through a lattice vector")
    p.add_argument("--c", required=True, help="mirror vector as 'a1,a2'")

    p = add("decompose", "split a rotation matrix into two mirror vectors")
    p.add_argument(
        "--matrix",
        required=True,
        help=(
            "row-major rational 2x2 matrix: eight comma-separated integers "
            "(numerator,denominator per entry) or four fraction strings"
        ),
    )

    p = add("enumerate", "list coincidence rotations or reflections")
    p.add_argument("--kind", choices=("rotations", "reflections"), default="rotations")
    p.add_argument("--max-sigma", type=int, default=None,
                   help="sigma cap for rotations (default 25)")
    p.add_argument("--coord-bound", type=int, default=None,
                   help="coordinate box for reflections (default 6)")

    p = add("verify", "cross-check structural sigma against the coset oracle",
            lattice_required=False)
    p.add_argument("--max-sigma", type=int, default=50,
                   help="sigma cap for the sweep (default 50)")

    return parser


def _parse_vector(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected 'a1,a2', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise UsageError(f"vector coordinates must be integers: {text!r}") from exc


def _parse_matrix(text: str) -> tuple[str, str, str, str]:
    """Row-major matrix tokens: the documented eight-integer form
    (numerator, denominator per entry) or four fraction strings."""
    parts = [tok.strip() for tok in text.split(",")]
    if len(parts) == 8:
        try:
            nums = [int(tok) for tok in parts]
            entries = [
                str(Fraction(n, d)) for n, d in zip(nums[0::2], nums[1::2])
            ]
        except ValueError as exc:
            raise UsageError(f"matrix tokens must be integers: {text!r}") from exc
        except ZeroDivisionError as exc:
            raise UsageError("matrix entry denominator is zero") from exc
        return tuple(entries)
    if len(parts) == 4:
        return tuple(parts)
    raise UsageError(
        f"expected 8 integer tokens or 4 fraction tokens, got {len(parts)}"
    )


def _lattice_in(args) -> LatticeIn:
    return LatticeIn(sigma2=args.sigma2, sigma_cos=args.sigma_cos)


def _dispatch(args) -> Report:
    if args.command == "classify":
        return build_classify(ClassifyRequest(lattice=_lattice_in(args)))
    if args.command == "rotation":
        return build_rotation(
            RotationRequest(lattice=_lattice_in(args), p=args.p, q=args.q)
        )
    if args.command == "reflection":
        return build_reflection(
            ReflectionRequest(lattice=_lattice_in(args), c=_parse_vector(args.c))
        )
    if args.command == "decompose":
        return build_decompose(
            DecomposeRequest(lattice=_lattice_in(args), matrix=_parse_matrix(args.matrix))
        )
    if args.command == "enumerate":
        return build_enumerate(
            EnumerateRequest(
                lattice=_lattice_in(args),
                kind=args.kind,
                max_sigma=args.max_sigma,
                coord_bound=args.coord_bound,
            )
        )
    if args.command == "verify":
        lattice = None
        if args.sigma2 is not None:
            lattice = _lattice_in(args)
        elif args.sigma_cos != "0":
            raise UsageError("--sigma-cos needs --sigma2")

        def progress(check):
            state = "PASS" if check.passed else "FAIL"
            print(
                f"{state} lattice=({check.sigma2},{check.sigma_cos}) "
                f"class={check.lattice_class} "
                f"rotations={check.rotations_checked} "
                f"reflections={check.reflections_checked} "
                f"sigma_values={check.sigma_values}",
                file=sys.stderr,
            )
            for failure in check.failures:
                print(f"  {failure}", file=sys.stderr)

        return build_verify(
            VerifyRequest(sigma_max=args.max_sigma, lattice=lattice),
            on_check=progress,
        )
    raise UsageError(f"unknown command {args.command!r}")


def _theta(value) -> str:
    return f"{value:.6f}"


def _render_csv(command: str, report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    inputs, result = report.inputs, report.result

    if command == "classify":
        writer.writerow(["sigma2", "sigma_cos", "lattice_class",
                         "g11", "g12", "g21", "g22"])
        writer.writerow([inputs["sigma2"], inputs["sigma_cos"],
                         report.lattice_class, *result["gram"]])
    elif command == "rotation":
        writer.writerow(["p", "q", "theta_degrees", "sigma",
                         "m11", "m12", "m21", "m22",
                         "denominator", "h11", "h12", "h21", "h22"])
        writer.writerow([inputs["p"], inputs["q"], _theta(result["theta_degrees"]),
                         result["sigma"], *result["matrix"],
                         result["denominator"], *result["csl_basis"]])
    elif command == "reflection":
        writer.writerow(["c1", "c2", "theta_degrees", "sigma",
                         "m11", "m12", "m21", "m22",
                         "denominator", "h11", "h12", "h21", "h22"])
        writer.writerow([*inputs["c"], _theta(result["theta_degrees"]),
                         result["sigma"], *result["matrix"],
                         result["denominator"], *result["csl_basis"]])
    elif command == "decompose":
        writer.writerow(["m11", "m12", "m21", "m22", "c1", "c2", "b1", "b2",
                         "theta_degrees"])
        writer.writerow([*inputs["matrix"], *result["c"], *result["b"],
                         _theta(result["theta_degrees"])])
    elif command == "enumerate":
        writer.writerow(["p", "q", "theta_degrees", "sigma",
                         "m11", "m12", "m21", "m22"])
        for en in result["entries"]:
            writer.writerow([en["p"], en["q"], _theta(en["theta_degrees"]),
                             en["sigma"], *en["matrix"]])
    elif command == "verify":
        writer.writerow(["sigma2", "sigma_cos", "lattice_class",
                         "rotations_checked", "reflections_checked",
                         "sigma_values", "passed"])
        for row in result["lattices"]:
            writer.writerow([row["sigma2"], row["sigma_cos"],
                             row["lattice_class"], row["rotations_checked"],
                             row["reflections_checked"],
                             ";".join(str(s) for s in row["sigma_values"]),
                             row["passed"]])
    else:
        raise UsageError(f"no csv renderer for {command!r}")
    return buf.getvalue()


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return int(exc.code or 0)
        report = _dispatch(args)
        if args.fmt == "json":
            sys.stdout.write(json.dumps(report.model_dump(), indent=2) + "\n")
        else:
            sys.stdout.write(_render_csv(args.command, report))
        return 3 if report.status == "fail" else 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RecompositionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
