"""Command-line interface.

    kiss3 verify [--suite NAME]... [--tol X] [--grid N] [--seed S]
                 [--format text|json] [--out PATH] [--perturb IDX:DELTA]
    kiss3 table
    kiss3 sample --n N --min-sep DEG --seed S
    kiss3 energy --points FILE

Exit codes: 0 on success (conclusion 12 for full runs), 1 on any suite
failure, 2 on configuration errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import harness, sphere
from .certificate import build_certificate
from .energy import energy, energy_to_json_dict
from .errors import Kiss3Error


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kiss3",
        description="Verify the extended-Delsarte computation showing that "
        "the kissing number in three dimensions is 12.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the verification suites")
    verify.add_argument(
        "--suite",
        action="append",
        choices=harness.ALL_SUITES,
        help="restrict to the named suite (repeatable; default: all)",
    )
    verify.add_argument("--tol", type=float, default=1e-7, help="enclosure tolerance")
    verify.add_argument(
        "--grid", type=int, default=256, help="grid density for refinement"
    )
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--out", type=Path, default=None, help="write report here")
    verify.add_argument(
        "--lemma1-sets", type=int, default=1000, help="random sets for lemmas 1/2"
    )
    verify.add_argument(
        "--lemma3-sets", type=int, default=500, help="separated sets for lemma 3"
    )
    verify.add_argument(
        "--perturb",
        metavar="IDX:DELTA",
        default=None,
        help="negative control: add the rational DELTA to monomial "
        "coefficient IDX of the certificate (e.g. 9:1/100)",
    )

    table = sub.add_parser("table", help="print the reference-constant comparison table")
    table.add_argument("--tol", type=float, default=1e-7)
    table.add_argument("--seed", type=int, default=42)
    table.add_argument("--grid", type=int, default=256)
    table.add_argument(
        "--skip-refine", action="store_true", help="omit the non-rigorous estimates"
    )

    sample = sub.add_parser("sample", help="emit a random separated point set")
    sample.add_argument("--n", type=int, required=True)
    sample.add_argument("--min-sep", type=float, default=60.0, help="degrees")
    sample.add_argument("--seed", type=int, default=42)

    en = sub.add_parser("energy", help="energy summary of a point-set file")
    en.add_argument("--points", type=Path, required=True)
    return parser


def _parse_perturbation(spec: str):
    idx_str, delta_str = spec.split(":", 1)
    return harness.perturbed_coeffs(int(idx_str), Fraction(delta_str))


def _cmd_verify(args) -> int:
    coeffs = harness.F_COEFFS
    if args.perturb:
        try:
            coeffs = _parse_perturbation(args.perturb)
        except (ValueError, IndexError) as exc:
            print(f"bad --perturb argument: {exc}", file=sys.stderr)
            return 2
    config = harness.RunConfig(
        tolerance=args.tol,
        grid_density=args.grid,
        seed=args.seed,
        suites=tuple(args.suite) if args.suite else harness.ALL_SUITES,
        output_format=args.format,
        output_path=str(args.out) if args.out else None,
        lemma1_sets=args.lemma1_sets,
        lemma3_sets=args.lemma3_sets,
        f_coeffs=coeffs,
    )
    try:
        config.validate()
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    report = harness.run(config)
    text = harness.emit_table(report, args.format)
    if args.out:
        args.out.write_text(text + "\n")
    print(text)
    return 0 if report.ok else 1


def _cmd_table(args) -> int:
    suites = ("certificate", "bounds", "theorem")
    if not args.skip_refine:
        suites += ("refine",)
    config = harness.RunConfig(
        tolerance=args.tol,
        grid_density=args.grid,
        seed=args.seed,
        suites=suites,
    )
    report = harness.run(config)
    print(harness.emit_table(report, "text"))
    return 0 if report.ok else 1


def _cmd_sample(args) -> int:
    try:
        ps = sphere.random_separated_set(
            args.n, math.radians(args.min_sep), seed=args.seed
        )
    except Kiss3Error as exc:
        print(f"sampling failed: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(sphere.format_points(ps))
    return 0


def _cmd_energy(args) -> int:
    try:
        ps = sphere.parse_points(args.points.read_text())
    except (OSError, ValueError) as exc:
        print(f"cannot read point set: {exc}", file=sys.stderr)
        return 2
    summary = energy(ps, build_certificate())
    print(json.dumps(energy_to_json_dict(summary), sort_keys=True, indent=2))
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "verify": _cmd_verify,
        "table": _cmd_table,
        "sample": _cmd_sample,
        "energy": _cmd_energy,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
