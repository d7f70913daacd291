"""Command-line front end.

Exit codes: 0 ok, 2 parse error, 3 dimension or validation error,
4 invalid density matrix.
"""
from __future__ import annotations

import argparse
import sys
from importlib import resources

import numpy as np

from . import io
from .analysis import _clean, analyze
from .exceptions import DimensionMismatch, InvalidStateError, QLatticeError, ValidationError
from .finite import (
    FiniteSystem,
    family_coherent,
    family_position,
    family_position_complement,
    family_position_momentum,
)
from .numeric import tolerance_from_env
from .pentagram import pentagram_analysis

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_STATE = 0, 2, 3, 4

EXAMPLES = {
    "independence-h6": ("independence_h6_family.json", "independence_h6_rho.json"),
    "totalness-h6": ("totalness_h6_family.json", "totalness_h6_rho.json"),
    "position": ("position_d3_family.json", None),
    "position-momentum": ("position_momentum_d3_family.json", None),
    "coherent": ("coherent_d3_family.json", None),
}

SYSTEM_KINDS = ("position", "position-momentum", "coherent", "position-complement")


def fixture_path(name):
    return resources.files("qlattice") / "fixtures" / name


def _tolerance(args):
    return tolerance_from_env().replace(
        rank_rtol=args.rank_rtol, eq_atol=args.eq_atol, psd_atol=args.psd_atol
    )


def _load_family(path, tol):
    return io.family_from_doc(io.load_json(path), tol)


def _load_state(path, tol):
    return io.state_from_doc(io.load_json(path), tol)


def _system(args, tol):
    fiducial = None
    if getattr(args, "fiducial_file", None):
        fiducial = io.decode_vector(io.load_json(args.fiducial_file), "fiducial")
    return FiniteSystem(args.d, fiducial=fiducial, seed=args.fiducial_seed, tol=tol)


def build_family(kind, args, tol):
    d = args.d
    if kind == "position":
        return family_position(d)
    if kind == "position-complement":
        return family_position_complement(d)
    if kind == "position-momentum":
        return family_position_momentum(d)
    if kind == "coherent":
        return family_coherent(_system(args, tol))
    raise ValidationError(f"unknown family kind {kind!r}")


def _fmt(x):
    return f"{x:.3f}"


def _matrix_table(name, m):
    m = np.asarray(m)
    lines = [f"{name}:"]
    real = np.allclose(m.imag, 0)
    for row in m:
        cells = [_fmt(z.real) if real else f"{z.real:.3f}{z.imag:+.3f}i" for z in row]
        lines.append("  " + " ".join(c.rjust(7) for c in cells))
    return lines


def analysis_table(report):
    fam = report["family"]
    lines = [f"family: n={fam['n']} in H({fam['ambient_dim']}), dims={fam['dims']}"]
    for kind in ("independence", "totalness"):
        lv = report[kind]
        lines.append(f"{kind}: pairwise={lv['pairwise']} full={lv['full']} weak={lv['weak']}")
    lines.append(f"informationally independent: {report['informationally_independent']}")
    prof = report["profile"]
    lines.append("  i        R  R_tilde    R_hat")
    for i, (r, rt, rh) in enumerate(zip(prof["R"], prof["R_tilde"], prof["R_hat"])):
        lines.append(f"{i:3d} {_fmt(r):>8} {_fmt(rt):>8} {_fmt(rh):>8}")
    lines.append(f"eta = {_fmt(report['eta'])}")
    lines.append(f"epsilon = {_fmt(report['epsilon'])}")
    lines += _matrix_table("A", report["A"])
    lines += _matrix_table("T", report["T"])
    return "\n".join(lines) + "\n"


def pentagram_table(report):
    lines = ["  i      p_i"]
    for i, p in enumerate(report["probabilities"]):
        lines.append(f"{i:3d} {_fmt(p):>8}")
    lines.append(f"sum = {_fmt(report['sum'])}  (eta = sum/5 = {_fmt(report['eta'])})")
    lines.append(
        f"classical bound 2 (2/5 normalized): "
        f"{'satisfied' if report['classical_bound_satisfied'] else 'VIOLATED'}"
    )
    lines.append(
        f"quantum bound 2.5: {'satisfied' if report['quantum_bound_satisfied'] else 'VIOLATED'}"
    )
    lines.append("eigenvalues of A: " + ", ".join(_fmt(x) for x in report["eigenvalues"]))
    lines += _matrix_table("A", report["A"])
    return "\n".join(lines) + "\n"


def cmd_analyze(args, tol):
    family = _load_family(args.family, tol)
    rho = _load_state(args.rho, tol) if args.rho else None
    if rho is not None and rho.dim != family.ambient_dim:
        raise DimensionMismatch(
            f"rho is {rho.dim}x{rho.dim} but the family lives in H({family.ambient_dim})"
        )
    return analyze(family, rho, tol), analysis_table


def cmd_example(args, tol):
    family_file, rho_file = EXAMPLES[args.name]
    if args.d is not None or args.fiducial_seed is not None:
        if args.name not in SYSTEM_KINDS:
            raise ValidationError(f"example {args.name!r} has a fixed dimension; --d does not apply")
        args.d = 3 if args.d is None else args.d
        family = build_family(args.name, args, tol)
        return analyze(family, None, tol), analysis_table
    family = _load_family(fixture_path(family_file), tol)
    rho = _load_state(fixture_path(rho_file), tol) if rho_file else None
    return analyze(family, rho, tol), analysis_table


def cmd_system(args, tol):
    family = build_family(args.kind, args, tol)
    if args.save_family:
        with open(args.save_family, "w", encoding="utf-8") as fh:
            fh.write(io.dumps(io.family_to_doc(family)))
    rho = _load_state(args.rho, tol) if args.rho else None
    report = analyze(family, rho, tol)
    if args.kind == "coherent":
        system = _system(args, tol)
        report["system"] = {"d": system.d, "fiducial": system.fiducial}
    return report, analysis_table


def cmd_pentagram(args, tol):
    rho = _load_state(args.rho, tol) if args.rho else None
    report = pentagram_analysis(rho, tol=tol).to_dict()
    report["A"] = _clean(report["A"])
    return report, pentagram_table


def _common(p):
    p.add_argument("--rank-rtol", type=float, default=None)
    p.add_argument("--eq-atol", type=float, default=None)
    p.add_argument("--psd-atol", type=float, default=None)
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "table"), default="json")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qlattice",
        description="Independence and totalness of subspace families in H(d).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a family (and optional state) from JSON files")
    p.add_argument("--family", required=True)
    p.add_argument("--rho", default=None, help="density matrix JSON (default: maximally mixed)")
    _common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("example", help="run one of the built-in worked examples")
    p.add_argument("name", choices=sorted(EXAMPLES))
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--fiducial-seed", type=int, default=None)
    _common(p)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("system", help="build and classify a finite-system family")
    p.add_argument("kind", choices=SYSTEM_KINDS)
    p.add_argument("--d", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--fiducial-seed", type=int, default=None)
    g.add_argument("--fiducial-file", default=None)
    p.add_argument("--rho", default=None)
    p.add_argument("--save-family", default=None, help="also write the family as JSON")
    _common(p)
    p.set_defaults(func=cmd_system)

    p = sub.add_parser("pentagram", help="pentagram contextuality analysis in H(3)")
    p.add_argument("--rho", default=None, help="density matrix JSON (default: maximal violation)")
    _common(p)
    p.set_defaults(func=cmd_pentagram)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = _tolerance(args)
        report, table = args.func(args, tol)
        text = table(report) if args.format == "table" else io.dumps(report)
    except io.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidStateError as exc:
        print(f"error: invalid density matrix: {exc}", file=sys.stderr)
        return EXIT_STATE
    except (DimensionMismatch, ValidationError, QLatticeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
