"""Command line front end: ``specball spec|member|apply|fiber|verify``.

Exit codes: 0 everything passed, 1 a verification suite failed, 2 bad input
or configuration, 3 a numerical routine could not reach its accuracy.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import codec
from .calculus import apply, equivariance_residual
from .fibers import (
    eigen_structure,
    fiber_tangent_dim,
    group_equal_roots,
    nonderogatory_member,
    random_basis,
)
from .geometry import (
    REPEAT_TOL,
    discriminant,
    in_gn,
    in_jn,
    jacobian_rank,
    pi_n,
    point_roots,
    sigma,
    spectral_radius,
)
from .matrix import RANK_TOL, ROOT_TOL, InputError, NumericalError, eigenvalues
from .suites import SUITES, SuiteConfig, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3

SEED_ENV = "SBL_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _n_range(text):
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or a single integer, got {text!r}")
    if not 2 <= lo <= hi:
        raise argparse.ArgumentTypeError(f"need 2 <= A <= B, got {text!r}")
    return lo, hi


def _positive(text):
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not (np.isfinite(x) and x > 0):
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return x


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="specball", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--tol-eig", type=_positive, default=ROOT_TOL,
                        help="root-finder residual tolerance")
        sp.add_argument("--tol-rank", type=_positive, default=RANK_TOL,
                        help="relative pivot tolerance for numerical rank")
        sp.add_argument("--margin", type=float, default=0.0,
                        help="require spectral radius < 1 - margin")

    sp = sub.add_parser("spec", help="symmetrization, spectral radius and Jordan structure")
    sp.add_argument("--input", required=True, help="matrix JSON file")
    common(sp)

    sp = sub.add_parser("member", help="membership of a matrix or a point")
    sp.add_argument("--input", required=True, help="matrix JSON or point JSON file")
    common(sp)

    sp = sub.add_parser("apply", help="apply a disc map to a matrix")
    sp.add_argument("--input", required=True, help="matrix JSON file")
    sp.add_argument("--map", required=True, help="disc map JSON file")
    sp.add_argument("--method", choices=("exact", "series"), default="exact")
    common(sp)

    sp = sub.add_parser("fiber", help="a non-derogatory matrix with prescribed eigenvalues")
    sp.add_argument("--input", required=True, help='point JSON file, {"z": ...} or {"zetas": ...}')
    sp.add_argument("--seed", type=int, default=1)
    common(sp)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("suite", nargs="?", default="all", choices=["all", *SUITES])
    sp.add_argument("--n", type=_n_range, default=(2, 5), help="dimension range A..B")
    sp.add_argument("--cases", type=int, default=200, help="cases per dimension")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--radius", type=float, default=0.9)
    sp.add_argument("--output", help="also write the JSON report to this file")
    common(sp)
    return p


def _seed(args) -> int:
    env = os.environ.get(SEED_ENV)
    if env is None or env == "":
        return args.seed
    try:
        return int(env)
    except ValueError:
        raise InputError(f"{SEED_ENV} must be an integer, got {env!r}") from None


def _cvec(v):
    return codec.encode_vector(v)


def _fmt(z) -> str:
    z = complex(z)
    return f"{z.real + 0.0:+.10g}{z.imag + 0.0:+.10g}j"


def _emit(args, payload: dict, lines: list, out):
    if args.format == "json":
        print(codec.dumps(payload, pretty=True), file=out)
    else:
        for line in lines:
            print(line, file=out)


def cmd_spec(args, out):
    A = codec.decode_matrix(codec.load_file(args.input))
    s = sigma(A)
    lam = eigenvalues(A, args.tol_eig)
    rho = float(np.max(np.abs(lam)))
    es = eigen_structure(A, rank_tol=args.tol_rank)
    spec = es.to_spec()
    jr = jacobian_rank(A, args.tol_rank)
    payload = {
        "n": A.shape[0],
        "sigma": _cvec(s),
        "eigenvalues": _cvec(lam),
        "spectral_radius": rho,
        "in_omega": bool(rho < 1 - args.margin),
        "jordan": codec.encode_spec(spec),
        "nonderogatory": es.is_nonderogatory(),
        "jacobian_rank": jr,
        "tangent_dim": A.shape[0] ** 2 - jr,
    }
    lines = [
        f"n = {A.shape[0]}",
        "sigma = (" + ", ".join(_fmt(x) for x in s) + ")",
        f"spectral radius = {rho:.10g}",
        f"in the spectral unit ball (margin {args.margin:g}): {payload['in_omega']}",
        "Jordan structure: "
        + "; ".join(f"{_fmt(lam)} blocks {list(sz)}" for lam, sz in spec.blocks),
        f"non-derogatory: {payload['nonderogatory']} (rank of sigma' = {jr})",
    ]
    _emit(args, payload, lines, out)
    return EXIT_OK


def cmd_member(args, out):
    obj = codec.load_file(args.input)
    if isinstance(obj, dict) and "entries" in obj:
        A = codec.decode_matrix(obj)
        rho = spectral_radius(A, args.tol_eig)
        inside = bool(rho < 1 - args.margin)
        payload = {"kind": "matrix", "spectral_radius": rho, "in_omega": inside}
        lines = [f"spectral radius = {rho:.10g}",
                 f"in the spectral unit ball (margin {args.margin:g}): {inside}"]
    else:
        kind, v = codec.decode_point(obj)
        z = pi_n(v) if kind == "zetas" else v
        roots = v if kind == "zetas" else point_roots(z, args.tol_eig)
        inside = in_gn(z, args.margin, args.tol_eig)
        disc = discriminant(z)
        rep = bool(inside and in_jn(z, REPEAT_TOL, args.margin))
        payload = {
            "kind": "point",
            "z": _cvec(z),
            "roots": _cvec(roots),
            "in_gn": inside,
            "discriminant": codec.encode_complex(disc),
            "in_jn": rep,
        }
        lines = [
            "z = (" + ", ".join(_fmt(x) for x in z) + ")",
            "roots = (" + ", ".join(_fmt(x) for x in roots) + ")",
            f"in the symmetrized polydisc (margin {args.margin:g}): {inside}",
            f"discriminant = {_fmt(disc)}; repeated root: {rep}",
        ]
    _emit(args, payload, lines, out)
    return EXIT_OK


def cmd_apply(args, out):
    A = codec.decode_matrix(codec.load_file(args.input))
    f = codec.decode_map(codec.load_file(args.map))
    F = apply(f, A, args.method)
    res = equivariance_residual(f, A, args.method)
    payload = {
        "method": args.method,
        "result": codec.encode_matrix(F),
        "sigma": _cvec(sigma(F)),
        "equivariance_residual": res,
    }
    lines = [f"f(A) by the {args.method} calculus:"]
    lines += ["  [" + ", ".join(_fmt(x) for x in row) + "]" for row in F]
    lines += ["sigma(f(A)) = (" + ", ".join(_fmt(x) for x in sigma(F)) + ")",
              f"equivariance residual = {res:.3e}"]
    _emit(args, payload, lines, out)
    return EXIT_OK


def cmd_fiber(args, out):
    kind, v = codec.decode_point(codec.load_file(args.input))
    if kind == "zetas":
        zetas = v
    else:
        zetas = group_equal_roots(point_roots(v, args.tol_eig), REPEAT_TOL)
    if zetas.size < 2:
        raise InputError("a fiber point needs at least two coordinates")
    if np.any(np.abs(zetas) >= 1 - args.margin):
        raise InputError("the point does not lie in the symmetrized polydisc")
    rng = np.random.default_rng(_seed(args))
    A = nonderogatory_member(zetas, random_basis(rng, zetas.size, 10.0))
    target = pi_n(zetas) if kind == "zetas" else v
    res = float(np.max(np.abs(sigma(A) - target)))
    jr = jacobian_rank(A, args.tol_rank)
    td = fiber_tangent_dim(A, args.tol_rank)
    payload = {
        "zetas": _cvec(zetas),
        "matrix": codec.encode_matrix(A),
        "sigma_residual": res,
        "jacobian_rank": jr,
        "tangent_dim": td,
    }
    lines = ["non-derogatory fiber member:"]
    lines += ["  [" + ", ".join(_fmt(x) for x in row) + "]" for row in A]
    lines += [f"sigma residual = {res:.3e}",
              f"rank of sigma' = {jr}, fiber tangent dimension = {td}"]
    _emit(args, payload, lines, out)
    return EXIT_OK


def cmd_verify(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    tolerances = {"eig": args.tol_eig, "rank": args.tol_rank}
    configs = [
        SuiteConfig(
            suite=name,
            n_range=args.n,
            cases=args.cases,
            seed=_seed(args),
            radius=args.radius,
            tolerances=tolerances,
            margin=args.margin,
        )
        for name in names
    ]
    reports = []
    for cfg in configs:
        rep = run_suite(cfg)
        reports.append(rep)
        if args.format == "text":
            print(rep.summary(), file=out)
            for msg in rep.failures:
                print(f"    {msg}", file=out)
            out.flush()
    ok = all(r.passed for r in reports)
    doc = {"pass": ok, "reports": [r.to_dict() for r in reports]}
    if args.format == "json":
        print(codec.dumps(doc, pretty=True), file=out)
    else:
        print(f"{'ALL PASS' if ok else 'FAILED'}: {sum(r.passed for r in reports)}"
              f"/{len(reports)} suites", file=out)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(codec.dumps(doc, pretty=True) + "\n")
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc.strerror}") from None
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "spec": cmd_spec,
    "member": cmd_member,
    "apply": cmd_apply,
    "fiber": cmd_fiber,
    "verify": cmd_verify,
}


def run_cli(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_INPUT
    if not 0 <= args.margin < 1:
        print("specball: error: --margin must lie in [0, 1)", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args, out)
    except InputError as exc:
        print(f"specball: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NumericalError, ArithmeticError) as exc:
        print(f"specball: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def main():
    sys.exit(run_cli())
