"""Command-line front end.

Subcommands:

    verify        run the exact identity suites (exit 0 iff all pass)
    dims          table of invariant-subspace dimensions
    derive-dwh    derive the covariant Hamiltonian field equations
    bracket       evaluate the bracket of two expressions
    oracle-check  check the algebra product against the Fock representation

Reports are deterministic for a fixed seed and flag set; --format json
emits a stable sorted-key document.  Exit codes: 0 pass, 1 check failure,
2 usage error.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import algebra as al
from . import fock
from .dkp import FrameMap
from .fields import RankError, bracket, bracket_closed_form, dwh_derive
from .parser import ParseError, parse_expr
from .subspaces import dim_zp
from .suites import SUITE_NAMES, rand_element, run_suites


class UsageError(ValueError):
    pass


def _parse_matrix(text, n):
    if text == "identity":
        from ._linalg import identity

        return identity(n)
    rows = []
    for chunk in text.split(";"):
        try:
            rows.append([Fraction(x.strip()) for x in chunk.split(",")])
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad matrix entry in {chunk!r}: {exc}") from exc
    if len(rows) != n or any(len(r) != n for r in rows):
        raise UsageError(f"matrix must be {n}x{n}")
    return rows


def _metric(args):
    try:
        return al.Metric(_parse_matrix(args.metric, args.n))
    except (al.SingularMatrixError, ValueError) as exc:
        raise UsageError(f"invalid metric: {exc}") from exc


def _frame(args):
    try:
        return FrameMap(_parse_matrix(args.lam, args.n))
    except (al.SingularMatrixError, ValueError) as exc:
        raise UsageError(f"invalid frame map: {exc}") from exc


def _report(command, params, results, checks_run, checks_failed):
    return {
        "command": command,
        "params": params,
        "results": results,
        "checks_run": checks_run,
        "checks_failed": checks_failed,
        "pass": checks_failed == 0,
    }


def _emit(report, fmt, out):
    if fmt == "json":
        out.write(json.dumps(report, indent=2, sort_keys=True))
        out.write("\n")
        return
    out.write(f"command: {report['command']}\n")
    params = " ".join(f"{k}={v}" for k, v in sorted(report["params"].items()))
    out.write(f"params: {params}\n")
    for res in report["results"]:
        out.write(f"{res['status']:4s} {res['name']} ({res['detail']})\n")
    out.write(f"checks: {report['checks_run']} run, {report['checks_failed']} failed\n")
    out.write(f"RESULT: {'PASS' if report['pass'] else 'FAIL'}\n")


def _cmd_verify(args, out):
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    metric = _metric(args) if args.metric != "identity" else None
    lam = _frame(args) if args.lam != "identity" else None
    checks = run_suites(names, args.n, args.seed, metric=metric, lam=lam)
    results = [
        {"name": c.name, "status": "PASS" if c.passed else "FAIL", "detail": c.detail}
        for c in checks
    ]
    report = _report(
        "verify",
        {"n": args.n, "p": args.p, "seed": args.seed, "suite": args.suite,
         "metric": args.metric, "lambda": args.lam},
        results,
        sum(c.run for c in checks),
        sum(c.failed for c in checks),
    )
    _emit(report, args.format, out)
    return 0 if report["pass"] else 1


def _cmd_dims(args, out):
    results = []
    for p in range(args.n + 1):
        results.append(
            {"name": f"dim Z_({p})", "status": "PASS",
             "detail": str(dim_zp(args.n, p))}
        )
    report = _report("dims", {"n": args.n}, results, args.n + 1, 0)
    _emit(report, args.format, out)
    return 0


def _cmd_derive_dwh(args, out):
    if args.H is None:
        raise UsageError("derive-dwh requires --H")
    lam = _frame(args)
    try:
        h = parse_expr(args.H, args.n, args.p)
        eqs = dwh_derive(h, args.p, lam, args.n)
    except (ParseError, RankError) as exc:
        raise UsageError(str(exc)) from exc
    results = [
        {"name": label, "status": "PASS", "detail": f"{lhs} = {rhs}"}
        for label, lhs, rhs in eqs.equations()
    ]
    report = _report(
        "derive-dwh",
        {"n": args.n, "p": args.p, "H": args.H, "lambda": args.lam},
        results,
        len(results),
        0,
    )
    _emit(report, args.format, out)
    return 0


def _cmd_bracket(args, out):
    if args.G is None or args.F is None:
        raise UsageError("bracket requires --G and --F")
    lam = _frame(args)
    try:
        g = parse_expr(args.G, args.n, args.p)
        f = parse_expr(args.F, args.n, args.p)
        value = bracket(g, f, args.mu, args.p, lam, args.n)
        closed = bracket_closed_form(g, f, args.mu, args.p, args.n)
    except (ParseError, RankError) as exc:
        raise UsageError(str(exc)) from exc
    agree = value == closed
    results = [
        {"name": "bracket", "status": "PASS", "detail": str(value)},
        {"name": "closed form agreement", "status": "PASS" if agree else "FAIL",
         "detail": str(closed)},
    ]
    report = _report(
        "bracket",
        {"n": args.n, "p": args.p, "mu": args.mu, "G": args.G, "F": args.F,
         "lambda": args.lam},
        results,
        2,
        0 if agree else 1,
    )
    _emit(report, args.format, out)
    return 0 if agree else 1


def _cmd_oracle_check(args, out):
    if args.n > 3:
        raise UsageError("oracle-check runs the full basis sweep for n <= 3 only")
    rng = random.Random(args.seed)
    n = args.n
    bes = al.basis_elements(n)
    singles = {be: al.single(n, be.upper, be.lower) for be in bes}
    reps = {be: fock.represent(singles[be]) for be in bes}
    failed = 0
    run = 0
    for b1 in bes:
        for b2 in bes:
            run += 1
            if fock.represent(singles[b1] * singles[b2]) != reps[b1] @ reps[b2]:
                failed += 1
    results = [
        {"name": "product homomorphism on basis pairs",
         "status": "PASS" if failed == 0 else "FAIL", "detail": f"{run} pairs"}
    ]
    rfail = 0
    for _ in range(args.pairs):
        x, y = rand_element(n, rng), rand_element(n, rng)
        if fock.represent(x * y) != fock.represent(x) @ fock.represent(y):
            rfail += 1
    results.append(
        {"name": "product homomorphism on random pairs",
         "status": "PASS" if rfail == 0 else "FAIL", "detail": f"{args.pairs} pairs"}
    )
    faithful = len(set(reps.values())) == len(bes)
    results.append(
        {"name": "faithful on basis", "status": "PASS" if faithful else "FAIL",
         "detail": f"{len(bes)} elements"}
    )
    total_failed = failed + rfail + (0 if faithful else 1)
    report = _report(
        "oracle-check",
        {"n": args.n, "seed": args.seed, "pairs": args.pairs},
        results,
        run + args.pairs + 1,
        total_failed,
    )
    _emit(report, args.format, out)
    return 0 if total_failed == 0 else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="dkpfields",
        description="Exact projector-basis Clifford/DKP algebra toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_p=True):
        p.add_argument("--n", type=int, required=True, help="dimension n >= 1")
        if with_p:
            p.add_argument("--p", type=int, default=0, help="antisymmetric rank 0..n")
        p.add_argument("--format", choices=("text", "json"), default="text")

    pv = sub.add_parser("verify", help="run exact identity suites")
    common(pv)
    pv.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--metric", default="identity",
                    help="'identity' or row-major rationals 'a,b;c,d'")
    pv.add_argument("--lambda", dest="lam", default="identity",
                    help="'identity' or row-major rationals 'a,b;c,d'")

    pd = sub.add_parser("dims", help="invariant subspace dimension table")
    common(pd, with_p=False)

    pw = sub.add_parser("derive-dwh", help="derive the field equations for --H")
    common(pw)
    pw.add_argument("--H", help="Hamiltonian expression")
    pw.add_argument("--lambda", dest="lam", default="identity")

    pb = sub.add_parser("bracket", help="bracket of --G and --F")
    common(pb)
    pb.add_argument("--mu", type=int, default=1)
    pb.add_argument("--G")
    pb.add_argument("--F")
    pb.add_argument("--lambda", dest="lam", default="identity")

    po = sub.add_parser("oracle-check", help="representation oracle sweep")
    common(po, with_p=False)
    po.add_argument("--seed", type=int, default=0)
    po.add_argument("--pairs", type=int, default=200)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.n < 1:
        parser.exit(2, "error: --n must be >= 1\n")
    p_rank = getattr(args, "p", 0)
    if not 0 <= p_rank <= args.n:
        parser.exit(2, f"error: --p must be in 0..{args.n}\n")
    mu = getattr(args, "mu", 1)
    if not 1 <= mu <= args.n:
        parser.exit(2, f"error: --mu must be in 1..{args.n}\n")
    handlers = {
        "verify": _cmd_verify,
        "dims": _cmd_dims,
        "derive-dwh": _cmd_derive_dwh,
        "bracket": _cmd_bracket,
        "oracle-check": _cmd_oracle_check,
    }
    try:
        return handlers[args.command](args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
