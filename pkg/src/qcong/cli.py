"""Command-line front end.

Subcommands:

  cyclotomic N              print the N-th cyclotomic polynomial
  qbinom ALPHA K [--base D] print a Gaussian binomial (any integer top)
  qpoch R D K               print the finite product prod_j (1 - q^(R + j*D))
  transform                 apply a triangular transform to a family prefix
  congruent                 decide a congruence between two expression files
  verify THEOREM            run one check and print PASS/FAIL
  sweep                     run a config-driven grid and emit records

Expression files for ``congruent`` hold one polynomial per line in the
canonical text form ("3/2*q^0 + 1*q^3"); a second line, when present, is a
denominator.  Exit codes: 0 success/holds, 1 check failed, 2 bad usage or
an ill-posed input (for instance a denominator sharing a factor with the
modulus).
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from .bivariate import RatExpr
from .congruence import NoncoprimeDenominatorError, congruent, residual
from .cyclotomic import cyclotomic
from .families import FamilySpec, generate, random_int_sequence
from .laurent import LaurentPoly
from .qcalc import qbinom_base, qpoch
from .sweep import (
    build_config,
    format_summary,
    parse_config_text,
    run_sweep,
    split_atoms,
)
from .theorems import (
    AlphaParams,
    SymParams,
    check_classical_sun,
    check_even_sign_fact,
    check_guo_zeng,
    check_lemma_sn_binom,
    check_lemma_sn_minus1,
    check_s0_identity,
    check_sun_p_analogue,
    check_thm_1_1,
    check_thm_1_2,
    check_thm_2_1,
)
from .transforms import hat, tilde

VERIFY_CHOICES = (
    "thm1.1", "thm1.2", "thm2.1", "s0", "guo_zeng", "sun_p",
    "lemma-sn", "lemma-sn-minus1", "even-sign", "classical",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcong",
        description="q-congruence checks for symmetric sum transforms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cyclotomic", help="print the n-th cyclotomic polynomial")
    p.add_argument("n", type=int)

    p = sub.add_parser("qbinom", help="print a Gaussian binomial coefficient")
    p.add_argument("alpha", type=int, help="top index, any integer")
    p.add_argument("k", type=int)
    p.add_argument("--base", type=int, default=1, metavar="D",
                   help="evaluate at q^D (default 1)")

    p = sub.add_parser("qpoch", help="print prod_{j<k} (1 - q^(r + j*d))")
    p.add_argument("r", type=int)
    p.add_argument("d", type=int)
    p.add_argument("k", type=int)

    p = sub.add_parser("transform", help="apply hat or tilde to a family prefix")
    p.add_argument("--kind", required=True, choices=("hat", "tilde"))
    p.add_argument("--family", required=True, metavar="NAME",
                   help="family label, e.g. ones, delta:1, random_poly:7:3")
    p.add_argument("--length", required=True, type=int, metavar="L")

    p = sub.add_parser("congruent", help="decide lhs = rhs mod Phi_n(q)^m")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--lhs", required=True, metavar="FILE")
    p.add_argument("--rhs", required=True, metavar="FILE")

    p = sub.add_parser("verify", help="run a single check")
    p.add_argument("theorem", choices=VERIFY_CHOICES)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--family", default="ones")
    p.add_argument("--p", type=int, help="odd prime (classical check)")
    p.add_argument("--alpha", help="rational alpha (classical check)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=9)

    p = sub.add_parser("sweep", help="run a parameter grid from a config file")
    p.add_argument("--config", metavar="FILE")
    for flag, key in _SWEEP_FLAGS:
        p.add_argument(flag, dest=f"ov_{key}", metavar="V[,V...]")
    return parser


_SWEEP_FLAGS = (
    ("--theorems", "theorems"),
    ("--n", "n"),
    ("--d", "d"),
    ("--r", "r"),
    ("--s", "s"),
    ("--a", "a"),
    ("--families", "families"),
    ("--alphas", "alphas"),
    ("--classical-seeds", "classical_seeds"),
    ("--classical-bound", "classical_bound"),
    ("--workers", "workers"),
    ("--output", "output"),
    ("--format", "format"),
)


def _read_expr(path: str) -> RatExpr:
    lines = []
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if line and not line.startswith("#"):
                lines.append(line)
    if len(lines) == 1:
        return RatExpr(LaurentPoly.parse(lines[0]))
    if len(lines) == 2:
        return RatExpr(LaurentPoly.parse(lines[0]), LaurentPoly.parse(lines[1]))
    raise ValueError(f"{path}: expected one polynomial line or numerator/denominator pair")


def _require(parser: argparse.ArgumentParser, args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join(f"--{n}" for n in missing)
        parser.error(f"verify {args.theorem} needs {flags}")


def _print_report(rep) -> int:
    status = "PASS" if rep.holds else "FAIL"
    parts = [f"{key}={value}" for key, value in rep.params.items()]
    if rep.branch is not None:
        parts.append(f"branch={rep.branch}")
    if rep.a is not None and "a" not in rep.params:
        parts.append(f"a={rep.a}")
    if rep.exponent is not None:
        parts.append(f"exponent={rep.exponent}")
    if rep.sign is not None:
        parts.append(f"sign={'+1' if rep.sign > 0 else '-1'}")
    print(f"{status} {rep.check} " + " ".join(parts) + f" [{rep.wall_time * 1000:.1f} ms]")
    if rep.residual is not None:
        print(f"residual: {rep.residual}")
    return 0 if rep.holds else 1


def _print_flat(check: str, holds: bool, started: float, **params) -> int:
    status = "PASS" if holds else "FAIL"
    parts = " ".join(f"{key}={value}" for key, value in params.items())
    print(f"{status} {check} {parts} [{(time.perf_counter() - started) * 1000:.1f} ms]")
    return 0 if holds else 1


def _cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    thm = args.theorem
    started = time.perf_counter()
    if thm in ("thm1.1", "thm1.2"):
        _require(parser, args, "n", "d", "r")
        params = SymParams.create(args.n, args.d, args.r)
        check = check_thm_1_1 if thm == "thm1.1" else check_thm_1_2
        return _print_report(check(params, args.family))
    if thm == "thm2.1":
        _require(parser, args, "n", "a", "s")
        return _print_report(check_thm_2_1(AlphaParams.create(args.n, args.a, args.s), args.family))
    if thm == "s0":
        _require(parser, args, "n", "a")
        holds = check_s0_identity(args.n, args.a, args.family)
        return _print_flat("s0", holds, started, n=args.n, a=args.a, family=args.family)
    if thm == "guo_zeng":
        _require(parser, args, "n", "d", "r")
        return _print_report(check_guo_zeng(SymParams.create(args.n, args.d, args.r)))
    if thm == "sun_p":
        _require(parser, args, "n", "d", "r")
        return _print_report(check_sun_p_analogue(SymParams.create(args.n, args.d, args.r)))
    if thm == "lemma-sn":
        _require(parser, args, "n", "s", "j")
        holds = check_lemma_sn_binom(args.n, args.s, args.j)
        return _print_flat("lemma-sn", holds, started, n=args.n, s=args.s, j=args.j)
    if thm == "lemma-sn-minus1":
        _require(parser, args, "n", "s", "j")
        holds = check_lemma_sn_minus1(args.n, args.s, args.j)
        return _print_flat("lemma-sn-minus1", holds, started, n=args.n, s=args.s, j=args.j)
    if thm == "even-sign":
        _require(parser, args, "n")
        holds = check_even_sign_fact(args.n)
        return _print_flat("even-sign", holds, started, n=args.n)
    if thm == "classical":
        _require(parser, args, "p", "alpha")
        alpha = Fraction(args.alpha)
        fs = random_int_sequence(args.seed, args.p, args.bound)
        holds = check_classical_sun(args.p, alpha, fs)
        return _print_flat("classical", holds, started,
                           p=args.p, alpha=alpha, seed=args.seed)
    raise AssertionError(thm)


def _cmd_sweep(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    raw: dict[str, list[str]] = {}
    if args.config:
        raw = parse_config_text(open(args.config).read())
    for _, key in _SWEEP_FLAGS:
        value = getattr(args, f"ov_{key}")
        if value is not None:
            raw[key] = split_atoms(value)
    if not raw:
        parser.error("sweep needs --config or at least --theorems/--n flags")
    cfg = build_config(raw)
    summary = run_sweep(cfg)
    print(format_summary(summary), file=sys.stderr)
    return 0 if summary.failed == 0 else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "cyclotomic":
            print(cyclotomic(args.n))
            return 0
        if args.command == "qbinom":
            print(qbinom_base(args.alpha, args.k, args.base))
            return 0
        if args.command == "qpoch":
            print(qpoch(args.r, args.d, args.k))
            return 0
        if args.command == "transform":
            fam = FamilySpec.parse(args.family)
            if args.length < 2:
                parser.error("--length must be at least 2")
            fs = generate(fam, args.length)
            out = hat(fs) if args.kind == "hat" else tilde(fs)
            for k, entry in enumerate(out):
                print(f"{k}: {entry}")
            return 0
        if args.command == "congruent":
            lhs = _read_expr(args.lhs)
            rhs = _read_expr(args.rhs)
            if congruent(lhs, rhs, args.n, args.m):
                print("CONGRUENT")
                return 0
            print("NOT CONGRUENT")
            print(f"residual: {residual(lhs, rhs, args.n, args.m)}")
            return 1
        if args.command == "verify":
            return _cmd_verify(parser, args)
        if args.command == "sweep":
            return _cmd_sweep(parser, args)
    except NoncoprimeDenominatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
