"""Command-line front end.

Exit codes: 0 success, 2 bad parameters, 3 budget exhausted, 4 golden mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import codes, reproduce
from .gf import KPoly, field_create, least_irreducible_kpoly, parse_coeffs
from .quotient import QuotientRing
from .semifield import CodeSemifield
from .skewpoly import (
    BudgetExceeded,
    SkewPoly,
    SkewRing,
    extended_gcrd,
    find_irreducible_divisor,
    is_irreducible_skew,
    mclm,
)

EXIT_OK, EXIT_PARAMS, EXIT_BUDGET, EXIT_GOLDEN = 0, 2, 3, 4


class ParamError(ValueError):
    pass


def kpoly_text(F: KPoly) -> str:
    """Human form with encoded coefficients, highest degree first."""
    terms = []
    for i in range(F.degree, -1, -1):
        c = F.coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms) or "0"


def _add_field_args(p, need_n=True):
    p.add_argument("-p", type=int, required=True, help="characteristic")
    p.add_argument("-e", type=int, default=1, help="K = F_{p^e}")
    p.add_argument("-n", type=int, required=need_n, default=None, help="[L:K]")
    p.add_argument("--sigma-exp", type=int, default=None, help="sigma = Frob^j (default j = e)")


def _add_spec_args(p):
    _add_field_args(p)
    p.add_argument("-s", type=int, default=None, help="degree of F")
    p.add_argument("-k", type=int, default=1)
    p.add_argument("--F", dest="F", default=None, help="coefficients of F, low degree first")
    p.add_argument("--eta", type=int, default=0, help="eta as a field encoding")
    p.add_argument("--rho-exp", "--rho", dest="rho_exp", type=int, default=0)
    p.add_argument("--kprime", type=int, default=None, help="K' = F_{p^d}")


def _add_run_args(p, jobs=True):
    p.add_argument("--budget", type=int, default=codes.DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    if jobs:
        p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("-o", "--output", default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewmrd", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", help="build S_{n,s,k}(eta, rho, F) and verify MRD-ness")
    _add_spec_args(c)
    _add_run_args(c)
    c.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto")
    c.add_argument("--no-nuclei", action="store_true", help="skip idealiser computations")

    c = sub.add_parser("nuclei", help="computed and predicted nuclear parameters")
    _add_spec_args(c)
    _add_run_args(c, jobs=False)

    c = sub.add_parser("mclm", help="minimal central left multiple of f")
    _add_field_args(c)
    c.add_argument("--f", dest="f", required=True, help="coefficients of f, low degree first")
    _add_run_args(c, jobs=False)

    c = sub.add_parser("gcrd", help="extended right gcd of a and b")
    _add_field_args(c)
    c.add_argument("--a", required=True)
    c.add_argument("--b", required=True)
    _add_run_args(c, jobs=False)

    c = sub.add_parser("rank", help="rank of an element of R_F")
    _add_spec_args(c)
    c.add_argument("--a", required=True)
    _add_run_args(c, jobs=False)

    c = sub.add_parser("divisor-search", help="first irreducible right divisor of F(x^n)")
    _add_spec_args(c)
    _add_run_args(c, jobs=False)

    c = sub.add_parser("reproduce", help="regenerate worked examples and compare with goldens")
    c.add_argument("example", choices=reproduce.EXAMPLES)
    c.add_argument("-o", "--output", default=None)
    c.add_argument("--format", choices=("json",), default="json")
    return ap


# ----------------------------------------------------------------------
# context building


def _ring(args) -> SkewRing:
    if args.p is None or args.n is None:
        raise ParamError("-p and -n are required")
    if args.e < 1 or args.n < 1:
        raise ParamError("-e and -n must be positive")
    L = field_create(args.p, args.e * args.n)
    j = args.e if args.sigma_exp is None else args.sigma_exp
    return SkewRing(L, j, args.n)


def _F(args, ring) -> KPoly:
    L, e = ring.field, ring.e
    if args.F is not None:
        F = KPoly(L, parse_coeffs(args.F), e)
        if args.s is not None and args.s != F.degree:
            raise ParamError(f"-s {args.s} disagrees with deg F = {F.degree}")
        return F
    s = 1 if args.s is None else args.s
    if s < 1:
        raise ParamError("-s must be positive")
    if s == 1:
        return KPoly(L, [L.neg(1), 1], e)
    return least_irreducible_kpoly(L, e, s)


def _quotient(args) -> QuotientRing:
    ring = _ring(args)
    return QuotientRing(ring, _F(args, ring))


def _spec(args, Q=None) -> codes.CodeSpec:
    Q = Q or _quotient(args)
    return codes.CodeSpec(Q, args.k, args.eta, args.rho_exp, args.kprime)


def _skew(ring, text) -> SkewPoly:
    return SkewPoly.from_text(ring, text)


# ----------------------------------------------------------------------
# commands


def cmd_construct(args):
    spec = _spec(args)
    if args.format == "csv":
        if spec.k != 1:
            raise ParamError("multiplication tables exist only for k = 1")
        return CodeSemifield(spec).table_csv()
    report = codes.verify_mrd(spec, args.budget, args.seed, args.jobs, args.mode)
    if not args.no_nuclei:
        computed, predicted = codes.nuclear_parameters(spec)
        report.nuclear_computed = list(computed)
        report.nuclear_predicted = list(predicted) if predicted else None
    if args.format == "text":
        return (
            f"size {report.size}  min_rank {report.min_rank}  mrd {report.mrd}  "
            f"condition {report.condition_satisfied}  nuclear {report.nuclear_computed}\n"
        )
    return report.to_json(indent=1) + "\n"


def cmd_nuclei(args):
    spec = _spec(args)
    computed, predicted = codes.nuclear_parameters(spec)
    out = {
        "spec": spec.to_dict(),
        "computed": list(computed),
        "predicted": list(predicted) if predicted else None,
        "known_families": codes.compare_known_families(computed, spec.field.p),
    }
    return json.dumps(out, sort_keys=True, indent=1) + "\n"


def cmd_mclm(args):
    ring = _ring(args)
    f = _skew(ring, args.f)
    if not f.is_monic():
        raise ParamError("f must be monic")
    F = mclm(f)
    out = {
        "ring": ring.header(),
        "f": list(f.coeffs),
        "mclm": list(F.coeffs),
        "mclm_text": kpoly_text(F),
        "irreducible": bool(f.degree >= 1 and is_irreducible_skew(f)),
    }
    if args.format == "text":
        return f"{kpoly_text(F)}\nirreducible: {out['irreducible']}\n"
    return json.dumps(out, sort_keys=True) + "\n"


def cmd_gcrd(args):
    ring = _ring(args)
    a, b = _skew(ring, args.a), _skew(ring, args.b)
    g, u, v = extended_gcrd(a, b)
    out = {"g": list(g.coeffs), "u": list(u.coeffs), "v": list(v.coeffs)}
    return json.dumps(out, sort_keys=True) + "\n"


def cmd_rank(args):
    Q = _quotient(args)
    a = Q.reduce(_skew(Q.ring, args.a))
    out = {"a": list(a.poly.coeffs), "rank": Q.rank(a), "n": Q.n, "F": list(Q.F.coeffs)}
    return json.dumps(out, sort_keys=True) + "\n"


def cmd_divisor_search(args):
    ring = _ring(args)
    F = _F(args, ring)
    f = find_irreducible_divisor(ring, F, args.budget)
    out = {"F": list(F.coeffs), "f": list(f.coeffs), "ring": ring.header()}
    return json.dumps(out, sort_keys=True) + "\n"


COMMANDS = {
    "construct": cmd_construct,
    "nuclei": cmd_nuclei,
    "mclm": cmd_mclm,
    "gcrd": cmd_gcrd,
    "rank": cmd_rank,
    "divisor-search": cmd_divisor_search,
}


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cmd == "reproduce":
        ok, got, diff = reproduce.reproduce(args.example)
        _emit(got, args.output)
        if not ok:
            sys.stderr.write(diff)
            return EXIT_GOLDEN
        return EXIT_OK
    try:
        text = COMMANDS[args.cmd](args)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, ArithmeticError) as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    _emit(text, args.output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
