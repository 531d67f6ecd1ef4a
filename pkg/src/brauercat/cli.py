"""Command line surface.

Subcommands wire the library end to end: enumeration, morphism expressions,
normal forms, idempotent and rank certificates, Frobenius characters, fake
degrees, and cyclic sieving verification.  Exit status 0 means success or
PASS, 1 a mathematical FAIL, 2 a usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import matchings as mt
from . import symfunc as sf
from . import tableaux as tb
from .category import Morphism, check_eq_ch, e_rec, e_sum
from .csp import CspInstance, verify_csp
from .expr import ExprError, evaluate, parse_expr, parse_morphism
from .matchings import Diagram, enumerate_matchings
from .partitions import parse_partition
from .pfaffian import normal_form
from .tensors import ev_diagram, rank_of_span


def _delta_from(args) -> Fraction | None:
    if getattr(args, "delta", None) is not None:
        return Fraction(args.delta)
    if getattr(args, "n", None) is not None:
        return Fraction(-2 * args.n)
    return None


def cmd_enumerate(args) -> int:
    what = args.what
    if what == "matchings":
        items = [str(m) for m in enumerate_matchings(2 * args.r)]
    elif what == "X":
        if args.k is not None:
            items = [str(b) for b in mt.enumerate_X_blocked(args.r, args.n, args.k)]
        else:
            items = [str(m) for m in mt.enumerate_X(args.r, args.n)]
    elif what == "oscillating":
        items = [str(t) for t in tb.enumerate_oscillating(2 * args.r, args.n)]
    elif what == "syt":
        if not args.shape:
            print("enumerate --what syt needs --shape", file=sys.stderr)
            return 2
        items = ["/".join(",".join(map(str, row)) for row in t)
                 for t in tb.enumerate_SYT(parse_partition(args.shape))]
    elif what == "set-partitions":
        items = ["|".join(",".join(map(str, b)) for b in p)
                 for p in mt.iter_set_partitions(args.r, args.n)]
    else:
        print(f"unknown enumeration {what!r}", file=sys.stderr)
        return 2
    if args.count:
        print(len(items))
    else:
        for line in items:
            print(line)
    return 0


def cmd_compose(args) -> int:
    delta = _delta_from(args)
    try:
        value = evaluate(parse_expr(args.expression), delta=delta,
                         strands=args.strands, n=args.n)
    except ExprError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    print(value)
    return 0


def cmd_normal_form(args) -> int:
    text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    delta = _delta_from(args)
    try:
        m = parse_morphism(text.strip(), delta=delta)
    except ExprError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    trace: list = []
    reduced = normal_form(m, args.n, trace)
    print(reduced)
    if args.trace:
        print(f"steps: {len(trace)}")
        for d in trace:
            print(f"  rewrote {d}")
    return 0


def cmd_idempotent_check(args) -> int:
    n = args.n
    delta = _delta_from(args)
    e = e_sum(n, delta)
    checks = {
        "idempotent": e * e == e,
        "central": check_eq_ch(e, n).passed,
        "trace-zero": e.trace() == 0,
        "recursive-equal": e_rec(n, delta) == e,
    }
    ok = all(checks.values())
    for name, passed in checks.items():
        print(f"{name}: {'PASS' if passed else 'FAIL'}")
    print(f"idempotent-check n={n} delta={delta}: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_ev_rank(args) -> int:
    diagrams = [Diagram(0, 2 * args.r, pm) for pm in enumerate_matchings(2 * args.r)]
    rank = rank_of_span([ev_diagram(d, args.n) for d in diagrams])
    noncrossing = len(mt.enumerate_X(args.r, args.n))
    match = rank == noncrossing
    print(f"rank={rank} noncrossing={noncrossing} {'MATCH' if match else 'MISMATCH'}")
    return 0 if match else 1


_KINDS = ("matchings", "sym-power", "fundamental", "regular-graph",
          "partition-plethysm", "partition-multiset", "adjoint")


def _character(args) -> sf.SymFuncP:
    kind = args.kind
    if kind == "matchings":
        return sf.invariant_character_matchings(args.r, args.n)
    if kind == "sym-power":
        return sf.invariant_character_sym_power(args.r, args.k, args.n)
    if kind == "fundamental":
        return sf.invariant_character_fundamental(args.r, args.k, args.n)
    if kind == "regular-graph":
        return sf.regular_graph_character(args.r, args.k)
    if kind == "partition-plethysm":
        return sf.partition_category_character(args.r, args.n)
    if kind == "partition-multiset":
        return sf.partition_category_character_multiset(args.r, args.n, args.k or 1)
    if kind == "adjoint":
        return sf.adjoint_invariant_character(args.r, args.n)
    raise ValueError(f"unknown kind {kind!r}")


def cmd_frobenius(args) -> int:
    print(_character(args))
    return 0


def cmd_fake_degree(args) -> int:
    if args.shape:
        print(tb.fake_degree_schur(parse_partition(args.shape)))
        return 0
    print(sf.fake_degree(_character(args)))
    return 0


def _csp_instance(r: int, n: int, k: int | None) -> CspInstance:
    if k is None or k == 1:
        elements = tuple(mt.enumerate_X(r, n))
        poly = sf.fake_degree(sf.invariant_character_matchings(r, n))
        return CspInstance(elements, 1, 2 * r, poly)
    elements = tuple(mt.enumerate_X_blocked(r, n, k))
    poly = sf.fake_degree(sf.invariant_character_sym_power(r, k, n))
    return CspInstance(elements, k, r, poly)


def _print_certificate(tag: str, cert, fmt: str):
    if fmt == "tsv":
        fields = [tag, "PASS" if cert.passed else "FAIL", str(cert.size),
                  str(cert.order), ",".join(map(str, cert.orbit_sizes)),
                  str(cert.poly_reduced),
                  "" if cert.failure_divisor is None else str(cert.failure_divisor)]
        print("\t".join(fields))
    else:
        print(f"instance: {tag}")
        for line in cert.lines():
            print(f"  {line}")


def _parse_grid(text: str) -> dict[str, int]:
    out = {}
    for part in text.split(","):
        m = re.fullmatch(r"\s*([rnk])\s*<=\s*(\d+)\s*", part)
        if m is None:
            raise ValueError(f"bad grid clause {part!r}")
        out[m.group(1)] = int(m.group(2))
    return out


def cmd_csp_verify(args) -> int:
    fmt = args.format
    jobs = []
    if args.grid:
        try:
            bounds = _parse_grid(args.grid)
        except ValueError as err:
            print(f"error: {err}", file=sys.stderr)
            return 2
        for r in range(1, bounds.get("r", args.r or 1) + 1):
            for n in range(1, bounds.get("n", args.n or 1) + 1):
                if "k" in bounds:
                    for k in range(1, bounds["k"] + 1):
                        jobs.append((r, n, k))
                else:
                    jobs.append((r, n, args.k))
    else:
        if args.r is None or args.n is None:
            print("csp-verify needs --r and --n (or --grid)", file=sys.stderr)
            return 2
        jobs.append((args.r, args.n, args.k))
    all_pass = True
    for r, n, k in jobs:
        cert = verify_csp(_csp_instance(r, n, k))
        tag = f"X({r},{n})" if k in (None, 1) else f"X({r},{n},{k})"
        _print_certificate(tag, cert, fmt)
        all_pass = all_pass and cert.passed
    return 0 if all_pass else 1


def cmd_littlewood_check(args) -> int:
    ok = True
    for r in range(1, args.r + 1):
        passed = sf.littlewood_check(r)
        print(f"littlewood r={r}: {'PASS' if passed else 'FAIL'}")
        ok = ok and passed
    return 0 if ok else 1


def cmd_kronecker_check(args) -> int:
    ok = True
    for r in range(1, args.r + 1):
        passed = sf.adjoint_character_full(r) == sf.adjoint_invariant_character(r, r)
        print(f"kronecker r={r}: {'PASS' if passed else 'FAIL'}")
        ok = ok and passed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauercat",
        description="Exact diagram algebra, symplectic tensor evaluation, "
                    "and cyclic sieving certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("enumerate", cmd_enumerate, help="list combinatorial sets")
    p.add_argument("--what", required=True,
                   choices=["matchings", "X", "oscillating", "syt", "set-partitions"])
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--k", type=int)
    p.add_argument("--shape")
    p.add_argument("--count", action="store_true", help="print only the count")

    p = add("compose", cmd_compose, help="evaluate a morphism expression")
    p.add_argument("expression")
    p.add_argument("--n", type=int, help="rank; sets delta = -2n")
    p.add_argument("--delta", help="explicit rational loop value, e.g. -3/2")
    p.add_argument("--strands", type=int, help="strand count for u_i/s_i/R_i")

    p = add("normal-form", cmd_normal_form, help="reduce to noncrossing support")
    p.add_argument("file", help="morphism file, or - for stdin")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta")
    p.add_argument("--trace", action="store_true")

    p = add("idempotent-check", cmd_idempotent_check,
            help="idempotent, centrality, trace and recursion certificates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta")

    p = add("ev-rank", cmd_ev_rank, help="tensor rank against noncrossing count")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    for name, fn in (("frobenius", cmd_frobenius), ("fake-degree", cmd_fake_degree)):
        p = add(name, fn, help=f"{name.replace('-', ' ')} of an invariant character")
        p.add_argument("--kind", choices=_KINDS, default="matchings")
        p.add_argument("--r", type=int, default=1)
        p.add_argument("--n", type=int, default=1)
        p.add_argument("--k", type=int)
        if name == "fake-degree":
            p.add_argument("--shape", help="partition like 2,2: fake degree of one Schur term")

    p = add("csp-verify", cmd_csp_verify, help="cyclic sieving certificate")
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=["text", "tsv"], default="text")
    p.add_argument("--grid", help="bounds like r<=5,n<=3")

    p = add("littlewood-check", cmd_littlewood_check,
            help="plethysm against the even-row Schur sum")
    p.add_argument("--r", type=int, default=5)

    p = add("kronecker-check", cmd_kronecker_check,
            help="power sums against Kronecker squares")
    p.add_argument("--r", type=int, default=6)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
