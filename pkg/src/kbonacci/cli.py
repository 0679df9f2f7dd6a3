"""Command-line front end: ``gen``, ``matrix``, ``poly``, ``binet``, ``check``.

Exit codes: 0 success, 1 identity or tolerance failure, 2 usage error,
3 floating-point evaluation unavailable (repeated roots, range cap, ...).
Big integers are written as decimal strings in JSON and raw digits in CSV.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import backends, binet, identities, matrices, polynomials
from .errors import (DomainViolation, IllConditioned, KBonacciError, NoConvergence,
                     RangeExceeded, RepeatedRoots, UnknownIdentity)
from .sequences import Family, SequenceSpec, sequence_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
FLOAT_FMT = "%.12e"
NUMERIC_ERRORS = (RepeatedRoots, NoConvergence, IllConditioned, RangeExceeded)


class UsageError(Exception):
    pass


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _int_list(text: Optional[str]) -> Optional[tuple[int, ...]]:
    if text is None:
        return None
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _row_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"expected a range like -3..0, got {text!r}") from None


def _index_range(args) -> tuple[int, int]:
    if args.n is not None:
        if args.start is not None or args.stop is not None:
            raise UsageError("use either -n or --from/--to")
        return args.n, args.n
    if args.start is None or args.stop is None:
        raise UsageError("an index is required: -n N or --from A --to B")
    if args.start > args.stop:
        raise UsageError(f"empty range {args.start}..{args.stop}")
    return args.start, args.stop


# --- gen --------------------------------------------------------------------

def cmd_gen(args) -> tuple[int, str]:
    family = Family(args.family)
    coeffs = _int_list(args.c)
    if coeffs is not None and family is not Family.KSOKF:
        raise UsageError("--c applies to --family ksokf only")
    spec = SequenceSpec(family, args.k, args.i, coeffs or ())
    lo, hi = _index_range(args)
    if args.method == "recurrence":
        table = sequence_table(spec, lo, hi)
    else:
        table = [(n, backends.value(spec, n, args.method)) for n in range(lo, hi + 1)]
    rows = [(n, v, spec.is_extended(n)) for n, v in table]
    if args.format == "json":
        return EXIT_OK, _dump_json({
            "family": family.value, "k": spec.k,
            "i": spec.branch if family in (Family.KSOKF, Family.KSOKL) else None,
            "coefficients": list(spec.coefficients), "method": args.method,
            "rows": [{"n": n, "value": str(v), "extended": e} for n, v, e in rows]})
    if args.format == "csv":
        return EXIT_OK, _csv([("n", "value", "extended")]
                             + [(n, v, "yes" if e else "no") for n, v, e in rows])
    return EXIT_OK, "".join(f"{n}\t{v}{chr(9) + 'extended' if e else ''}\n" for n, v, e in rows)


# --- matrix -----------------------------------------------------------------

def _window_defaults(kind: str, k: int) -> tuple[int, int]:
    return (1 - k, 1) if kind == "a_window" else (1 - k, 0)


def cmd_matrix(args) -> tuple[int, str]:
    k = args.k
    coeffs = _int_list(args.t)
    row_labels: Optional[list[int]] = None
    meta: dict = {"kind": args.kind, "k": k}
    if args.kind in ("a_window", "d_window"):
        lo, hi = _row_range(args.rows) if args.rows else _window_defaults(args.kind, k)
        fn = matrices.a_infty_window if args.kind == "a_window" else matrices.d_infty_window
        window = fn(k, coeffs, lo, hi)
        m = window.as_matrix()
        row_labels = list(range(lo, hi + 1))
        meta.update(t=list(window.t), rows=[lo, hi])
    elif args.kind == "l0":
        m = matrices.l_tilde_0(k)
    else:
        if args.n is None:
            raise UsageError(f"{args.kind} needs -n")
        if args.kind == "f_tilde":
            m = matrices.f_tilde(k, coeffs, args.n)
        else:
            if coeffs is not None:
                raise UsageError("l_tilde is defined for all-ones coefficients only")
            m = matrices.l_tilde(k, args.n)
        meta["n"] = args.n
    if args.format == "json":
        meta["matrix"] = [[str(x) for x in row] for row in m.rows]
        return EXIT_OK, _dump_json(meta)
    if args.format == "csv":
        if row_labels is None:
            return EXIT_OK, _csv(m.rows)
        header = ["row"] + [f"c{j}" for j in range(1, k + 1)]
        return EXIT_OK, _csv([header] + [[r, *row] for r, row in zip(row_labels, m.rows)])
    width = max(len(str(x)) for row in m.rows for x in row)
    lines = []
    for idx, row in enumerate(m.rows):
        body = " ".join(str(x).rjust(width) for x in row)
        lines.append(f"{row_labels[idx]:>4}: {body}" if row_labels else body)
    return EXIT_OK, "\n".join(lines) + "\n"


# --- poly -------------------------------------------------------------------

def cmd_poly(args) -> tuple[int, str]:
    if args.method == "combinatorial":
        if args.kind != "fib" or args.k != 2:
            raise UsageError("--method combinatorial exists for 'fib -k 2' only")
        p = polynomials.fib2_combinatorial(args.n)
    elif args.kind == "fib":
        fn = polynomials.fib_poly if args.method == "recurrence" else polynomials.fib_poly_partition
        p = fn(args.k, args.n)
    else:
        fn = polynomials.lucas_poly if args.method == "recurrence" else polynomials.lucas_poly_partition
        p = fn(args.k, args.n)
    if args.format == "json":
        return EXIT_OK, _dump_json(p.to_json_obj())
    if args.format == "csv":
        header = [f"a{j}" for j in range(1, p.k + 1)] + ["coef"]
        return EXIT_OK, _csv([header] + [[*e, c] for e, c in p.sorted_terms()])
    return EXIT_OK, str(p) + "\n"


# --- binet ------------------------------------------------------------------

def cmd_binet(args) -> tuple[int, str]:
    lo, hi = _index_range(args)
    k, i = args.k, args.i
    coeffs = _int_list(args.t)
    if args.family == "ksokl":
        if coeffs is not None:
            raise UsageError("--t applies to --family ksokf only")
        spec = SequenceSpec(Family.KSOKL, k, i)
        roots = binet.core_roots(k)
        approx = lambda n: (binet.binet_lucas(k, i, n, roots=roots),
                            binet.vandermonde_lucas(k, i, n, roots=roots))
    else:
        if i != k:
            raise UsageError("floating-point Fibonacci forms cover the last branch (-i k) only")
        spec = SequenceSpec(Family.KSOKF, k, i, coeffs or ())
        roots = binet.core_roots(k, spec.coefficients)
        approx = lambda n: (binet.binet_fib(k, n, roots=roots),
                            binet.vandermonde_fib(k, n, roots=roots))
    rows = []
    worst_ok = True
    for n, exact in sequence_table(spec, lo, hi):
        b, v = approx(n)
        rel = max(abs(b.value - exact), abs(v.value - exact)) / max(1, abs(exact))
        worst_ok &= rel <= args.tolerance
        rows.append((n, exact, b.value, v.value, rel))
    code = EXIT_OK if worst_ok else EXIT_FAIL
    if args.format == "json":
        return code, _dump_json({
            "family": args.family, "k": k, "i": i, "tolerance": FLOAT_FMT % args.tolerance,
            "pass": worst_ok,
            "rows": [{"n": n, "exact": str(e), "binet": FLOAT_FMT % b,
                      "vandermonde": FLOAT_FMT % v, "rel_error": FLOAT_FMT % r}
                     for n, e, b, v, r in rows]})
    table = [(n, e, FLOAT_FMT % b, FLOAT_FMT % v, FLOAT_FMT % r) for n, e, b, v, r in rows]
    if args.format == "csv":
        return code, _csv([("n", "exact", "binet", "vandermonde", "rel_error")] + table)
    return code, "".join("\t".join(str(x) for x in row) + "\n" for row in table)


# --- check ------------------------------------------------------------------

def cmd_check(args) -> tuple[int, str]:
    if args.all == (args.id is not None):
        raise UsageError("give exactly one of an identity id or --all")
    if args.all:
        reports = identities.sweep(k_max=args.k_max, n_max=args.n_max, k_only=args.k)
    else:
        desc = identities.get(args.id)
        grid = desc.default_grid.restrict(k_max=args.k_max, n_max=args.n_max)
        if args.k is not None:
            grid = identities.Grid((args.k, args.k), grid.n, grid.m)
        reports = [identities.check(args.id, grid)]
        if args.verbose and args.format == "plain":
            detail = "".join(
                f"{' '.join(f'{key}={val}' for key, val in p.items())}: "
                f"lhs={identities.render_value(lhs)} rhs={identities.render_value(rhs)}\n"
                for p, lhs, rhs in identities.evaluations(args.id, grid))
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    timing = not args.no_timing
    if args.format == "json":
        objs = [r.to_json_obj(timing) for r in reports]
        return code, _dump_json(objs if args.all else objs[0])
    if args.format == "csv":
        return code, _csv([("id", "pass", "points", "failures", "extension_used")] + [
            (r.id, "yes" if r.passed else "no", r.size, len(r.failures),
             "yes" if r.extension_used else "no") for r in reports])
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        ext = " extended" if r.extension_used else ""
        lines.append(f"{status} {r.id} points={r.size} failures={len(r.failures)}{ext}")
        for f in r.failures[:5]:
            lines.append(f"    {f.params}: lhs={identities.render_value(f.lhs)} rhs={identities.render_value(f.rhs)}")
    text = "\n".join(lines) + "\n"
    if not args.all and args.verbose:
        text = detail + text
    return code, text


# --- parser -----------------------------------------------------------------

def _add_format(p: argparse.ArgumentParser, default: str = "plain") -> None:
    p.add_argument("--format", choices=("csv", "json", "plain"), default=default)


def _add_index(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", type=int, help="single index")
    p.add_argument("--from", dest="start", type=int, help="first index")
    p.add_argument("--to", dest="stop", type=int, help="last index (inclusive)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kbonacci", description="Exact order-k Fibonacci and Lucas numbers and polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="sequence table")
    g.add_argument("--family", choices=[f.value for f in Family], required=True)
    g.add_argument("-k", type=int, required=True)
    g.add_argument("-i", type=int, default=1, help="branch (ksokf/ksokl)")
    g.add_argument("--c", help="comma-separated coefficients c1..ck (ksokf)")
    g.add_argument("--method", choices=backends.BACKENDS, default="recurrence")
    _add_index(g)
    _add_format(g)
    g.set_defaults(func=cmd_gen)

    m = sub.add_parser("matrix", help="companion-derived matrices and orbit windows")
    m.add_argument("kind", choices=("f_tilde", "l_tilde", "l0", "a_window", "d_window"))
    m.add_argument("-k", type=int, required=True)
    m.add_argument("-n", type=int)
    m.add_argument("--rows", help="row range lo..hi for windows")
    m.add_argument("--t", help="comma-separated coefficients t1..tk")
    _add_format(m)
    m.set_defaults(func=cmd_matrix)

    p = sub.add_parser("poly", help="Fibonacci/Lucas polynomial expansion")
    p.add_argument("kind", choices=("fib", "lucas"))
    p.add_argument("--method", choices=("recurrence", "partition", "combinatorial"),
                   default="recurrence")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_poly)

    b = sub.add_parser("binet", help="floating-point closed forms against exact values")
    b.add_argument("-k", type=int, required=True)
    b.add_argument("-i", type=int, required=True)
    b.add_argument("--family", choices=("ksokl", "ksokf"), default="ksokl")
    b.add_argument("--t", help="coefficients t1..tk (ksokf only)")
    b.add_argument("--tolerance", type=float, default=1e-9)
    _add_index(b)
    _add_format(b)
    b.set_defaults(func=cmd_binet)

    c = sub.add_parser("check", help="verify identities over parameter grids")
    c.add_argument("id", nargs="?")
    c.add_argument("--all", action="store_true")
    c.add_argument("-k", type=int, help="restrict to a single order k")
    c.add_argument("--k-max", type=int)
    c.add_argument("--n-max", type=int)
    c.add_argument("-v", "--verbose", action="store_true",
                   help="list both sides at every point (single id, plain format)")
    c.add_argument("--no-timing", action="store_true", help="report ms as 0 for reproducible output")
    _add_format(c)
    c.set_defaults(func=cmd_check)
    return parser


def _join_range_values(argv: list[str]) -> list[str]:
    # "--rows -3..0" would be read as an unknown flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--rows":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--rows={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = _join_range_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.func(args)
    except NUMERIC_ERRORS as exc:
        print(f"error: {exc}", file=err)
        return EXIT_NUMERIC
    except (UsageError, UnknownIdentity, DomainViolation, KBonacciError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    out.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
