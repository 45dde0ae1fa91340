"""Command line front end: ``ddyck <subcommand> [options]``.

Exit status is 0 on success, 1 on a domain error (bad path, bound
exceeded, disagreeing methods) and 2 on a usage error.  Output is
deterministic; ``--format json`` emits one JSON document per invocation.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from math import comb
from typing import Callable, Optional, TextIO

from . import asymptotics, bijection, enumeration, genfuncs, recurrences
from .enumeration import ExhaustiveBoundExceeded, PathFilter
from .paths import UNRESTRICTED, PathError, area, is_d_dyck, last_valley_level, parse_path, peaks, valley_vector

__all__ = ["run", "main", "build_parser"]


class DomainError(Exception):
    pass


def _d_value(text: str):
    if text.strip().lower() in ("-inf", "-infinity", "inf"):
        return UNRESTRICTED
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or '-inf', got {text!r}") from None


def _d_label(d) -> str:
    return "-inf" if d == UNRESTRICTED else str(d)


def _fmt_levels(levels) -> str:
    return "(" + ",".join(map(str, levels)) + ")"


class _Ctx:
    def __init__(self, args: argparse.Namespace, out: TextIO):
        self.args = args
        self.out = out
        self.json = args.format == "json"
        self.bound = args.max_exhaustive if args.max_exhaustive is not None else enumeration.max_exhaustive()

    def emit(self, text: str = "") -> None:
        print(text, file=self.out)

    def dump(self, obj) -> None:
        print(json.dumps(obj, sort_keys=True), file=self.out)

    def check_bound(self, n: int) -> None:
        if n > self.bound:
            raise ExhaustiveBoundExceeded(
                f"n={n} exceeds the exhaustive bound {self.bound}; raise it with --max-exhaustive"
            )


# count


def _count_methods(d, n: int, ctx: _Ctx) -> dict[str, Callable[[], int]]:
    m: dict[str, Callable[[], int]] = {
        "oracle": lambda: enumeration.count_filtered(n, PathFilter(d=d), bound=ctx.bound)
    }
    if d == UNRESTRICTED:
        m["catalan"] = lambda: recurrences.catalan(n)
        m["series"] = lambda: genfuncs.series_L_unrestricted(max(n, 1)).at_marker(1)[n]
    elif d >= 0:
        m["recursion"] = lambda: recurrences.r_nonneg(d, n)
        if d >= 1 and n >= 1:
            m["closed_sum"] = lambda: recurrences.r_nonneg_closed(d, n)
        m["series"] = lambda: genfuncs.series_L_nonneg(d, max(n, 1)).at_marker(1)[n]
    else:
        e = -d
        m["system"] = lambda: genfuncs.solve_Le_system(e, max(n, 1)).L.at_marker(1)[n]
        m["lagrange"] = lambda: genfuncs.lagrange_Le(e, max(n, 1))[n]
        if d == -1:
            m["closed"] = lambda: genfuncs.series_L_minus1_univariate(max(n, 1))[n]
            for name in recurrences.R_METHODS:
                m[name] = (lambda nm: lambda: recurrences.r_minus1(n, nm))(name)
    return m


def cmd_count(ctx: _Ctx) -> int:
    a = ctx.args
    d, n = a.d, a.n
    if n < 1:
        raise DomainError("--n must be >= 1")
    methods = _count_methods(d, n, ctx)
    if a.method == "all":
        chosen = list(methods)
    elif a.method is None:
        chosen = [next(m for m in methods if m != "oracle")]
    elif a.method in methods:
        chosen = [a.method]
    else:
        raise DomainError(f"method {a.method!r} not available for d={_d_label(d)}; choose from {', '.join(methods)}, all")
    results: dict[str, Optional[int]] = {}
    skipped: dict[str, str] = {}
    for name in chosen:
        if name == "oracle" and n > ctx.bound:
            if len(chosen) == 1:
                ctx.check_bound(n)
            skipped[name] = f"n > exhaustive bound {ctx.bound}"
            continue
        results[name] = int(methods[name]())
    values = set(results.values())
    agree = len(values) == 1
    value = next(iter(values)) if agree else None
    if ctx.json:
        ctx.dump({"d": _d_label(d), "n": n, "value": value, "methods": results, "skipped": skipped, "agree": agree})
    else:
        if len(chosen) == 1 and agree:
            ctx.emit(str(value))
        else:
            ctx.emit(f"r_{_d_label(d)}({n}) = {value if agree else 'DISAGREEMENT'}")
            width = max(map(len, chosen))
            for name in chosen:
                shown = results.get(name, f"skipped ({skipped.get(name)})")
                ctx.emit(f"  {name:<{width}}  {shown}")
            ctx.emit(f"all {len(results)} methods agree" if agree else "methods disagree")
    return 0 if agree else 1


# peaks


def _peaks_series(d, n: int) -> dict[int, int]:
    order = max(n, 1)
    if d == UNRESTRICTED:
        s = genfuncs.series_L_unrestricted(order)
    elif d >= 0:
        s = genfuncs.series_L_nonneg(d, order)
    else:
        s = genfuncs.solve_Le_system(-d, order).L
    return {k: int(c) for k, c in s.coefficient(n).as_dict().items()}


def cmd_peaks(ctx: _Ctx) -> int:
    a = ctx.args
    if a.n < 1:
        raise DomainError("--n must be >= 1")
    dists = {}
    if a.method in ("series", "all"):
        dists["series"] = _peaks_series(a.d, a.n)
    if a.method in ("oracle", "all"):
        ctx.check_bound(a.n)
        dists["oracle"] = enumeration.statistic_distribution(a.n, PathFilter(d=a.d), "peaks", bound=ctx.bound)
    agree = len({tuple(v.items()) for v in dists.values()}) == 1
    dist = next(iter(dists.values()))
    if ctx.json:
        ctx.dump({"d": _d_label(a.d), "n": a.n, "distribution": {str(k): v for k, v in dist.items()},
                  "methods": sorted(dists), "agree": agree})
    else:
        for k, v in dist.items():
            ctx.emit(f"{k}\t{v}")
        if len(dists) > 1:
            ctx.emit("series and oracle agree" if agree else "series and oracle DISAGREE")
    return 0 if agree else 1


# area


def cmd_area(ctx: _Ctx) -> int:
    a = ctx.args
    n, d = a.n, a.d
    if n < 1:
        raise DomainError("--n must be >= 1")
    if d not in (-1, UNRESTRICTED):
        raise DomainError("area statistics are available for d = -1 and d = -inf")
    results: dict[str, object] = {}
    if a.what == "histogram":
        if d == UNRESTRICTED:
            raise DomainError("the area histogram is computed for d = -1")
        A = genfuncs.solve_area_system(n).A
        results["series"] = {k: int(v) for k, v in A.coefficient(n).as_dict().items()}
        if a.check_oracle:
            ctx.check_bound(n)
            results["oracle"] = enumeration.statistic_distribution(n, PathFilter(d=-1), "area", bound=ctx.bound)
    elif d == UNRESTRICTED:
        results["formula"] = 4**n - comb(2 * n + 1, n)
        if a.check_oracle:
            results["oracle"] = enumeration.total_area(n, bound=ctx.bound)
    elif a.what == "total":
        results["series_V"] = genfuncs.series_V(n)[n]
        results["recursion"] = recurrences.a_seq(n)
        results["area_system"] = int(genfuncs.solve_area_system(n).A.marker_derivative_at(1)[n])
        if a.check_oracle:
            results["oracle"] = enumeration.total_area(n, PathFilter(d=-1), bound=ctx.bound)
    else:
        results["recursion"] = recurrences.A_seq(n)
        results["area_system"] = int(genfuncs.solve_area_system(n).B.marker_derivative_at(1)[n])
        if a.check_oracle:
            results["oracle"] = enumeration.total_area(n, PathFilter.q_paths(), bound=ctx.bound)
    canon = {json.dumps(v, sort_keys=True) for v in results.values()}
    agree = len(canon) == 1
    if ctx.json:
        payload = {k: ({str(i): c for i, c in v.items()} if isinstance(v, dict) else v) for k, v in results.items()}
        ctx.dump({"d": _d_label(d), "n": n, "what": a.what, "methods": payload, "agree": agree})
    else:
        if a.what == "histogram":
            for k, v in next(iter(results.values())).items():
                ctx.emit(f"{k}\t{v}")
        else:
            width = max(map(len, results))
            for k, v in results.items():
                ctx.emit(f"{k:<{width}}  {v}")
        if len(results) > 1:
            ctx.emit("all methods agree" if agree else "methods DISAGREE")
    return 0 if agree else 1


# series


_UNIVARIATE = {"r", "b", "V", "lagrange", "q"}


def cmd_series(ctx: _Ctx) -> int:
    a = ctx.args
    N, d, what = a.order, a.d, a.what
    if N < 1:
        raise DomainError("--order must be >= 1")
    marker = "y"
    if what == "r":
        if d == UNRESTRICTED:
            coeffs = genfuncs.series_L_unrestricted(N).at_marker(1)
        elif d >= 0:
            coeffs = genfuncs.series_L_nonneg(d, N).at_marker(1)
        else:
            coeffs = genfuncs.solve_Le_system(-d, N).L.at_marker(1)
        first, values = 1, coeffs[1:]
    elif what == "lagrange":
        if d == UNRESTRICTED or d >= 0:
            raise DomainError("the Lagrange expansion needs d < 0")
        first, values = 1, genfuncs.lagrange_Le(-d, N)[1:]
    elif what == "b":
        first, values = 0, genfuncs.series_b(N)
    elif what == "q":
        first, values = 1, genfuncs.series_Q_closed(N).at_marker(1)[1:]
    elif what == "V":
        first, values = 1, genfuncs.series_V(N)[1:]
    else:
        if what == "L":
            if d == UNRESTRICTED:
                s = genfuncs.series_L_unrestricted(N)
            elif d >= 0:
                s = genfuncs.series_L_nonneg(d, N)
            elif d == -1 and a.closed:
                s = genfuncs.series_L_closed_minus1(N)
            else:
                s = genfuncs.solve_Le_system(-d, N).L
        elif what == "Q":
            s = genfuncs.series_Q_closed(N)
        else:
            area_sys = genfuncs.solve_area_system(N)
            s = area_sys.A if what == "A" else area_sys.B
            marker = "q"
        if ctx.json:
            ctx.dump({"what": what, "d": _d_label(d), "order": N, "marker": marker, "series": s.to_json()})
        else:
            for i in range(N + 1):
                c = s.coefficient(i)
                if c.coeffs:
                    ctx.emit(f"x^{i}: {c.format(marker)}")
        return 0
    values = [int(v) for v in values]
    if ctx.json:
        ctx.dump({"what": what, "d": _d_label(d), "order": N, "first_index": first, "coefficients": values})
    else:
        ctx.emit(" ".join(map(str, values)))
    return 0


# check


def cmd_check(ctx: _Ctx) -> int:
    a = ctx.args
    p = parse_path(a.path)
    nu = valley_vector(p)
    ok = is_d_dyck(p, a.d)
    diffs = [b - c for c, b in zip(nu, nu[1:])]
    label = _d_label(a.d)
    if len(nu) <= 1:
        verdict = f"d-Dyck: at most one valley, valley levels {_fmt_levels(nu)}"
    elif ok:
        verdict = f"d-Dyck: valley levels {_fmt_levels(nu)}, min difference {min(diffs)} >= {label}"
    else:
        verdict = f"not d-Dyck: valley levels {_fmt_levels(nu)}, min difference {min(diffs)} < {label}"
    stats = {
        "semi_length": p.semi_length,
        "peaks": peaks(p),
        "valleys": len(nu),
        "area": area(p),
        "last_valley": last_valley_level(p),
    }
    if ctx.json:
        ctx.dump({"path": p.steps, "d": label, "is_d_dyck": ok, "valley_levels": list(nu), **stats})
    else:
        ctx.emit(verdict)
        ctx.emit(" ".join(f"{k}={'none' if v is None else v}" for k, v in stats.items()))
    return 0


# enumerate


_FILTERS = {
    "all": lambda d: PathFilter(d=d),
    "Q": lambda d: PathFilter.q_paths(),
    "B": lambda d: PathFilter.b_paths(),
}


def cmd_enumerate(ctx: _Ctx) -> int:
    a = ctx.args
    if a.n < 0:
        raise DomainError("--n must be >= 0")
    ctx.check_bound(a.n)
    f = _FILTERS[a.filter](a.d)
    it = enumeration.iter_filtered(a.n, f)
    if ctx.json:
        ctx.dump({"n": a.n, "d": _d_label(a.d), "filter": a.filter, "paths": [p.steps for p in it]})
    else:
        for p in it:
            ctx.emit(p.steps)
    return 0


# bijection


def _flat_text(enc: bijection.Encoding) -> str:
    return "(" + ", ".join(str(v) if isinstance(v, int) else (v or "()") for v in enc.flat()) + ")"


def cmd_bijection(ctx: _Ctx) -> int:
    a = ctx.args
    if a.action == "encode":
        if not a.path:
            raise DomainError("encode needs --path")
        enc = bijection.phi_inverse(parse_path(a.path))
        if ctx.json:
            ctx.emit(enc.to_json())
        else:
            ctx.emit(_flat_text(enc))
    else:
        if not a.encoding:
            raise DomainError("decode needs --encoding")
        p = bijection.phi(bijection.Encoding.from_json(a.encoding))
        if ctx.json:
            ctx.dump({"path": p.steps})
        else:
            ctx.emit(p.steps)
    return 0


# asymptote


def _short_int(v: int) -> str:
    text = str(v)
    return text if len(text) <= 15 else f"{text[0]}.{text[1:12]}e+{len(text) - 1}"


def cmd_asymptote(ctx: _Ctx) -> int:
    a = ctx.args
    ns = a.n or [25, 50, 100, 200, 400]
    if any(n < 1 for n in ns):
        raise DomainError("--n values must be >= 1")
    rows = asymptotics.asymptotic_table(ns, a.precision)
    data = asymptotics.compute_rho(a.precision)
    if ctx.json:
        ctx.dump({
            "rho": asymptotics.mpmath.nstr(data.rho, a.precision),
            "rows": [
                {"n": r["n"], "exact": r["exact"],
                 "estimate": asymptotics.mpmath.nstr(r["estimate"], 20),
                 "relative_error": asymptotics.mpmath.nstr(r["relative_error"], 10)}
                for r in rows
            ],
        })
    else:
        ctx.emit(f"rho = {asymptotics.mpmath.nstr(data.rho, 20)}")
        table = [(str(r["n"]), _short_int(r["exact"]), asymptotics.mpmath.nstr(r["estimate"], 12),
                  asymptotics.mpmath.nstr(r["relative_error"], 6)) for r in rows]
        head = ("n", "exact", "estimate", "rel_error")
        widths = [max(len(x) for x in col) for col in zip(head, *table)]
        for row in (head, *table):
            ctx.emit("  ".join(v.rjust(w) for v, w in zip(row, widths)))
    return 0


# sequence export


def cmd_sequence(ctx: _Ctx) -> int:
    a = ctx.args
    pairs = recurrences.sequence(a.name, a.n)
    if ctx.json:
        first = pairs[0][0] if pairs else None
        ctx.dump({"name": a.name, "first_index": first, "values": [v for _, v in pairs]})
    else:
        for k, v in pairs:
            ctx.emit(f"{k}\t{v}")
    return 0


# selftest


def _selftest_checks(n: int, bound: int) -> list[tuple[str, Callable[[], bool]]]:
    m = min(n, bound)
    checks: list[tuple[str, Callable[[], bool]]] = []
    for e in (1, 2, 3):
        def tri(e=e):
            sys_ = genfuncs.solve_Le_system(e, n).L.at_marker(1)
            lag = genfuncs.lagrange_Le(e, n)
            orc = [0] + [enumeration.count_filtered(k, PathFilter(d=-e), bound=bound) for k in range(1, m + 1)]
            return sys_ == lag and sys_[: m + 1] == orc
        checks.append((f"peaks system = Lagrange = oracle, e={e}, n<={n}", tri))
    checks.append(("closed L(x,y) = system, d=-1",
                   lambda: genfuncs.series_L_closed_minus1(n) == genfuncs.solve_Le_system(1, n).L))
    checks.append(("r(n) three recurrences agree",
                   lambda: all(len({recurrences.r_minus1(k, mm) for mm in recurrences.R_METHODS}) == 1
                               for k in range(1, n + 1))))
    checks.append(("b(n) series = both closed formulas",
                   lambda: genfuncs.series_b(n) == [recurrences.b_closed(k, "inclusion_exclusion") for k in range(n + 1)]
                   == [recurrences.b_closed(k, "narayana_sum") for k in range(n + 1)]))
    checks.append(("a(n) closed form = recursion = oracle",
                   lambda: genfuncs.series_V(n)[1:] == [recurrences.a_seq(k) for k in range(1, n + 1)]
                   and all(recurrences.a_seq(k) == enumeration.total_area(k, PathFilter(d=-1), bound=bound)
                           for k in range(1, m + 1))))
    checks.append(("le residuals vanish, e=1..3",
                   lambda: all(v.is_zero() for e in (1, 2, 3)
                               for v in genfuncs.le_residuals(genfuncs.solve_Le_system(e, n)).values())))
    b_n = min(m, 8)
    checks.append((f"bijection round trip, n<={b_n}",
                   lambda: all(bijection.phi(bijection.phi_inverse(p)) == p
                               for k in range(1, b_n + 1) for p in enumeration.iter_filtered(k, PathFilter(d=-1)))))
    return checks


def cmd_selftest(ctx: _Ctx) -> int:
    results = []
    for name, fn in _selftest_checks(ctx.args.n, ctx.bound):
        results.append((name, bool(fn())))
    ok = all(r for _, r in results)
    if ctx.json:
        ctx.dump({"passed": ok, "checks": {name: r for name, r in results}})
    else:
        for name, r in results:
            ctx.emit(f"{'PASS' if r else 'FAIL'}  {name}")
        ctx.emit("selftest passed" if ok else "selftest FAILED")
    return 0 if ok else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        # one-line diagnostic instead of the usage block
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-exhaustive", type=int, default=None,
                        help="exhaustive enumeration bound (default: $DDYCK_MAX_EXHAUSTIVE or 16)")

    parser = _Parser(prog="ddyck", description="Restricted d-Dyck path enumeration.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="number of d-Dyck paths of semi-length n")
    p.add_argument("--d", type=_d_value, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", default=None, help="method name, or 'all' to cross-check every method")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("peaks", parents=[common], help="peak distribution at semi-length n")
    p.add_argument("--d", type=_d_value, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("series", "oracle", "all"), default="series")
    p.set_defaults(func=cmd_peaks)

    p = sub.add_parser("area", parents=[common], help="area statistics (d = -1 or -inf)")
    p.add_argument("--d", type=_d_value, default=-1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--what", choices=("total", "grounded", "histogram"), default="total")
    p.add_argument("--check-oracle", action="store_true", help="also enumerate exhaustively")
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("series", parents=[common], help="generating function coefficients")
    p.add_argument("--what", choices=("r", "L", "Q", "q", "b", "V", "lagrange", "A", "B"), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--d", type=_d_value, default=-1)
    p.add_argument("--closed", action="store_true", help="for L at d=-1, expand the closed radical form")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("check", parents=[common], help="test a path for the d-Dyck condition")
    p.add_argument("--path", required=True)
    p.add_argument("--d", type=_d_value, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="list paths of semi-length n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=_d_value, default=UNRESTRICTED)
    p.add_argument("--filter", choices=sorted(_FILTERS), default="all",
                   help="Q / B select the ground-last-valley (-1)-Dyck families")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bijection", parents=[common], help="encode/decode (-1)-Dyck paths")
    p.add_argument("action", choices=("encode", "decode"))
    p.add_argument("--path")
    p.add_argument("--encoding", help='JSON: {"components": [...], "exponents": [...]}')
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("asymptote", parents=[common], help="asymptotic estimate of r(n)")
    p.add_argument("--n", type=int, nargs="*")
    p.add_argument("--precision", type=int, default=asymptotics.DEFAULT_PRECISION)
    p.set_defaults(func=cmd_asymptote)

    p = sub.add_parser("sequence", parents=[common], help="export a named sequence")
    p.add_argument("--name", choices=sorted(recurrences.TABLES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("selftest", parents=[common], help="cross-validate every route")
    p.add_argument("--n", type=int, default=10)
    p.set_defaults(func=cmd_selftest)
    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse treats "-inf" as an option; glue it to its flag.
    out: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] == "--d" and i + 1 < len(argv) and not argv[i + 1].lstrip("-").isdigit():
            out.append(f"--d={argv[i + 1]}")
            i += 2
            continue
        out.append(argv[i])
        i += 1
    return out


def run(argv: Optional[list[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(_Ctx(args, out))
    except (DomainError, PathError, ExhaustiveBoundExceeded, ValueError, IndexError, ArithmeticError) as exc:
        print(f"ddyck: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
