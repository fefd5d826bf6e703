"""Command-line front end.

Exit codes: 0 success / relation holds, 1 relation fails, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Callable, Sequence, TextIO

from . import axioms as ax
from .algebra import (
    AlgebraError,
    MonounaryAlgebra,
    algebra_to_dict,
    dump_algebra,
    enumerate_algebras,
    load_algebra,
    to_dot,
    worked_example,
)
from .closedforms import (
    bool_algebra,
    nat_proportion_holds,
    parity_holds,
    parity_proportion_holds,
)
from .congruence import (
    CongruenceError,
    all_congruences,
    congruence_fixtures,
    factor,
    format_partition,
    parse_partition,
    quotient_compat_experiment,
)
from .justsets import format_justset, just_set, justset_to_dict
from .proportion import ProportionResult, Verdict, engine_for, proportion_holds, solve_arrow, solve_proportion


class UsageError(Exception):
    pass


def builtin_algebras() -> dict[str, MonounaryAlgebra]:
    out = {"example": worked_example(), "bool": bool_algebra(), "fixpoint": MonounaryAlgebra((0,))}
    for name, fx in ax.fixtures().items():
        out[name] = fx.algebra
    for name, (A, _) in congruence_fixtures().items():
        out[name] = A
    return out


def _resolve(path: str | None, fixture: str | None, what: str = "--algebra") -> MonounaryAlgebra:
    if fixture is not None:
        table = builtin_algebras()
        if fixture not in table:
            raise UsageError(f"unknown fixture {fixture!r}; choose from {', '.join(sorted(table))}")
        return table[fixture]
    if path is None:
        raise UsageError(f"{what} FILE or the matching fixture option is required")
    try:
        return load_algebra(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _left(args) -> MonounaryAlgebra:
    return _resolve(args.algebra, args.fixture)


def _right(args, left: MonounaryAlgebra) -> MonounaryAlgebra:
    if getattr(args, "right", None) is None and getattr(args, "right_fixture", None) is None:
        return left
    return _resolve(args.right, args.right_fixture, "--right")


class Out:
    def __init__(self, stream: TextIO, fmt: str):
        self.stream, self.fmt = stream, fmt

    def text(self, line: str = "") -> None:
        print(line, file=self.stream)

    def json(self, obj) -> None:
        print(json.dumps(obj, indent=2, ensure_ascii=False), file=self.stream)


# --- verdict rendering -------------------------------------------------------


def _verdict_dict(v: Verdict, name: Callable[[int], str] | None = None) -> dict:
    return {
        "holds": v.holds,
        "reason": v.reason.value,
        "intersection": format_justset(v.intersection),
        "intersection_rects": justset_to_dict(v.intersection),
        "competitor": None if v.competitor is None else (name(v.competitor) if name else v.competitor),
        "competitor_set": None if v.witness is None else format_justset(v.witness),
    }


def _arrow_line(src, a, b, dst, c, d, v: Verdict) -> str:
    head = f"{src.name(a)}->{src.name(b)} |> {dst.name(c)}->{dst.name(d)}"
    status = "holds" if v.holds else "fails"
    line = f"  {head}: {status} ({v.reason.value}); Jus = {format_justset(v.intersection)}"
    if v.competitor is not None:
        line += (f"; dominated by {src.name(a)}->{src.name(b)} |> {dst.name(c)}->"
                 f"{dst.name(v.competitor)} with Jus = {format_justset(v.witness)}")
    return line


_DIRECTIONS = ("abcd", "badc", "cdab", "dcba")


def _emit_proportion(out: Out, L, R, quad, res: ProportionResult, label: str) -> None:
    a, b, c, d = quad
    els = {"a": (L, a), "b": (L, b), "c": (R, c), "d": (R, d)}
    if out.fmt == "json":
        dirs = []
        for pat, v in zip(_DIRECTIONS, res.verdicts):
            (s, x), (_, y), (t, z), (_, w) = (els[ch] for ch in pat)
            dirs.append({"arrow": f"{s.name(x)}->{s.name(y)} |> {t.name(z)}->{t.name(w)}",
                         **_verdict_dict(v, t.name)})
        out.json({"proportion": label, "holds": res.holds, "directions": dirs})
        return
    out.text(f"{label} {'holds' if res.holds else 'fails'}")
    for pat, v in zip(_DIRECTIONS, res.verdicts):
        (s, x), (_, y), (t, z), (_, w) = (els[ch] for ch in pat)
        out.text(_arrow_line(s, x, y, t, z, w, v))


# --- commands ----------------------------------------------------------------


def cmd_decide(args, out: Out) -> int:
    L = _left(args)
    R = _right(args, L)
    a, b = L.element(args.quad[0]), L.element(args.quad[1])
    c, d = R.element(args.quad[2]), R.element(args.quad[3])
    label = f"{L.name(a)}:{L.name(b)}::{R.name(c)}:{R.name(d)}"
    if args.arrow:
        eng = engine_for(L, R)
        v = eng.verdict(0, a, b, c, d)
        if out.fmt == "json":
            out.json({"arrow": f"{L.name(a)}->{L.name(b)} |> {R.name(c)}->{R.name(d)}",
                      **_verdict_dict(v, R.name)})
        else:
            out.text(_arrow_line(L, a, b, R, c, d, v).strip())
        result = v.holds
    else:
        res = proportion_holds(L, R, a, b, c, d)
        _emit_proportion(out, L, R, (a, b, c, d), res, label)
        result = res.holds
    if args.plot:
        from .report import plot_justsets

        eng = engine_for(L, R)
        v = eng.verdict(0, a, b, c, d)
        panels = [
            (f"Jus({L.name(a)}->{L.name(b)})", eng.jus(0, a, b)),
            (f"Jus({R.name(c)}->{R.name(d)})", eng.jus(1, c, d)),
            ("intersection", v.intersection),
        ]
        if v.witness is not None:
            panels.append((f"with d'={R.name(v.competitor)}", v.witness))
        plot_justsets(panels, args.plot, eng.window)
    return 0 if result else 1


def cmd_solve(args, out: Out) -> int:
    L = _left(args)
    R = _right(args, L)
    a, b, c = L.element(args.triple[0]), L.element(args.triple[1]), R.element(args.triple[2])
    sols = (solve_arrow if args.arrow else solve_proportion)(L, R, a, b, c)
    names = [R.name(x) for x in sorted(sols)]
    if out.fmt == "json":
        out.json({"kind": "arrow" if args.arrow else "proportion", "solutions": names})
    else:
        out.text("{" + ", ".join(names) + "}")
    return 0 if sols else 1


def cmd_jus(args, out: Out) -> int:
    A = _left(args)
    a, b = A.element(args.pair[0]), A.element(args.pair[1])
    j = just_set(A, a, b)
    if out.fmt == "json":
        out.json({"arrow": f"{A.name(a)}->{A.name(b)}", "jus": format_justset(j),
                  "rects": justset_to_dict(j)})
    else:
        out.text(f"Jus({A.name(a)}->{A.name(b)}) = {format_justset(j)}")
    if args.plot:
        from .report import plot_justsets

        plot_justsets([(f"Jus({A.name(a)}->{A.name(b)})", j)], args.plot)
    return 0


def cmd_axioms(args, out: Out) -> int:
    A = _left(args)
    if A.size > 6:
        print(f"warning: size {A.size}; six-variable schemas scan {A.size ** 6} tuples",
              file=sys.stderr)
    which = [ax.AxiomId.parse(args.axiom)] if args.axiom else list(ax.AxiomId)
    oracle = ax.ProportionOracle(A)
    reports = [ax.check_axiom(A, x, oracle) for x in which]
    if out.fmt == "json":
        out.json(ax.report_rows(A, reports))
    else:
        for r in reports:
            out.text(r.explain(A))
    if args.axiom:
        return 0 if reports[0].holds else 1
    return 0


def cmd_search(args, out: Out) -> int:
    axiom = ax.AxiomId.parse(args.axiom)
    hits = ax.search_counterexamples(args.max_size, axiom, canonical=args.canonical,
                                     every_tuple=args.all_tuples, jobs=args.jobs)
    rows = []
    for A, cex in hits:
        rows.append({"algebra": algebra_to_dict(A), "axiom": axiom.value, "holds": False,
                     "counterexample": cex})
        if args.limit and len(rows) >= args.limit:
            break
    if out.fmt == "json":
        out.json(rows)
    else:
        for r in rows:
            cex = " ".join(f"{k}={v}" for k, v in r["counterexample"].items())
            out.text(f"{json.dumps(r['algebra'])}\t{cex}")
        out.text(f"# {len(rows)} counterexample(s) for {axiom.value} up to size {args.max_size}")
    return 0


def cmd_classify(args, out: Out) -> int:
    report = ax.classify_transitivity(args.size, canonical=args.canonical, jobs=args.jobs)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(report.to_csv())
    if args.plot:
        from .report import plot_transitivity

        plot_transitivity(report, args.plot)
    if out.fmt == "json":
        out.text(report.to_json())
    else:
        out.text(report.to_csv().rstrip("\n"))
        c = report.counts
        out.text(f"# size {args.size}: {c['satisfies']} transitive, {c['fails']} not")
    return 0


def cmd_congruences(args, out: Out) -> int:
    A = _left(args)
    thetas = [format_partition(A, p) for p in all_congruences(A)]
    if out.fmt == "json":
        out.json(thetas)
    else:
        for t in thetas:
            out.text(t)
    return 0


def cmd_factor(args, out: Out) -> int:
    A = _left(args)
    Q, proj = factor(A, parse_partition(A, args.theta))
    if out.fmt == "json":
        out.json({**algebra_to_dict(Q), "projection": list(proj)})
    else:
        out.text(dump_algebra(Q))
    return 0


def cmd_quotient_check(args, out: Out) -> int:
    A = _left(args)
    theta = parse_partition(A, args.theta)
    quad = [A.element(x) for x in args.quad]
    rep = quotient_compat_experiment(A, theta, *quad)
    if out.fmt == "json":
        out.json(rep._asdict())
    else:
        a, b, c, d = (A.name(x) for x in quad)
        out.text(f"A     |= {a}:{b}::{c}:{d}: {rep.in_A}")
        out.text(f"A/t   |= {a}/t:{b}/t::{c}/t:{d}/t: {rep.in_quotient}")
        out.text(f"(A,A/t) |= {a}:{b}::{a}/t:{b}/t: {rep.cross}")
    return 0


def _naturals(xs: Sequence[str]) -> list[int]:
    try:
        vals = [int(x) for x in xs]
    except ValueError:
        raise UsageError("expected natural numbers") from None
    if any(v < 0 for v in vals):
        raise UsageError("expected natural numbers")
    return vals


def cmd_nat(args, out: Out) -> int:
    a, b, c, d = _naturals(args.quad)
    res = nat_proportion_holds(a, b, c, d)
    status = "holds" if res.holds else "fails"
    rel = "=" if a - b == c - d else "!="
    if out.fmt == "json":
        out.json({"holds": res.holds, "left_difference": a - b, "right_difference": c - d,
                  "directions": [_verdict_dict(v) for v in res.verdicts]})
    else:
        out.text(f"{status} (difference {a - b} {rel} {c - d})")
    return 0 if res.holds else 1


def cmd_parity(args, out: Out) -> int:
    a, b, c, d = _naturals(args.quad)
    if c not in (0, 1) or d not in (0, 1):
        raise UsageError("c and d must be 0 or 1")
    res = parity_proportion_holds(a, b, c, d)
    closed = parity_holds(a, b, c, d)
    if out.fmt == "json":
        out.json({"holds": res.holds, "closed_form": closed,
                  "directions": [_verdict_dict(v) for v in res.verdicts]})
    else:
        parity = "even" if (b - a) % 2 == 0 else "odd"
        same = "c=d" if c == d else "c!=d"
        out.text(f"{'holds' if res.holds else 'fails'} ({same}, b-a={b - a} is {parity})")
    return 0 if res.holds else 1


def cmd_enumerate(args, out: Out) -> int:
    if args.size > (ax.MAX_SEARCH_SIZE if args.canonical else ax.MAX_LABELED_SEARCH_SIZE):
        raise UsageError("size too large to enumerate")
    algs = list(enumerate_algebras(args.size, canonical=args.canonical))
    if out.fmt == "json":
        out.json([algebra_to_dict(A) for A in algs])
    else:
        for A in algs:
            out.text(dump_algebra(A))
    return 0


def cmd_dot(args, out: Out) -> int:
    out.text(to_dot(_left(args)).rstrip("\n"))
    return 0


def cmd_fixtures(args, out: Out) -> int:
    table = builtin_algebras()
    if args.name:
        if args.name not in table:
            raise UsageError(f"unknown fixture {args.name!r}")
        out.text(dump_algebra(table[args.name]))
        return 0
    if out.fmt == "json":
        out.json({k: algebra_to_dict(v) for k, v in table.items()})
    else:
        for k, v in table.items():
            out.text(f"{k}\t{dump_algebra(v)}")
    return 0


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--algebra", metavar="FILE", help="algebra file (JSON with succ/names)")
    alg.add_argument("--fixture", metavar="NAME", help="built-in algebra, see `fixtures`")

    right = argparse.ArgumentParser(add_help=False)
    right.add_argument("--right", metavar="FILE", help="second algebra housing c and d")
    right.add_argument("--right-fixture", metavar="NAME")

    p = argparse.ArgumentParser(prog="monoprop", description="Analogical proportions in monounary algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("decide", parents=[common, alg, right], help="decide a:b::c:d")
    s.add_argument("--quad", nargs=4, required=True, metavar=("A", "B", "C", "D"))
    s.add_argument("--arrow", action="store_true", help="only the arrow a->b |> c->d")
    s.add_argument("--plot", metavar="PNG", help="draw the justification sets of a->b |> c->d")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("solve", parents=[common, alg, right], help="all d with a:b::c:d")
    s.add_argument("--triple", nargs=3, required=True, metavar=("A", "B", "C"))
    s.add_argument("--arrow", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("jus", parents=[common, alg], help="print Jus(a->b)")
    s.add_argument("--pair", nargs=2, required=True, metavar=("A", "B"))
    s.add_argument("--plot", metavar="PNG")
    s.set_defaults(func=cmd_jus)

    s = sub.add_parser("axioms", parents=[common, alg], help="check axioms on one algebra")
    s.add_argument("--axiom", metavar="NAME")
    s.set_defaults(func=cmd_axioms)

    s = sub.add_parser("search", parents=[common], help="counterexamples over all small algebras")
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--axiom", required=True)
    s.add_argument("--canonical", action="store_true", help="one algebra per isomorphism class")
    s.add_argument("--all-tuples", action="store_true", help="every violating tuple, not one per algebra")
    s.add_argument("--limit", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("classify-transitivity", parents=[common], help="which algebras are transitive")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--canonical", action="store_true")
    s.add_argument("--csv", metavar="PATH")
    s.add_argument("--plot", metavar="PNG")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("congruences", parents=[common, alg], help="list all congruences")
    s.set_defaults(func=cmd_congruences)

    s = sub.add_parser("factor", parents=[common, alg], help="emit the factor algebra")
    s.add_argument("--theta", required=True, help="blocks like \"a,a'|b,b'|c|d\"")
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("quotient-check", parents=[common, alg], help="proportions vs. quotient")
    s.add_argument("--theta", required=True)
    s.add_argument("--quad", nargs=4, required=True, metavar=("A", "B", "C", "D"))
    s.set_defaults(func=cmd_quotient_check)

    s = sub.add_parser("nat", parents=[common], help="a:b::c:d in (N, S)")
    s.add_argument("--quad", nargs=4, required=True, metavar=("A", "B", "C", "D"))
    s.set_defaults(func=cmd_nat)

    s = sub.add_parser("parity", parents=[common], help="a:b::c:d across (N, S) and ({0,1}, S)")
    s.add_argument("--quad", nargs=4, required=True, metavar=("A", "B", "C", "D"))
    s.set_defaults(func=cmd_parity)

    s = sub.add_parser("enumerate", parents=[common], help="all algebras of a size")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--canonical", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("dot", parents=[common, alg], help="Graphviz rendering")
    s.set_defaults(func=cmd_dot)

    s = sub.add_parser("fixtures", parents=[common], help="list or dump built-in algebras")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_fixtures)
    return p


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        # argparse writes help and errors to the process streams
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args, Out(stdout, args.format))
    except (UsageError, AlgebraError, CongruenceError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2


def main() -> None:
    sys.exit(run())
