"""Axiom schemas for a:b::c:d, exhaustive checking and counterexample search."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, Sequence

from .algebra import MonounaryAlgebra, algebra_to_dict, enumerate_algebras
from .indexset import AP, Singleton
from .justsets import JustSet, Rect, equal, from_pairs, intersect, just_set, strict_subset
from .proportion import ArrowQuery, arrow_holds, engine_for

MAX_SEARCH_SIZE = 9  # isomorphism classes
MAX_LABELED_SEARCH_SIZE = 6  # all n^n succ tables


class AxiomId(str, Enum):
    SYMMETRY = "symmetry"
    INNER_SYMMETRY = "inner-symmetry"
    REFLEXIVITY = "reflexivity"
    DETERMINISM = "determinism"
    CENTRAL_PERMUTATION = "central-permutation"
    STRONG_INNER_REFLEXIVITY = "strong-inner-reflexivity"
    STRONG_REFLEXIVITY = "strong-reflexivity"
    COMMUTATIVITY = "commutativity"
    TRANSITIVITY = "transitivity"
    INNER_TRANSITIVITY = "inner-transitivity"
    CENTRAL_TRANSITIVITY = "central-transitivity"

    @classmethod
    def parse(cls, name: str) -> "AxiomId":
        key = name.strip().lower().replace("_", "-").replace(" ", "-")
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown axiom {name!r}") from None


@dataclass(frozen=True)
class Schema:
    """premises => conclusion, each premise a 4-letter pattern over the variables.

    The conclusion is either a proportion pattern or an equality ``"x=y"``.
    """

    variables: str
    premises: tuple[str, ...]
    conclusion: str

    def __str__(self) -> str:
        def fmt(p: str) -> str:
            return p if "=" in p else f"{p[0]}:{p[1]}::{p[2]}:{p[3]}"

        if not self.premises:
            return fmt(self.conclusion)
        return " & ".join(map(fmt, self.premises)) + " => " + fmt(self.conclusion)


# Determinism is the one schema fixed by convention here; swap it at this site if needed.
SCHEMAS: dict[AxiomId, Schema] = {
    AxiomId.SYMMETRY: Schema("abcd", ("abcd",), "cdab"),
    AxiomId.INNER_SYMMETRY: Schema("abcd", ("abcd",), "badc"),
    AxiomId.REFLEXIVITY: Schema("ab", (), "abab"),
    AxiomId.DETERMINISM: Schema("ad", ("aaad",), "d=a"),
    AxiomId.CENTRAL_PERMUTATION: Schema("abcd", ("abcd",), "acbd"),
    AxiomId.STRONG_INNER_REFLEXIVITY: Schema("acd", ("aacd",), "d=c"),
    AxiomId.STRONG_REFLEXIVITY: Schema("abd", ("abad",), "d=b"),
    AxiomId.COMMUTATIVITY: Schema("ab", (), "abba"),
    AxiomId.TRANSITIVITY: Schema("abcdef", ("abcd", "cdef"), "abef"),
    AxiomId.INNER_TRANSITIVITY: Schema("abcdef", ("abcd", "bedf"), "aecf"),
    AxiomId.CENTRAL_TRANSITIVITY: Schema("abcd", ("abbc", "bccd"), "abcd"),
}

POSITIVE = (AxiomId.SYMMETRY, AxiomId.INNER_SYMMETRY, AxiomId.REFLEXIVITY, AxiomId.DETERMINISM)


@dataclass(frozen=True)
class AxiomReport:
    axiom: AxiomId
    holds: bool
    counterexample: dict[str, int] | None = None

    def explain(self, A: MonounaryAlgebra) -> str:
        schema = SCHEMAS[self.axiom]
        if self.counterexample is None:
            return f"{self.axiom.value}: holds ({schema})"
        subst = {v: A.name(x) for v, x in self.counterexample.items()}
        inst = "".join(subst.get(ch, ch) if ch in schema.variables else ch for ch in str(schema))
        return f"{self.axiom.value}: fails at {_fmt_assignment(subst)}; {inst} is violated"


def _fmt_assignment(subst: dict[str, str]) -> str:
    return ", ".join(f"{v}={x}" for v, x in subst.items())


class ProportionOracle:
    """Memoized a:b::c:d verdicts for one algebra."""

    def __init__(self, A: MonounaryAlgebra):
        self.A = A
        self.P = engine_for(A).table()

    def __call__(self, pattern: str, env: dict[str, int]) -> bool:
        a, b, c, d = (env[ch] for ch in pattern)
        return self.P[a][b][c][d]


def _conclusion_holds(oracle: ProportionOracle, concl: str, env: dict[str, int]) -> bool:
    if "=" in concl:
        x, y = concl.split("=")
        return env[x] == env[y]
    return oracle(concl, env)


def violations(
    A: MonounaryAlgebra, axiom: AxiomId, oracle: ProportionOracle | None = None
) -> Iterator[dict[str, int]]:
    """Every assignment violating the schema, in lexicographic order of the variables."""
    oracle = oracle or ProportionOracle(A)
    return schema_violations(SCHEMAS[axiom], range(A.size), oracle)


def schema_violations(
    schema: Schema, universe: Sequence[int], holds: Callable[[str, dict[str, int]], bool]
) -> Iterator[dict[str, int]]:
    """Violations of ``schema`` for an arbitrary 4-ary relation over ``universe``.

    ``holds(pattern, env)`` decides the proportion named by a 4-letter pattern.
    """
    order = schema.variables
    # check each premise as soon as all of its variables are bound
    ready: list[list[str]] = [[] for _ in order]
    for p in schema.premises:
        ready[max(order.index(ch) for ch in p)].append(p)
    env: dict[str, int] = {}

    def concl() -> bool:
        if "=" in schema.conclusion:
            x, y = schema.conclusion.split("=")
            return env[x] == env[y]
        return holds(schema.conclusion, env)

    def extend(i: int) -> Iterator[dict[str, int]]:
        if i == len(order):
            if not concl():
                yield dict(env)
            return
        var = order[i]
        for x in universe:
            env[var] = x
            if all(holds(p, env) for p in ready[i]):
                yield from extend(i + 1)
        del env[var]

    return extend(0)


def check_axiom(
    A: MonounaryAlgebra, axiom: AxiomId, oracle: ProportionOracle | None = None
) -> AxiomReport:
    for cex in violations(A, axiom, oracle):
        return AxiomReport(axiom, False, cex)
    return AxiomReport(axiom, True)


def check_all(A: MonounaryAlgebra) -> list[AxiomReport]:
    oracle = ProportionOracle(A)
    return [check_axiom(A, x, oracle) for x in AxiomId]


def recheck(A: MonounaryAlgebra, report: AxiomReport) -> bool:
    """True iff the report's counterexample really violates the schema in A."""
    if report.counterexample is None:
        return False
    schema = SCHEMAS[report.axiom]
    oracle = ProportionOracle(A)
    env = report.counterexample
    return all(oracle(p, env) for p in schema.premises) and not _conclusion_holds(
        oracle, schema.conclusion, env
    )


# --- search -----------------------------------------------------------------


def _first_violation(args: tuple[tuple[int, ...], AxiomId]) -> dict[str, int] | None:
    succ, axiom = args
    return check_axiom(MonounaryAlgebra(succ), axiom).counterexample


def _all_violations(args: tuple[tuple[int, ...], AxiomId]) -> list[dict[str, int]]:
    succ, axiom = args
    return list(violations(MonounaryAlgebra(succ), axiom))


def search_counterexamples(
    n_max: int,
    axiom: AxiomId,
    canonical: bool = False,
    every_tuple: bool = False,
    jobs: int = 1,
) -> Iterator[tuple[MonounaryAlgebra, dict[str, int]]]:
    """(algebra, violating assignment) over all algebras of size 1..n_max.

    By default one violation per algebra; ``every_tuple`` yields all of them.
    Output order follows enumeration order regardless of ``jobs``.
    """
    _check_cap(n_max, canonical)
    algebras = (A for n in range(1, n_max + 1) for A in enumerate_algebras(n, canonical))
    worker = _all_violations if every_tuple else _first_violation
    tasks = ((A.succ, axiom) for A in algebras)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = zip(_replay(n_max, canonical), pool.map(worker, tasks, chunksize=64))
            yield from _emit(results, every_tuple)
    else:
        yield from _emit(((MonounaryAlgebra(s), worker((s, a))) for s, a in tasks), every_tuple)


def _check_cap(n: int, canonical: bool) -> None:
    cap = MAX_SEARCH_SIZE if canonical else MAX_LABELED_SEARCH_SIZE
    if n > cap:
        kind = "isomorphism classes" if canonical else "labeled algebras"
        raise ValueError(f"searching {kind} is capped at size {cap}")


def _replay(n_max: int, canonical: bool) -> Iterator[MonounaryAlgebra]:
    for n in range(1, n_max + 1):
        yield from enumerate_algebras(n, canonical)


def _emit(results, every_tuple: bool):
    for A, res in results:
        if every_tuple:
            for cex in res:
                yield A, cex
        elif res is not None:
            yield A, res


# --- the open problem: which algebras are transitive? ------------------------


def algebra_features(A: MonounaryAlgebra) -> dict:
    """Structural descriptors used to tabulate the transitivity classification."""
    cyclic = [x for x in range(A.size) if A.orbits[x][1] == 0]
    tails = [A.orbits[x][1] for x in range(A.size)]
    components = len({min(A.orbits[x][0][A.orbits[x][1]:]) for x in range(A.size)})
    indeg = [0] * A.size
    for s in A.succ:
        indeg[s] += 1
    return {
        "components": components,
        "cyclic_elements": len(cyclic),
        "max_tail": max(tails),
        "injective": all(d == 1 for d in indeg),
        "max_indegree": max(indeg),
    }


@dataclass
class TransitivityReport:
    size: int
    canonical: bool
    rows: list[dict] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        sat = sum(1 for r in self.rows if r["transitive"])
        return {"satisfies": sat, "fails": len(self.rows) - sat}

    def exemplars(self) -> dict[str, list[tuple[int, ...]]]:
        out: dict[str, list[tuple[int, ...]]] = {"satisfies": [], "fails": []}
        for r in self.rows:
            key = "satisfies" if r["transitive"] else "fails"
            if len(out[key]) < 3:
                out[key].append(r["succ"])
        return out

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "canonical": self.canonical,
            "counts": self.counts,
            "exemplars": {k: [list(s) for s in v] for k, v in self.exemplars().items()},
            "algebras": [
                {**r, "succ": list(r["succ"])} for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = ["succ", "transitive", "counterexample", "components", "cyclic_elements",
                "max_tail", "injective", "max_indegree"]
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in self.rows:
            row = dict(r)
            row["succ"] = " ".join(map(str, r["succ"]))
            cex = r["counterexample"]
            row["counterexample"] = "" if cex is None else " ".join(f"{k}={v}" for k, v in cex.items())
            w.writerow(row)
        return buf.getvalue()


def classify_transitivity(n: int, canonical: bool = True, jobs: int = 1) -> TransitivityReport:
    _check_cap(n, canonical)
    algebras = list(enumerate_algebras(n, canonical))
    tasks = [(A.succ, AxiomId.TRANSITIVITY) for A in algebras]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_first_violation, tasks, chunksize=16))
    else:
        results = [_first_violation(t) for t in tasks]
    report = TransitivityReport(n, canonical)
    for A, cex in zip(algebras, results):
        report.rows.append(
            {"succ": A.succ, "transitive": cex is None, "counterexample": cex, **algebra_features(A)}
        )
    return report


# --- counterexample algebras ---------------------------------------------------


@dataclass(frozen=True)
class Fact:
    """A checkable statement about a fixture.

    kind "arrow": quad is (a, b, c, d) and ``expected`` is the arrow verdict.
    kind "jus-arrow": ``jus`` is the expected Jus(a->b |> c->d).
    kind "dominates": Jus(a->b |> c->d) is strictly inside Jus(a->b |> c->d'),
    with quad (a, b, c, d) and ``other`` = d'.
    ``note`` explains facts that are easy to get wrong by hand.
    """

    kind: str
    quad: tuple[str, str, str, str]
    expected: bool = True
    jus: JustSet | None = None
    other: str | None = None
    note: str = ""


@dataclass(frozen=True)
class Fixture:
    name: str
    axiom: AxiomId
    algebra: MonounaryAlgebra
    facts: tuple[Fact, ...] = ()


def _alg(edges: dict[str, str]) -> MonounaryAlgebra:
    names = tuple(edges)
    return MonounaryAlgebra(tuple(names.index(edges[x]) for x in names), names)


def _tail_rect(k0: int, l: int) -> Rect:
    return Rect(AP(k0, 1), Singleton(l))


def fixtures() -> dict[str, Fixture]:
    """Counterexample algebras for the seven failing axioms."""
    fx = {}

    fx["central-permutation"] = Fixture(
        "central-permutation",
        AxiomId.CENTRAL_PERMUTATION,
        _alg({"a": "c", "b": "b", "c": "c", "d": "d"}),
    )
    fx["strong-inner-reflexivity"] = Fixture(
        "strong-inner-reflexivity",
        AxiomId.STRONG_INNER_REFLEXIVITY,
        _alg({"a": "a", "c": "d", "d": "c"}),
    )
    fx["strong-reflexivity"] = Fixture(
        "strong-reflexivity",
        AxiomId.STRONG_REFLEXIVITY,
        _alg({"a": "a", "b": "b", "d": "d"}),
    )
    # the smallest algebra where a:b::b:a fails
    fx["commutativity"] = Fixture(
        "commutativity",
        AxiomId.COMMUTATIVITY,
        _alg({"a": "b", "b": "b"}),
        (Fact("arrow", ("a", "b", "b", "a"), expected=False),),
    )

    tail = JustSet((_tail_rect(1, 0),))
    fx["transitivity"] = Fixture(
        "transitivity",
        AxiomId.TRANSITIVITY,
        _alg({"a": "a", "b": "a", "*": "b", "c": "c", "d": "c",
              "e": "e", "f": "e", "f'": "e", "*'": "f'"}),
        (
            Fact("arrow", ("a", "b", "c", "d"), expected=False,
                 note="dominated by c->c: Jus(a->b) itself is the larger intersection"),
            Fact("arrow", ("c", "d", "e", "f"), expected=True),
            Fact("arrow", ("a", "b", "e", "f"), expected=False),
            Fact("jus-arrow", ("a", "b", "e", "f"), jus=tail),
            Fact("jus-arrow", ("a", "b", "e", "f'"),
                 jus=JustSet((_tail_rect(1, 0), _tail_rect(2, 1)))),
            Fact("dominates", ("a", "b", "e", "f"), other="f'"),
        ),
    )
    fx["inner-transitivity"] = Fixture(
        "inner-transitivity",
        AxiomId.INNER_TRANSITIVITY,
        _alg({"a": "e", "b": "b", "e": "e", "c": "c", "d": "d", "f": "f"}),
    )
    fx["central-transitivity"] = Fixture(
        "central-transitivity",
        AxiomId.CENTRAL_TRANSITIVITY,
        _alg({"a": "a", "b": "a", "c": "b", "d": "c", "d'": "c", "*": "d'"}),
        (
            Fact("arrow", ("a", "b", "b", "c"), expected=True),
            Fact("arrow", ("b", "c", "c", "d"), expected=False,
                 note="dominated by c->d': same enlargement as in the conclusion"),
            Fact("arrow", ("a", "b", "c", "d"), expected=False),
            Fact("jus-arrow", ("a", "b", "c", "d"), jus=from_pairs([(1, 0)])),
            Fact("jus-arrow", ("a", "b", "c", "d'"), jus=from_pairs([(1, 0), (2, 1)])),
            Fact("dominates", ("a", "b", "c", "d"), other="d'"),
        ),
    )
    return fx


def check_fact(fx: Fixture, fact: Fact) -> bool:
    """Evaluate a fixture fact with the generic engine."""
    A = fx.algebra
    a, b, c, d = (A.element(x) for x in fact.quad)
    if fact.kind == "arrow":
        return arrow_holds(ArrowQuery(A, a, b, c, d)).holds == fact.expected
    W = intersect(just_set(A, a, b), just_set(A, c, d))
    if fact.kind == "jus-arrow":
        return equal(W, fact.jus)
    if fact.kind == "dominates":
        W2 = intersect(just_set(A, a, b), just_set(A, c, A.element(fact.other)))
        return strict_subset(W, W2)
    raise ValueError(f"unknown fact kind {fact.kind!r}")


def report_rows(A: MonounaryAlgebra, reports: Sequence[AxiomReport]) -> list[dict]:
    return [
        {
            "algebra": algebra_to_dict(A),
            "axiom": r.axiom.value,
            "holds": r.holds,
            "counterexample": None
            if r.counterexample is None
            else {v: A.name(x) for v, x in r.counterexample.items()},
        }
        for r in reports
    ]
