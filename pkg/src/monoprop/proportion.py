"""Deciding arrow proportions a->b |> c->d and analogical proportions a:b::c:d.

An arrow proportion holds when Jus(a->b) and Jus(c->d) are both empty, or when
their intersection is nonempty and no alternative endpoint d' gives a strictly
larger intersection Jus(a->b) & Jus(c->d').  The analogical proportion is the
conjunction of the four directions

    a->b |> c->d,   b->a |> d->c,   c->d |> a->b,   d->c |> b->a.

Queries may span an ordered pair of algebras: a, b always live in the left
algebra and c, d in the right one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import lcm
from typing import Hashable, Iterable, NamedTuple

from .algebra import AlgebraError, MonounaryAlgebra
from .justsets import (
    EMPTY_JUS,
    JustSet,
    Window,
    from_pairs,
    intersect,
    is_empty,
    just_set,
    strict_subset,
)


class Reason(str, Enum):
    EMPTY_UNION = "empty-union"
    MAXIMAL = "maximal"
    EMPTY_INTERSECTION = "empty-intersection"
    DOMINATED = "dominated"


@dataclass(frozen=True)
class Verdict:
    holds: bool
    reason: Reason
    intersection: JustSet
    competitor: Hashable | None = None
    witness: JustSet | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ArrowQuery:
    left: MonounaryAlgebra
    a: int
    b: int
    c: int
    d: int
    right: MonounaryAlgebra | None = None

    @property
    def target(self) -> MonounaryAlgebra:
        return self.left if self.right is None else self.right

    def validate(self) -> None:
        for name, x, A in (("a", self.a, self.left), ("b", self.b, self.left),
                           ("c", self.c, self.target), ("d", self.d, self.target)):
            if not 0 <= x < A.size:
                raise AlgebraError(f"{name}={x} is not an element of its algebra (size {A.size})")


class ProportionResult(NamedTuple):
    holds: bool
    verdicts: tuple[Verdict, Verdict, Verdict, Verdict]


def decide_arrow(
    U: JustSet, V: JustSet, competitors: Iterable[tuple[Hashable, JustSet]]
) -> Verdict:
    """Generic decision from Jus(a->b), Jus(c->d) and the sets Jus(c->d') to scan.

    The first strictly dominating competitor in iteration order is reported.
    """
    if is_empty(U) and is_empty(V):
        return Verdict(True, Reason.EMPTY_UNION, EMPTY_JUS)
    W = intersect(U, V)
    if is_empty(W):
        return Verdict(False, Reason.EMPTY_INTERSECTION, W)
    for label, V2 in competitors:
        W2 = intersect(U, V2)
        if strict_subset(W, W2):
            return Verdict(False, Reason.DOMINATED, W, label, W2)
    return Verdict(True, Reason.MAXIMAL, W)


class Engine:
    """Cached justification sets and bitmasks for one ordered pair of algebras.

    All sets of both algebras are encoded on one shared window, so inclusion
    tests are single integer operations.
    """

    def __init__(self, left: MonounaryAlgebra, right: MonounaryAlgebra | None = None):
        self.left = left
        self.right = left if right is None else right
        self.window = Window.for_algebras(self.left, self.right)
        self._jus: dict[tuple[int, int, int], JustSet] = {}
        self._masks: dict[int, list[list[int]]] = {}

    def _side(self, A: MonounaryAlgebra) -> int:
        if A is self.left or A == self.left:
            return 0
        if A is self.right or A == self.right:
            return 1
        raise ValueError("algebra is not part of this engine")

    def _alg(self, side: int) -> MonounaryAlgebra:
        return self.left if side == 0 else self.right

    def jus(self, side: int, a: int, b: int) -> JustSet:
        key = (side, a, b)
        j = self._jus.get(key)
        if j is None:
            j = self._jus[key] = just_set(self._alg(side), a, b)
        return j

    def masks(self, side: int) -> list[list[int]]:
        m = self._masks.get(side)
        if m is None:
            A = self._alg(side)
            m = [[self.window.mask(self.jus(side, x, y)) for y in range(A.size)]
                 for x in range(A.size)]
            self._masks[side] = m
        return m

    def holds(self, src: int, a: int, b: int, c: int, d: int) -> bool:
        """Fast arrow decision; a, b in algebra ``src`` (0 left, 1 right), c, d in the other."""
        U = self.masks(src)[a][b]
        row = self.masks(1 - src)[c]
        V = row[d]
        if U == 0 and V == 0:
            return True
        W = U & V
        if W == 0:
            return False
        for V2 in row:
            W2 = U & V2
            if W2 != W and W & ~W2 == 0:
                return False
        return True

    def verdict(self, src: int, a: int, b: int, c: int, d: int) -> Verdict:
        dst = 1 - src
        target = self._alg(dst)
        return decide_arrow(
            self.jus(src, a, b),
            self.jus(dst, c, d),
            ((x, self.jus(dst, c, x)) for x in range(target.size)),
        )

    def proportion(self, a: int, b: int, c: int, d: int) -> bool:
        return (
            self.holds(0, a, b, c, d)
            and self.holds(0, b, a, d, c)
            and self.holds(1, c, d, a, b)
            and self.holds(1, d, c, b, a)
        )

    def proportion_verdicts(self, a: int, b: int, c: int, d: int) -> ProportionResult:
        vs = (
            self.verdict(0, a, b, c, d),
            self.verdict(0, b, a, d, c),
            self.verdict(1, c, d, a, b),
            self.verdict(1, d, c, b, a),
        )
        return ProportionResult(all(v.holds for v in vs), vs)

    def table(self) -> list:
        """Nested list ``P[a][b][c][d]`` of full proportion verdicts."""
        nl, nr = self.left.size, self.right.size
        return [[[[self.proportion(a, b, c, d) for d in range(nr)] for c in range(nr)]
                 for b in range(nl)] for a in range(nl)]


@lru_cache(maxsize=256)
def engine_for(left: MonounaryAlgebra, right: MonounaryAlgebra | None = None) -> Engine:
    return Engine(left, right)


def _check(A: MonounaryAlgebra, *xs: int) -> None:
    for x in xs:
        if not 0 <= x < A.size:
            raise AlgebraError(f"element {x} out of range for size {A.size}")


def arrow_holds(q: ArrowQuery) -> Verdict:
    q.validate()
    return engine_for(q.left, q.right).verdict(0, q.a, q.b, q.c, q.d)


def proportion_holds(
    left: MonounaryAlgebra, right: MonounaryAlgebra | None, a: int, b: int, c: int, d: int
) -> ProportionResult:
    right = left if right is None else right
    _check(left, a, b)
    _check(right, c, d)
    return engine_for(left, right).proportion_verdicts(a, b, c, d)


def solve_arrow(
    left: MonounaryAlgebra, right: MonounaryAlgebra | None, a: int, b: int, c: int
) -> set[int]:
    right = left if right is None else right
    _check(left, a, b)
    _check(right, c)
    eng = engine_for(left, right)
    return {d for d in range(right.size) if eng.holds(0, a, b, c, d)}


def solve_proportion(
    left: MonounaryAlgebra, right: MonounaryAlgebra | None, a: int, b: int, c: int
) -> set[int]:
    right = left if right is None else right
    _check(left, a, b)
    _check(right, c)
    eng = engine_for(left, right)
    return {d for d in range(right.size) if eng.proportion(a, b, c, d)}


# --- independent oracle -----------------------------------------------------


def _naive_cycle_lengths(A: MonounaryAlgebra) -> set[int]:
    out = set()
    for o in range(A.size):
        x = o
        for _ in range(A.size):
            x = A.succ[x]
        # x is now on a cycle
        y, p = A.succ[x], 1
        while y != x:
            y, p = A.succ[y], p + 1
        out.add(p)
    return out


def _naive_pairs(A: MonounaryAlgebra, a: int, b: int, K: int) -> frozenset[tuple[int, int]]:
    pairs = set()
    for o in range(A.size):
        seq = [o]
        for _ in range(K - 1):
            seq.append(A.succ[seq[-1]])
        ks = [k for k, x in enumerate(seq) if x == a]
        ls = [l for l, x in enumerate(seq) if x == b]
        pairs.update((k, l) for k in ks for l in ls)
    return frozenset(pairs)


def brute_force_arrow(q: ArrowQuery) -> Verdict:
    """Oracle: explicit justification pairs with k, l < B + 2M, found by direct iteration."""
    q.validate()
    left, right = q.left, q.target
    B = max(left.size, right.size)
    M = lcm(*_naive_cycle_lengths(left), *_naive_cycle_lengths(right))
    K = B + 2 * M
    U = _naive_pairs(left, q.a, q.b, K)
    V = _naive_pairs(right, q.c, q.d, K)
    if not U and not V:
        return Verdict(True, Reason.EMPTY_UNION, EMPTY_JUS)
    W = U & V
    if not W:
        return Verdict(False, Reason.EMPTY_INTERSECTION, EMPTY_JUS)
    for x in range(right.size):
        W2 = U & _naive_pairs(right, q.c, x, K)
        if W < W2:
            return Verdict(False, Reason.DOMINATED, from_pairs(W), x, from_pairs(W2))
    return Verdict(True, Reason.MAXIMAL, from_pairs(W))
