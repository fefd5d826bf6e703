"""Exact justification sets Jus(a -> b) as finite unions of rectangles.

A justification ``S^k(z) -> S^l(z)`` is stored as the pair ``(k, l)``.  Every
justification set of a finite algebra is a union of at most ``|A|`` rectangles
``P x Q`` whose sides are eventually periodic index sets, so all comparisons
reduce to membership on a finite window (see :func:`window_bound`).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .algebra import MonounaryAlgebra, exponents
from .indexset import (
    AP,
    Empty,
    IndexSet,
    Singleton,
    format_index,
    index_from_dict,
    index_to_dict,
    intersect_index,
)

__all__ = [
    "Rect",
    "JustSet",
    "EMPTY_JUS",
    "Window",
    "just_set",
    "intersect",
    "member",
    "window_bound",
    "subset",
    "strict_subset",
    "equal",
    "is_empty",
    "intersect_index",
    "format_justset",
    "justset_to_dict",
    "justset_from_dict",
    "from_pairs",
]


@dataclass(frozen=True)
class Rect:
    kset: IndexSet
    lset: IndexSet

    def __post_init__(self):
        if isinstance(self.kset, Empty) or isinstance(self.lset, Empty):
            raise ValueError("empty rectangles are not stored")

    def __contains__(self, kl: tuple[int, int]) -> bool:
        return kl[0] in self.kset and kl[1] in self.lset


@dataclass(frozen=True)
class JustSet:
    rects: tuple[Rect, ...] = ()

    def __contains__(self, kl: tuple[int, int]) -> bool:
        return any(kl in r for r in self.rects)

    def __bool__(self) -> bool:
        return bool(self.rects)

    def __str__(self) -> str:
        return format_justset(self)


EMPTY_JUS = JustSet()


def _join(rects: Iterable[tuple[IndexSet, IndexSet]]) -> JustSet:
    out = []
    for p, q in rects:
        if isinstance(p, Empty) or isinstance(q, Empty):
            continue
        r = Rect(p, q)
        if r not in out:
            out.append(r)
    return JustSet(tuple(out))


def just_set(A: MonounaryAlgebra, a: int, b: int) -> JustSet:
    """Jus(a -> b): all (k, l) such that a = S^k(o) and b = S^l(o) for one origin o."""
    return _join((exponents(A, o, a), exponents(A, o, b)) for o in range(A.size))


def from_pairs(pairs: Iterable[tuple[int, int]]) -> JustSet:
    """A finite justification set, one singleton rectangle per pair."""
    return _join((Singleton(k), Singleton(l)) for k, l in sorted(set(pairs)))


def intersect(j1: JustSet, j2: JustSet) -> JustSet:
    return _join(
        (intersect_index(r.kset, s.kset), intersect_index(r.lset, s.lset))
        for r in j1.rects
        for s in j2.rects
    )


def member(j: JustSet, k: int, l: int) -> bool:
    return (k, l) in j


def is_empty(j: JustSet) -> bool:
    # rectangles are never empty, so the union is empty iff there are none
    return not j.rects


def _index_sets(js: Iterable[JustSet]) -> Iterable[IndexSet]:
    for j in js:
        for r in j.rects:
            yield r.kset
            yield r.lset


def window_bound(js: Iterable[JustSet]) -> tuple[int, int]:
    """(B, M) with: k in P  <=>  k - M in P  for every k >= B + M and every side P.

    Singletons need B strictly above their value, otherwise k - M could land on
    the singleton itself.
    """
    B, M = 0, 1
    for p in _index_sets(js):
        if isinstance(p, Singleton):
            B = max(B, p.value + 1)
        elif isinstance(p, AP):
            B = max(B, p.offset)
            M = lcm(M, p.period)
    return B, M


class Window:
    """Bitmask encoding of justification sets on the grid [0, B+M)^2.

    Any window that is valid for a family of sets (B large enough, M a common
    multiple of all periods) decides inclusion and emptiness exactly for it.
    """

    def __init__(self, B: int, M: int):
        if M < 1 or B < 0:
            raise ValueError("bad window")
        self.B, self.M = B, M
        self.side = B + M

    @classmethod
    def covering(cls, js: Iterable[JustSet]) -> "Window":
        return cls(*window_bound(js))

    @classmethod
    def for_algebras(cls, *algebras: MonounaryAlgebra) -> "Window":
        # exponent offsets are < |A| and periods are cycle lengths
        B = max(A.size for A in algebras)
        M = lcm(*(c for A in algebras for c in A.cycle_lengths))
        return cls(B, M)

    def _row(self, p: IndexSet) -> int:
        bits = 0
        for v in p.values(self.side):
            bits |= 1 << v
        return bits

    def mask(self, j: JustSet) -> int:
        out = 0
        side = self.side
        for r in j.rects:
            lbits = self._row(r.lset)
            for k in r.kset.values(side):
                out |= lbits << (k * side)
        return out

    def pairs(self, mask: int) -> list[tuple[int, int]]:
        side = self.side
        out = []
        while mask:
            low = mask & -mask
            i = low.bit_length() - 1
            out.append(divmod(i, side))
            mask ^= low
        return out


def subset(j1: JustSet, j2: JustSet) -> bool:
    w = Window.covering((j1, j2))
    return w.mask(j1) & ~w.mask(j2) == 0


def equal(j1: JustSet, j2: JustSet) -> bool:
    w = Window.covering((j1, j2))
    return w.mask(j1) == w.mask(j2)


def strict_subset(j1: JustSet, j2: JustSet) -> bool:
    w = Window.covering((j1, j2))
    m1, m2 = w.mask(j1), w.mask(j2)
    return m1 != m2 and m1 & ~m2 == 0


# --- rendering --------------------------------------------------------------


def _term(p: IndexSet, var: str) -> str:
    if isinstance(p, Singleton):
        if p.value == 0:
            return "z"
        if p.value == 1:
            return "S(z)"
        return f"S^{p.value}(z)"
    expr = format_index(p, var)
    return f"S^{expr}(z)" if len(expr) == 1 else f"S^({expr})(z)"


def format_justset(j: JustSet) -> str:
    """Human rendering, e.g. ``{S^(1+m)(z) -> z}``; m and n range over 0, 1, 2, ..."""
    if not j.rects:
        return "{}"
    return " u ".join("{" + f"{_term(r.kset, 'm')} -> {_term(r.lset, 'n')}" + "}" for r in j.rects)


def justset_to_dict(j: JustSet) -> list[dict]:
    return [{"k": index_to_dict(r.kset), "l": index_to_dict(r.lset)} for r in j.rects]


def justset_from_dict(rows: Sequence[dict]) -> JustSet:
    return _join((index_from_dict(r["k"]), index_from_dict(r["l"])) for r in rows)
