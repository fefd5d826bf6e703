"""Eventually periodic subsets of the naturals.

The exponent set ``{k : S^k(o) = x}`` of a functional graph is always one of
three shapes: empty, a single value (``x`` sits on the tail of ``o``'s orbit),
or an arithmetic progression whose period is the cycle length.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Union


@dataclass(frozen=True)
class Empty:
    def __contains__(self, k: int) -> bool:
        return False

    def __bool__(self) -> bool:
        return False

    def values(self, bound: int) -> Iterator[int]:
        return iter(())


@dataclass(frozen=True)
class Singleton:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"negative exponent {self.value}")

    def __contains__(self, k: int) -> bool:
        return k == self.value

    def values(self, bound: int) -> Iterator[int]:
        if self.value < bound:
            yield self.value


@dataclass(frozen=True)
class AP:
    """The progression ``{offset, offset + period, offset + 2*period, ...}``."""

    offset: int
    period: int

    def __post_init__(self):
        if self.offset < 0 or self.period < 1:
            raise ValueError(f"bad progression AP({self.offset}, {self.period})")

    def __contains__(self, k: int) -> bool:
        return k >= self.offset and (k - self.offset) % self.period == 0

    def values(self, bound: int) -> Iterator[int]:
        return iter(range(self.offset, bound, self.period))


IndexSet = Union[Empty, Singleton, AP]

EMPTY = Empty()


def _crt(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    """Solve x = r1 (mod m1), x = r2 (mod m2). Returns (x mod lcm, lcm)."""
    g = gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    lcm = m1 // g * m2
    m1g, m2g = m1 // g, m2 // g
    # m1 * t = r2 - r1 (mod m2)  ->  t = ((r2 - r1)/g) * inv(m1/g) (mod m2/g)
    t = ((r2 - r1) // g) * pow(m1g, -1, m2g) % m2g if m2g > 1 else 0
    return (r1 + m1 * t) % lcm, lcm


def intersect_index(p: IndexSet, q: IndexSet) -> IndexSet:
    if isinstance(p, Empty) or isinstance(q, Empty):
        return EMPTY
    if isinstance(p, Singleton):
        return p if p.value in q else EMPTY
    if isinstance(q, Singleton):
        return q if q.value in p else EMPTY
    sol = _crt(p.offset, p.period, q.offset, q.period)
    if sol is None:
        return EMPTY
    x, lcm = sol
    lo = max(p.offset, q.offset)
    if x < lo:
        x += -(-(lo - x) // lcm) * lcm
    return AP(x, lcm)


def format_index(p: IndexSet, var: str = "m") -> str:
    """Render an exponent set as an expression in ``var`` (ranging over 0, 1, ...)."""
    if isinstance(p, Empty):
        return "{}"
    if isinstance(p, Singleton):
        return str(p.value)
    step = var if p.period == 1 else f"{p.period}{var}"
    return step if p.offset == 0 else f"{p.offset}+{step}"


def index_to_dict(p: IndexSet) -> dict:
    if isinstance(p, Empty):
        return {"kind": "empty"}
    if isinstance(p, Singleton):
        return {"kind": "singleton", "value": p.value}
    return {"kind": "ap", "offset": p.offset, "period": p.period}


def index_from_dict(d: dict) -> IndexSet:
    kind = d["kind"]
    if kind == "empty":
        return EMPTY
    if kind == "singleton":
        return Singleton(int(d["value"]))
    if kind == "ap":
        return AP(int(d["offset"]), int(d["period"]))
    raise ValueError(f"unknown index set kind {kind!r}")
