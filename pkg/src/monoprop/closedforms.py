"""Closed forms for the successor algebra on the naturals and the parity pair.

(N, S) is infinite, so its justification sets are written down directly:
a = S^k(o) and b = S^l(o) means a = k + o and b = l + o, hence l - k = b - a and
0 <= o = a - k.  Every Jus set is a finite segment of the line l = k + (b - a).
"""

from __future__ import annotations

from .algebra import MonounaryAlgebra
from .justsets import JustSet, from_pairs, just_set
from .proportion import ProportionResult, Verdict, decide_arrow

__all__ = [
    "nat_difference_holds",
    "nat_just_set",
    "nat_arrow_holds",
    "nat_proportion_holds",
    "bool_algebra",
    "parity_holds",
    "parity_arrow_holds",
    "parity_proportion_holds",
]


def nat_difference_holds(a: int, b: int, c: int, d: int) -> bool:
    # signed: truncated subtraction on N would identify every a <= b
    return a - b == c - d


def nat_just_set(a: int, b: int) -> JustSet:
    """Jus(a -> b) in (N, S): {(k, k + b - a) : max(0, a - b) <= k <= a}."""
    if a < 0 or b < 0:
        raise ValueError("naturals only")
    return from_pairs((k, k + b - a) for k in range(max(0, a - b), a + 1))


def nat_arrow_holds(a: int, b: int, c: int, d: int) -> Verdict:
    """a->b |> c->d in (N, S).

    Jus(c->d') lies on the line of slope d' - c, so only d' = c + b - a can meet
    Jus(a->b) at all; scanning that candidate and d itself is exhaustive.
    """
    U, V = nat_just_set(a, b), nat_just_set(c, d)
    candidates = dict.fromkeys((max(0, c + b - a), d))
    return decide_arrow(U, V, ((x, nat_just_set(c, x)) for x in candidates))


def nat_proportion_holds(a: int, b: int, c: int, d: int) -> ProportionResult:
    vs = (
        nat_arrow_holds(a, b, c, d),
        nat_arrow_holds(b, a, d, c),
        nat_arrow_holds(c, d, a, b),
        nat_arrow_holds(d, c, b, a),
    )
    return ProportionResult(all(v.holds for v in vs), vs)


def bool_algebra() -> MonounaryAlgebra:
    """({0_2, 1_2}, S) with S swapping the two values."""
    return MonounaryAlgebra((1, 0), ("0_2", "1_2"))


_BOOL = bool_algebra()


def _check_bool(*xs: int) -> None:
    for x in xs:
        if x not in (0, 1):
            raise ValueError(f"{x!r} is not an element of the two-element algebra")


def parity_holds(a: int, b: int, c: int, d: int) -> bool:
    _check_bool(c, d)
    even = (b - a) % 2 == 0
    return (c == d and even) or (c != d and not even)


def parity_arrow_holds(a: int, b: int, c: int, d: int) -> Verdict:
    """a->b |> c->d for the ordered pair ((N, S), ({0_2, 1_2}, S))."""
    _check_bool(c, d)
    U, V = nat_just_set(a, b), just_set(_BOOL, c, d)
    return decide_arrow(U, V, ((x, just_set(_BOOL, c, x)) for x in (0, 1)))


def _bool_to_nat_arrow(c: int, d: int, a: int, b: int) -> Verdict:
    """c->d |> a->b with c, d in the two-element algebra and a, b in N.

    Candidates b' with b' != b give sets on a different line than any nonempty
    intersection with Jus(a->b), so they can never dominate it; scanning
    [0, a + b + 1] covers b with room to spare.
    """
    U, V = just_set(_BOOL, c, d), nat_just_set(a, b)
    return decide_arrow(U, V, ((x, nat_just_set(a, x)) for x in range(a + b + 2)))


def parity_proportion_holds(a: int, b: int, c: int, d: int) -> ProportionResult:
    _check_bool(c, d)
    vs = (
        parity_arrow_holds(a, b, c, d),
        parity_arrow_holds(b, a, d, c),
        _bool_to_nat_arrow(c, d, a, b),
        _bool_to_nat_arrow(d, c, b, a),
    )
    return ProportionResult(all(v.holds for v in vs), vs)
