"""Deliberately naive reference implementations used only by the tests.

Nothing here imports the decision code under test: justification sets are
explicit sets of pairs obtained by walking the successor function.
"""

from __future__ import annotations

from math import lcm


def walk(succ, o, K):
    seq = [o]
    for _ in range(K - 1):
        seq.append(succ[seq[-1]])
    return seq


def cycle_lcm(*tables) -> int:
    m = 1
    for succ in tables:
        for o in range(len(succ)):
            # after |A| steps every walk is on its cycle
            x = walk(succ, o, len(succ) + 1)[-1]
            m = lcm(m, _period(succ, x))
    return m


def _period(succ, x):
    y, p = succ[x], 1
    while y != x:
        y, p = succ[y], p + 1
    return p


def jus_pairs(succ, a, b, K):
    """All (k, l) with k, l < K and a = S^k(o), b = S^l(o) for some origin o."""
    out = set()
    for o in range(len(succ)):
        seq = walk(succ, o, K)
        ks = [k for k, x in enumerate(seq) if x == a]
        ls = [l for l, x in enumerate(seq) if x == b]
        out.update((k, l) for k in ks for l in ls)
    return frozenset(out)


def bound(left, right):
    return max(len(left), len(right)) + 2 * cycle_lcm(left, right)


def arrow(left, right, a, b, c, d, K=None):
    """a->b |> c->d by explicit set comparison on a truncation of size K."""
    K = K or bound(left, right)
    U = jus_pairs(left, a, b, K)
    V = jus_pairs(right, c, d, K)
    if not U and not V:
        return True
    W = U & V
    if not W:
        return False
    return not any(W < (U & jus_pairs(right, c, x, K)) for x in range(len(right)))


def proportion(left, right, a, b, c, d):
    K = bound(left, right)
    return (
        arrow(left, right, a, b, c, d, K)
        and arrow(left, right, b, a, d, c, K)
        and arrow(right, left, c, d, a, b, K)
        and arrow(right, left, d, c, b, a, K)
    )


# --- (N, S) -------------------------------------------------------------------


def nat_pairs(a, b):
    """Jus(a -> b) in (N, S) by enumerating origins o <= min(a, b)."""
    return frozenset((a - o, b - o) for o in range(min(a, b) + 1))


def nat_arrow(a, b, c, d):
    """Scan every d' <= a + b + c + 1; larger d' only shift the line further away."""
    U, V = nat_pairs(a, b), nat_pairs(c, d)
    W = U & V
    if not W:
        return False
    return not any(W < (U & nat_pairs(c, x)) for x in range(a + b + c + 2))


def nat_proportion(a, b, c, d):
    return nat_arrow(a, b, c, d) and nat_arrow(b, a, d, c) and nat_arrow(c, d, a, b) and nat_arrow(d, c, b, a)
