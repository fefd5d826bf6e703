import itertools

import pytest

from monoprop.algebra import orbit_info
from monoprop.closedforms import (
    bool_algebra,
    nat_arrow_holds,
    nat_difference_holds,
    nat_just_set,
    nat_proportion_holds,
    parity_holds,
    parity_proportion_holds,
)
from monoprop.justsets import from_pairs, equal, just_set
from monoprop.proportion import Reason
from tests import oracles


def test_difference_examples():
    assert nat_difference_holds(2, 4, 5, 7)
    assert nat_difference_holds(3, 8, 3, 8)
    assert not nat_difference_holds(0, 1, 1, 0)


@pytest.mark.parametrize(
    "a, b, pairs",
    [(1, 2, [(0, 1), (1, 2)]), (2, 1, [(1, 0), (2, 1)]), (0, 0, [(0, 0)]), (0, 3, [(0, 3)])],
)
def test_nat_just_set(a, b, pairs):
    assert equal(nat_just_set(a, b), from_pairs(pairs))


@pytest.mark.parametrize("a, b", list(itertools.product(range(7), repeat=2)))
def test_nat_just_set_matches_origins(a, b):
    j = nat_just_set(a, b)
    assert {(k, l) for k in range(20) for l in range(20) if (k, l) in j} == oracles.nat_pairs(a, b)


def test_nat_arrow_examples():
    assert nat_arrow_holds(2, 4, 5, 7).holds
    v = nat_arrow_holds(2, 4, 5, 8)
    assert not v.holds and v.reason is Reason.EMPTY_INTERSECTION
    assert nat_proportion_holds(2, 4, 5, 7).holds
    assert not nat_proportion_holds(2, 4, 5, 8).holds


def test_nat_arrow_matches_wide_scan():
    for q in itertools.product(range(7), repeat=4):
        assert nat_arrow_holds(*q).holds == oracles.nat_arrow(*q)


def test_bool_algebra():
    B = bool_algebra()
    assert B.succ == (1, 0)
    assert tuple(orbit_info(B, 0))[:2] == (0, 2)
    j = just_set(B, 0, 0)
    for k, l in itertools.product(range(8), repeat=2):
        assert ((k, l) in j) == ((k - l) % 2 == 0)


@pytest.mark.parametrize(
    "q, expected",
    [((1, 3, 0, 0), True), ((0, 1, 0, 1), True), ((0, 1, 0, 0), False), ((1, 2, 0, 0), False)],
)
def test_parity(q, expected):
    assert parity_holds(*q) == expected
    assert parity_proportion_holds(*q).holds == expected


def test_parity_rejects_non_boolean():
    with pytest.raises(ValueError):
        parity_holds(0, 1, 0, 2)


def test_parity_engine_matches_naive_pair():
    B = bool_algebra().succ
    # (N, S) truncated to 0..15 loses nothing for a, b <= 4: origins sit below a, b
    for a, b in itertools.product(range(5), repeat=2):
        for c, d in itertools.product(range(2), repeat=2):
            U = oracles.nat_pairs(a, b)
            V = oracles.jus_pairs(B, c, d, 16)
            W = U & V
            naive = bool(W) and not any(W < (U & oracles.jus_pairs(B, c, x, 16)) for x in (0, 1))
            assert parity_proportion_holds(a, b, c, d).verdicts[0].holds == naive
