import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from monoprop.algebra import MonounaryAlgebra, enumerate_algebras
from monoprop.indexset import AP, Singleton
from monoprop.justsets import (
    EMPTY_JUS,
    JustSet,
    Rect,
    Window,
    equal,
    format_justset,
    from_pairs,
    intersect,
    is_empty,
    just_set,
    justset_from_dict,
    justset_to_dict,
    strict_subset,
    subset,
    window_bound,
)
from tests import oracles

sides = st.one_of(
    st.builds(Singleton, st.integers(0, 8)),
    st.builds(AP, st.integers(0, 8), st.integers(1, 4)),
)
rects = st.builds(Rect, sides, sides)
justsets = st.lists(rects, max_size=3).map(lambda rs: JustSet(tuple(rs)))


def pairs_below(j, K):
    return {(k, l) for k in range(K) for l in range(K) if (k, l) in j}


def test_example_sets(ex):
    # 1 <-> 2, 3 -> 4 -> 4 with indices 0..3
    assert format_justset(just_set(ex, 3, 2)) == "{S^(1+m)(z) -> z}"
    assert is_empty(just_set(ex, 0, 2))
    assert equal(just_set(ex, 1, 0), just_set(ex, 0, 1))
    assert (1, 0) in just_set(ex, 1, 0) and (3, 0) in just_set(ex, 1, 0)
    assert (2, 0) not in just_set(ex, 1, 0)


def test_fixpoint_is_everything(fixpoint):
    j = just_set(fixpoint, 0, 0)
    assert pairs_below(j, 10) == {(k, l) for k in range(10) for l in range(10)}


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
def test_just_set_matches_explicit_walks(succ):
    A = MonounaryAlgebra(tuple(succ))
    K = oracles.bound(A.succ, A.succ)
    for a, b in itertools.product(range(A.size), repeat=2):
        assert pairs_below(just_set(A, a, b), K) == oracles.jus_pairs(A.succ, a, b, K)


def test_window_covers_all_algebras_of_size_four():
    # the per-algebra window must decide strict inclusion exactly like the generic one
    for A in enumerate_algebras(4):
        w = Window.for_algebras(A)
        sets = [just_set(A, a, b) for a in range(4) for b in range(4)]
        masks = [w.mask(j) for j in sets]
        for j1, m1 in zip(sets[:6], masks[:6]):
            for j2, m2 in zip(sets, masks):
                assert (m1 & ~m2 == 0) == subset(j1, j2)


def test_window_singleton_regression():
    # {k >= 0} x {0} vs {0} x {0}: the window must not fold k = M back onto 0
    J1 = JustSet((Rect(AP(0, 1), Singleton(0)),))
    J2 = JustSet((Rect(Singleton(0), Singleton(0)),))
    assert not subset(J1, J2)
    assert strict_subset(J2, J1)
    B, M = window_bound([J1, J2])
    assert B >= 1


@settings(max_examples=300, deadline=None)
@given(justsets, justsets)
def test_window_lemma(j1, j2):
    B, M = window_bound([j1, j2])
    K = B + 2 * M
    p1, p2 = pairs_below(j1, K), pairs_below(j2, K)
    assert subset(j1, j2) == (p1 <= p2)
    assert equal(j1, j2) == (p1 == p2)
    assert strict_subset(j1, j2) == (p1 < p2)
    # membership is periodic past B with period M
    for k, l in itertools.product(range(B, B + M), repeat=2):
        assert ((k, l) in j1) == ((k + M, l) in j1) == ((k, l + M) in j1)


@settings(max_examples=200, deadline=None)
@given(justsets, justsets, justsets)
def test_intersection_laws(j1, j2, j3):
    K = 30
    assert pairs_below(intersect(j1, j2), K) == pairs_below(j1, K) & pairs_below(j2, K)
    assert equal(intersect(j1, j2), intersect(j2, j1))
    assert equal(intersect(intersect(j1, j2), j3), intersect(j1, intersect(j2, j3)))
    assert subset(intersect(j1, j2), j1)


@given(justsets)
def test_dict_roundtrip(j):
    assert equal(justset_from_dict(justset_to_dict(j)), j)


def test_from_pairs_and_format():
    j = from_pairs([(1, 0), (2, 1), (1, 0)])
    assert len(j.rects) == 2
    assert format_justset(j) == "{S(z) -> z} u {S^2(z) -> S(z)}"
    assert format_justset(EMPTY_JUS) == "{}"
