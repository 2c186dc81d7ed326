import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cantorspace import (
    CantorSpaceError,
    Interval,
    SequenceDescriptor,
    SymbolError,
    beta,
    beta_decode,
    beta_expansions,
    cylinder_interval,
    dyadic_interval,
    stage_intervals,
    tau,
    tau_decode,
)
from cantorspace.coding import long_division

from conftest import descriptors
from oracles import digits, partial_series

S = SequenceDescriptor


def test_stage_examples():
    assert stage_intervals(0) == [Interval(0, 1)]
    assert stage_intervals(1) == [Interval(0, F(1, 3)), Interval(F(2, 3), 1)]
    assert stage_intervals(2) == [
        Interval(0, F(1, 9)),
        Interval(F(2, 9), F(1, 3)),
        Interval(F(2, 3), F(7, 9)),
        Interval(F(8, 9), 1),
    ]
    with pytest.raises(CantorSpaceError):
        stage_intervals(-1)


@pytest.mark.parametrize("j", range(9))
def test_stage_shape_and_nesting(j):
    st_j = stage_intervals(j)
    assert len(st_j) == 2**j
    assert all(iv.length == F(1, 3**j) for iv in st_j)
    assert all(a.hi < b.lo for a, b in zip(st_j, st_j[1:]))
    parents = stage_intervals(j - 1) if j else []
    for k, iv in enumerate(st_j):
        if parents:
            assert parents[k // 2].contains_interval(iv)


def test_tau_examples():
    assert tau(S((), (0,))) == 0
    assert tau(S((), (1,))) == 1
    assert tau(S((0,), (1,))) == F(1, 3)


def test_beta_examples():
    assert beta(S((), (0,))) == 0
    assert beta(S((1,), (0,))) == F(1, 2)
    assert beta(S((), (1, 0))) == F(2, 3)


def test_coding_maps_reject_non_binary():
    with pytest.raises(SymbolError):
        tau(S((), (2,)))


@given(descriptors(max_pre=6, max_per=6))
def test_tau_beta_against_truncated_series(x):
    n = 40
    # tail after n terms is at most 3**-n for tau and 2**-n for beta
    t = tau(x)
    assert 0 <= t - partial_series(x.pre, x.per, n, 3, 2) <= F(1, 3**n)
    b = beta(x)
    assert 0 <= b - partial_series(x.pre, x.per, n, 2) <= F(1, 2**n)


@given(descriptors(max_pre=5, max_per=5))
def test_tau_lands_in_every_stage(x):
    for j in range(7):
        assert any(tau(x) in iv for iv in stage_intervals(j))


@pytest.mark.parametrize(
    "q,expected",
    [(F(1, 4), S((), (0, 1))), (F(1, 3), S((0,), (1,))), (F(0), S((), (0,))), (F(1), S((), (1,)))],
)
def test_tau_decode_members(q, expected):
    x = tau_decode(q)
    assert x == expected
    assert tau(x) == q


def test_tau_decode_one_quarter_oracle():
    # ternary long division by hand: 1/4 = 0.020202...
    assert digits(F(1, 4), 3, 8) == [0, 2] * 4


@pytest.mark.parametrize("q", [F(1, 2), F(1, 9) + F(1, 27), F(4, 9), F(5, 6)])
def test_tau_decode_non_members(q):
    assert tau_decode(q) is None


def test_tau_decode_rejects_out_of_range():
    with pytest.raises(CantorSpaceError):
        tau_decode(F(4, 3))
    with pytest.raises(CantorSpaceError):
        tau_decode(-F(1, 9))


def test_tau_decode_non_members_by_enumeration():
    # every rational with denominator 3**4 lying in no stage-4 interval is outside C
    st4 = stage_intervals(4)
    for k in range(82):
        q = F(k, 81)
        if not any(q in iv for iv in st4):
            assert tau_decode(q) is None


@pytest.mark.parametrize(
    "q,expected",
    [(F(1, 2), S((1,), (0,))), (F(1), S((), (1,))), (F(1, 3), S((), (0, 1)))],
)
def test_beta_decode_examples(q, expected):
    x = beta_decode(q)
    assert (x.normalized().pre, x.normalized().per) == (expected.pre, expected.per)
    assert beta(x) == q


def test_beta_decode_one_third_oracle():
    assert digits(F(1, 3), 2, 8) == [0, 1] * 4


def test_beta_decode_rejects_out_of_range():
    with pytest.raises(CantorSpaceError):
        beta_decode(F(3, 2))


@given(st.integers(1, 10**6).flatmap(lambda d: st.tuples(st.integers(0, d), st.just(d))))
def test_beta_round_trip_random(nd):
    n, d = nd
    q = F(n, d)
    assert beta(beta_decode(q)) == q


def test_beta_round_trip_large_denominators():
    rng = random.Random(7)
    for _ in range(15):
        d = rng.randint(9 * 10**5, 10**6)
        q = F(rng.randint(0, d), d)
        assert beta(beta_decode(q)) == q


@given(st.integers(1, 3000).flatmap(lambda d: st.tuples(st.integers(0, d - 1), st.just(d))))
def test_long_division_matches_digit_oracle(nd):
    q = F(*nd)
    for base in (2, 3):
        x = long_division(q, base)
        assert list(x.prefix(30)) == digits(q, base, 30)


def test_beta_expansions():
    a, b = beta_expansions(F(3, 8))
    assert (a.pre, a.per) == ((0, 1, 1), (0,))
    assert (b.pre, b.per) == ((0, 1, 0), (1,))
    assert beta(a) == beta(b) == F(3, 8)
    assert len(beta_expansions(F(1, 3))) == 1
    assert len(beta_expansions(0)) == len(beta_expansions(1)) == 1


@pytest.mark.parametrize(
    "prefix,expected",
    [((), Interval(0, 1)), ((1,), Interval(F(2, 3), 1)), ((0, 1), Interval(F(2, 9), F(1, 3)))],
)
def test_cylinder_interval_examples(prefix, expected):
    assert cylinder_interval(prefix) == expected


def test_cylinder_interval_disjoint_at_depth_12():
    ivs = [cylinder_interval(w) for w in itertools.product((0, 1), repeat=12)]
    assert all(a.hi < b.lo for a, b in zip(ivs, ivs[1:]))


def test_monotonicity_depth_10():
    words = list(itertools.product((0, 1), repeat=10))  # lexicographic order
    taus = [tau(S(w, (0,))) for w in words]
    betas = [beta(S(w, (0,))) for w in words]
    assert all(a < b for a, b in zip(taus, taus[1:]))
    assert all(a < b for a, b in zip(betas, betas[1:]))


def test_dyadic_interval():
    assert dyadic_interval((1, 0, 1)) == Interval(F(5, 8), F(6, 8))
    assert dyadic_interval(()) == Interval(0, 1)
