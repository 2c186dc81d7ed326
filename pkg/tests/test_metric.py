from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cantorspace import (
    EQUAL,
    CantorSpaceError,
    Cylinder,
    SequenceDescriptor,
    UltrametricParams,
    agreement_depth,
    ball_to_cylinder,
    cylinder_contains,
    descriptor_equal,
    distance,
    two_sided_distance,
)
from cantorspace.core import BiSequenceDescriptor

from conftest import descriptors
from oracles import unroll

S = SequenceDescriptor
ratios = st.fractions(min_value=F(1, 100), max_value=F(99, 100)).filter(lambda r: 0 < r < 1)


def test_agreement_depth_examples():
    x = S((0, 1), (0,))
    assert agreement_depth(x, x) is EQUAL
    assert agreement_depth(S((), (0,)), S((), (1,))) == 0
    # 0,1,0,0,... against 0,1,0,1,...: unrolled below
    assert unroll((0, 1), (0,), 4) == [0, 1, 0, 0]
    assert unroll((), (0, 1), 4) == [0, 1, 0, 1]
    assert agreement_depth(x, S((), (0, 1))) == 3


@given(descriptors(), descriptors())
def test_agreement_depth_against_unroll(x, y):
    n = 60
    a, b = unroll(x.pre, x.per, n), unroll(y.pre, y.per, n)
    got = agreement_depth(x, y)
    if a == b:
        assert got is EQUAL
    else:
        assert got == next(i for i in range(n) if a[i] != b[i])


def test_distance_examples():
    x = S((1,), (0,))
    assert distance(x, x) == 0
    assert distance(S((), (0,)), S((), (1,))) == 1
    assert distance(S((0, 1, 1), (0,)), S((0, 1, 1), (1,))) == F(1, 8)
    assert distance(S((0, 1, 1), (0,)), S((0, 1, 1), (1,)), UltrametricParams(F(1, 3))) == F(1, 27)


def test_params_validation():
    for bad in (0, 1, F(3, 2), -F(1, 2)):
        with pytest.raises(CantorSpaceError):
            UltrametricParams(bad)


@given(descriptors(), descriptors(), descriptors(), ratios)
def test_ultrametric_inequality(x, y, z, r):
    p = UltrametricParams(r)
    assert distance(x, z, p) <= max(distance(x, y, p), distance(y, z, p))


@given(descriptors(), descriptors())
def test_symmetry_and_identity(x, y):
    assert distance(x, y) == distance(y, x)
    assert (distance(x, y) == 0) == descriptor_equal(x, y)


def test_ball_to_cylinder_examples():
    assert ball_to_cylinder(S((), (1,)), 0) == Cylinder()
    assert ball_to_cylinder(S((), (1,)), 2) == Cylinder((1, 1))
    with pytest.raises(CantorSpaceError):
        ball_to_cylinder(S((), (1,)), -1)


@given(descriptors(), descriptors(), st.integers(0, 8), ratios)
def test_ball_membership_is_cylinder_membership(c, y, m, r):
    p = UltrametricParams(r)
    assert cylinder_contains(ball_to_cylinder(c, m), y) == (distance(c, y, p) <= r**m)


@given(descriptors(), descriptors(), descriptors(), descriptors(), ratios, ratios)
def test_distance_order_independent_of_ratio(a, b, c, d, r1, r2):
    p1, p2 = UltrametricParams(r1), UltrametricParams(r2)
    assert (distance(a, b, p1) < distance(c, d, p1)) == (distance(a, b, p2) < distance(c, d, p2))


def B(left, center, right, origin=0):
    return BiSequenceDescriptor(tuple(left), tuple(center), tuple(right), origin)


def test_two_sided_examples():
    x = B((0,), (1, 2, 1), (0,), -1)
    assert two_sided_distance(x, x) == 0
    y = B((0,), (1, 0, 1), (0,), -1)  # differs at level 0 only
    assert two_sided_distance(x, y) == 1
    # agree on |l| <= 2, differ at l = 3
    u = B((0,), (), (0,))
    v = B((0,), (1,), (0,), 3)
    assert two_sided_distance(u, v) == F(1, 8)
    w = B((0,), (1,), (0,), -3)  # difference at l = -3 counts the same
    assert two_sided_distance(u, w) == F(1, 8)


bi_points = st.builds(
    B,
    st.lists(st.sampled_from((0, 1)), min_size=1, max_size=3),
    st.lists(st.sampled_from((0, 1)), max_size=5),
    st.lists(st.sampled_from((0, 1)), min_size=1, max_size=3),
    st.integers(-4, 4),
)


@given(bi_points, bi_points, bi_points)
def test_two_sided_ultrametric(x, y, z):
    assert two_sided_distance(x, z) <= max(two_sided_distance(x, y), two_sided_distance(y, z))
    assert two_sided_distance(x, y) == two_sided_distance(y, x)


@given(bi_points, bi_points, st.integers(0, 6))
def test_two_sided_balls_are_symmetric_windows(x, y, m):
    # radius ratio**(1 + m) <=> agreement on -m..m
    in_ball = two_sided_distance(x, y) <= F(1, 2) ** (1 + m)
    assert in_ball == (x.window(-m, m) == y.window(-m, m))


@given(bi_points, bi_points)
def test_two_sided_distance_against_window_scan(x, y):
    for k in range(40):
        if x.window(-k, k) != y.window(-k, k):
            assert two_sided_distance(x, y) == F(1, 2) ** k
            return
    assert two_sided_distance(x, y) == 0
