import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cantorspace import (
    Alphabet,
    BudgetExceeded,
    Cylinder,
    FinitePointMeasure,
    Interval,
    LevelSystem,
    ProductMeasure,
    TreeMeasure,
    check_consistency,
    clopen_mass,
    cylinder_children,
    cylinder_mass,
    product_to_tree,
    pushforward_intervals,
    stage_intervals,
)
from cantorspace.measure import DepthError, MeasureError, finite_to_tree

from builders import random_consistent_tree, random_weights
from conftest import BIN
from oracles import product_mass

UNIFORM = ProductMeasure.uniform()


def test_cylinder_mass_examples():
    assert cylinder_mass(UNIFORM, Cylinder((0, 1))) == F(1, 4)
    assert cylinder_mass(UNIFORM, Cylinder()) == 1
    mu = ProductMeasure.bernoulli(F(2, 3))  # weights (1/3, 2/3)
    assert cylinder_mass(mu, (1, 1)) == F(4, 9) == product_mass({0: F(1, 3), 1: F(2, 3)}, (1, 1))


def test_tree_total_and_depth_errors():
    tree = product_to_tree(UNIFORM, 2)
    assert cylinder_mass(tree, ()) == 1
    with pytest.raises(DepthError):
        cylinder_mass(tree, (0, 0, 0))


def test_product_to_tree_uniform_depth_2():
    tree = product_to_tree(UNIFORM, 2)
    assert tree.masses == {
        (): 1, (0,): F(1, 2), (1,): F(1, 2),
        (0, 0): F(1, 4), (0, 1): F(1, 4), (1, 0): F(1, 4), (1, 1): F(1, 4),
    }


def test_single_symbol_alphabet_tree():
    tree = product_to_tree(ProductMeasure.iid({"a": F(3, 7)}), 4)
    assert [tree.mass(("a",) * d) for d in range(5)] == [1] + [F(3, 7) ** d for d in range(1, 5)]
    mu = ProductMeasure.iid({"a": 1})
    assert all(v == 1 for v in product_to_tree(mu, 5).masses.values())


def test_normalized_levels_give_probability_tree():
    rng = random.Random(0)
    mu = ProductMeasure(cycle=tuple({s: w for s, w in zip(range(3), random_weights(rng, 3))} for _ in range(2)))
    assert product_to_tree(mu, 4).total == 1


def test_constructor_validation():
    with pytest.raises(MeasureError):
        ProductMeasure.iid({0: F(-1, 2), 1: F(3, 2)})
    with pytest.raises(MeasureError):
        ProductMeasure.iid({0: F(1, 2), 1: F(1, 3)}, probability=True)
    with pytest.raises(MeasureError):
        ProductMeasure.iid({0: 0, 1: 1}, positive=True)
    with pytest.raises(MeasureError):
        TreeMeasure(BIN, 1, {(): 1, (0,): F(1, 2)})  # missing (1,)
    with pytest.raises(MeasureError):
        TreeMeasure(BIN, 0, {(): F(1, 2)}, probability=True)


def test_finite_point_measure():
    system = LevelSystem.explicit([Alphabet((0, 1)), Alphabet(("a", "b", "c"))])
    masses = {(0, "a"): F(1, 6), (1, "c"): F(1, 2), (0, "b"): F(1, 3)}
    mu = FinitePointMeasure(system, 2, masses, probability=True)
    assert mu.mass((0,)) == F(1, 2)
    assert mu.mass(()) == 1
    assert mu.mass((1, "b")) == 0
    with pytest.raises(MeasureError):
        FinitePointMeasure(system, 2, masses, positive=True)
    with pytest.raises(MeasureError):
        FinitePointMeasure(system, 2, {(0, "a"): F(1, 2)}, probability=True)
    tree = finite_to_tree(mu)
    assert check_consistency(tree) == []
    assert tree.mass((0,)) == F(1, 2)
    with pytest.raises(DepthError):
        mu.mass((0, "a", 0))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_product_to_tree_consistent_exhaustive(k):
    rng = random.Random(k)
    for D in range(7):
        for weights in ([F(1, k)] * k, random_weights(rng, k), random_weights(rng, k, zeros=True)):
            mu = ProductMeasure.iid(dict(zip(range(k), weights)))
            assert check_consistency(product_to_tree(mu, D)) == []


def test_consistency_examples():
    assert check_consistency(TreeMeasure(BIN, 0, {(): F(5)})) == []
    tree = product_to_tree(UNIFORM, 3)
    masses = dict(tree.masses)
    masses[(1, 0, 1)] += F(1, 1000)
    assert check_consistency(TreeMeasure(BIN, 3, masses)) == [(1, 0)]


def test_unnormalized_product_is_flagged():
    mu = ProductMeasure.iid({0: F(1, 2), 1: F(1, 3)})
    assert not mu.is_consistent
    assert check_consistency(product_to_tree(mu, 2)) == [(), (0,), (1,)]


def test_interior_perturbation_flags_node_and_parent():
    tree = product_to_tree(UNIFORM, 3)
    masses = dict(tree.masses)
    masses[(0, 1)] += F(1, 1000)
    assert sorted(check_consistency(TreeMeasure(BIN, 3, masses))) == [(0,), (0, 1)]


def test_budget():
    with pytest.raises(BudgetExceeded):
        product_to_tree(UNIFORM, 12, budget=1000)
    with pytest.raises(BudgetExceeded):
        pushforward_intervals(UNIFORM, "beta", 11, budget=1000)


def test_clopen_examples():
    c = Cylinder((0, 1))
    assert clopen_mass(UNIFORM, cylinder_children(c, BIN)) == cylinder_mass(UNIFORM, c)
    assert clopen_mass(UNIFORM, [Cylinder((0,)), Cylinder((0, 1))]) == F(1, 2)
    assert clopen_mass(UNIFORM, []) == 0


@given(st.lists(st.lists(st.sampled_from((0, 1, 2)), max_size=3).map(tuple), max_size=6), st.randoms())
def test_clopen_mass_presentation_invariant(prefixes, rnd):
    mu = ProductMeasure.iid({0: F(1, 5), 1: F(3, 10), 2: F(1, 2)})
    system = mu.system
    # oracle: sum the masses of depth-3 words lying in the union
    inside = [w for w in system.words(3) if any(w[: len(p)] == p for p in prefixes)]
    expected = sum((product_mass(mu.cycle[0], w) for w in inside), F(0))
    assert clopen_mass(mu, prefixes) == expected
    redundant = prefixes + [p + (s,) for p in prefixes if len(p) < 3 for s in (0, 2)]
    rnd.shuffle(redundant)
    assert clopen_mass(mu, redundant) == expected


@pytest.mark.parametrize("k", [2, 3])
def test_iid_shift_invariance(k):
    rng = random.Random(10 + k)
    weights = dict(zip(range(k), random_weights(rng, k)))
    mu = ProductMeasure.iid(weights)
    for d in range(6):
        for w in mu.system.words(d):
            assert sum(cylinder_mass(mu, (s,) + w) for s in range(k)) == cylinder_mass(mu, w)


def test_pushforward_beta_small():
    got = pushforward_intervals(UNIFORM, "beta", 3)
    assert got == [(Interval(F(k, 8), F(k + 1, 8)), F(1, 8)) for k in range(8)]


def test_pushforward_tau_matches_stages():
    for j in range(6):
        got = pushforward_intervals(UNIFORM, "tau", j)
        assert [iv for iv, _ in got] == stage_intervals(j)
        assert all(v == F(1, 2**j) for _, v in got)


def test_pushforward_point_mass_tau():
    D = 3
    masses = {w: F(int(all(s == 0 for s in w))) for d in range(D + 1) for w in itertools.product((0, 1), repeat=d)}
    tree = TreeMeasure(BIN, D, masses)
    got = pushforward_intervals(tree, "tau", D)
    assert got[0] == (stage_intervals(D)[0], 1)
    assert all(v == 0 for _, v in got[1:])


def test_pushforward_beta_non_uniform():
    mu = ProductMeasure.bernoulli(F(1, 3))
    got = pushforward_intervals(mu, "beta", 4)
    assert sum(v for _, v in got) == 1
    for (iv, v), w in zip(got, itertools.product((0, 1), repeat=4)):
        assert iv.lo == sum(F(b, 2**l) for l, b in enumerate(w, 1))
        assert v == product_mass({0: F(2, 3), 1: F(1, 3)}, w)


def test_pushforward_beta_reordered_alphabet():
    mu = ProductMeasure.iid({1: F(1, 4), 0: F(3, 4)})
    got = pushforward_intervals(mu, "beta", 2)
    by_lo = {iv.lo: v for iv, v in got}
    assert by_lo == {0: F(9, 16), F(1, 4): F(3, 16), F(1, 2): F(3, 16), F(3, 4): F(1, 16)}


def test_pushforward_needs_binary():
    with pytest.raises(Exception):
        pushforward_intervals(ProductMeasure.uniform((0, 1, 2)), "tau", 2)


def test_random_consistent_trees_are_consistent():
    rng = random.Random(3)
    for _ in range(20):
        assert check_consistency(random_consistent_tree(rng, BIN, 4)) == []
