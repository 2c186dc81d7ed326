"""Self-contained invariant checks, run by ``cantorspace check --all``.

Each check is small enough to finish in well under a second and compares
the library against an independent computation (enumeration, a direct
sum, or a hand-verified value).
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Callable

from . import coding, core, dynamics, integration, measure, metric
from .core import BINARY, Cylinder, LevelSystem, SequenceDescriptor

BIN = LevelSystem.homogeneous(BINARY)

CHECKS: dict[str, Callable[[], bool]] = {}


def check(fn: Callable[[], bool]) -> Callable[[], bool]:
    CHECKS[fn.__name__] = fn
    return fn


def _random_descriptor(rng: random.Random, symbols=(0, 1), max_pre=3, max_per=3) -> SequenceDescriptor:
    pre = tuple(rng.choice(symbols) for _ in range(rng.randint(0, max_pre)))
    per = tuple(rng.choice(symbols) for _ in range(rng.randint(1, max_per)))
    return SequenceDescriptor(pre, per)


@check
def children_partition_parent() -> bool:
    for k in (1, 2, 3):
        system = LevelSystem.homogeneous(range(k))
        for d in range(4):
            for w in system.words(d):
                kids = core.cylinder_children(Cylinder(w), system)
                deep = [c.prefix for c in kids]
                if sorted(deep) != sorted(w + (s,) for s in range(k)):
                    return False
    return True


@check
def stage_matches_cylinder_images() -> bool:
    return all(
        [coding.cylinder_interval(w) for w in BIN.words(m)] == coding.stage_intervals(m)
        for m in range(8)
    )


@check
def tau_round_trip() -> bool:
    for n in range(1, 6):
        for split in range(n):
            for bits in itertools.product((0, 1), repeat=n):
                x = SequenceDescriptor(bits[:split], bits[split:])
                if coding.tau_decode(coding.tau(x)) != x:
                    return False
    return True


@check
def beta_round_trip() -> bool:
    rng = random.Random(1)
    for i in range(60):
        d = rng.randint(1, 10**6 if i < 10 else 10**3)
        q = Fraction(rng.randint(0, d), d)
        if coding.beta(coding.beta_decode(q)) != q:
            return False
    return True


@check
def ultrametric_inequality() -> bool:
    rng = random.Random(2)
    for _ in range(500):
        x, y, z = (_random_descriptor(rng) for _ in range(3))
        if metric.distance(x, z) > max(metric.distance(x, y), metric.distance(y, z)):
            return False
    return True


@check
def balls_are_cylinders() -> bool:
    pts = [SequenceDescriptor(w, (0,)) for w in BIN.words(4)]
    for c in pts:
        for m in range(5):
            cyl = metric.ball_to_cylinder(c, m)
            for y in pts:
                if core.cylinder_contains(cyl, y) != (metric.distance(c, y) <= Fraction(1, 2) ** m):
                    return False
    return True


@check
def op_table_verdicts() -> bool:
    z2 = dynamics.validate_op_table(dynamics.OpTable.cyclic_group(2))
    left = dynamics.validate_op_table(dynamics.OpTable.from_rows((0, 1), ((0, 0), (1, 1))))
    return (z2.associative and z2.is_group and left.associative and not left.has_identity)


@check
def termwise_continuity() -> bool:
    s = dynamics.TermwiseStructure.homogeneous(dynamics.OpTable.cyclic_group(2))
    return dynamics.locality_check(s, 2)


@check
def shift_preimages_round_trip() -> bool:
    rng = random.Random(3)
    for _ in range(50):
        y = _random_descriptor(rng)
        pre = dynamics.shift_preimages(y, BIN)
        if len(pre) != 2 or any(dynamics.shift_one_sided(x) != y for x in pre):
            return False
    return True


@check
def product_tree_consistent() -> bool:
    mu = measure.ProductMeasure.iid({0: Fraction(1, 3), 1: Fraction(1, 6), 2: Fraction(1, 2)})
    return measure.check_consistency(measure.product_to_tree(mu, 4)) == []


@check
def beta_pushforward_uniform() -> bool:
    mu = measure.ProductMeasure.uniform()
    for m in range(8):
        got = measure.pushforward_intervals(mu, "beta", m)
        if [iv for iv, _ in got] != [coding.Interval(Fraction(k, 2**m), Fraction(k + 1, 2**m)) for k in range(2**m)]:
            return False
        if any(v != Fraction(1, 2**m) for _, v in got):
            return False
    return True


@check
def integral_refinement_invariant() -> bool:
    rng = random.Random(4)
    mu = measure.ProductMeasure.bernoulli(Fraction(1, 3))
    for _ in range(20):
        m = rng.randint(0, 3)
        f = integration.StepFunction.from_callable(BIN, m, lambda w: Fraction(rng.randint(-5, 5), rng.randint(1, 5)))
        d = rng.randint(m, 5)
        if integration.integrate_step(f, mu) != integration.integrate_step(integration.refine_step(f, d), mu):
            return False
    return True


@check
def functional_round_trip() -> bool:
    mu = measure.product_to_tree(measure.ProductMeasure.bernoulli(Fraction(2, 7)), 4)
    got = integration.measure_from_functional(lambda f: integration.integrate_step(f, mu), 4, BIN)
    return got.masses == mu.masses


@check
def riemann_sum_of_beta() -> bool:
    mu = measure.ProductMeasure.uniform()
    omega = integration.ModulusFunction(lambda r: r)
    for m in range(8):
        value, bound = integration.approximate_integral(
            lambda w: coding.beta(integration.zero_extension(w, BIN)), omega, mu, m
        )
        if value != Fraction(1, 2) - Fraction(1, 2 ** (m + 1)) or abs(value - Fraction(1, 2)) > bound:
            return False
    return True


def run_all() -> list[tuple[str, bool, str]]:
    results = []
    for name, fn in CHECKS.items():
        try:
            results.append((name, bool(fn()), ""))
        except Exception as e:  # report, never abort the suite
            results.append((name, False, f"{type(e).__name__}: {e}"))
    return results
