"""Middle-thirds stages and the ternary/binary coding maps, in exact rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    CantorSpaceError,
    SequenceDescriptor,
    SymbolError,
)

BinaryPoint = SequenceDescriptor  # descriptor with every symbol in {0, 1}


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if type(self.lo) is not Fraction:
            object.__setattr__(self, "lo", Fraction(self.lo))
        if type(self.hi) is not Fraction:
            object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise CantorSpaceError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def trusted(cls, lo: Fraction, hi: Fraction) -> Interval:
        """Skip coercion and ordering checks for endpoints already known good."""
        iv = object.__new__(cls)
        object.__setattr__(iv, "lo", lo)
        object.__setattr__(iv, "hi", hi)
        return iv

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, q) -> bool:
        return self.lo <= q <= self.hi

    def contains_interval(self, other: Interval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


StageInterval = Interval


def stage_intervals(j: int, budget: int = DEFAULT_BUDGET) -> list[Interval]:
    """The 2**j closed intervals of the j-th middle-thirds stage, left to right.

    Built by recursively deleting open middle thirds, independently of the
    coding map.
    """
    if j < 0:
        raise CantorSpaceError(f"stage index must be nonnegative, got {j}")
    if 2**j > budget:
        raise BudgetExceeded(f"stage {j} has 2**{j} intervals, budget is {budget}")
    stage = [Interval(Fraction(0), Fraction(1))]
    for _ in range(j):
        nxt = []
        for iv in stage:
            third = iv.length / 3
            nxt.append(Interval(iv.lo, iv.lo + third))
            nxt.append(Interval(iv.hi - third, iv.hi))
        stage = nxt
    return stage


def _check_binary(x: SequenceDescriptor) -> None:
    bad = x.symbols() - {0, 1}
    if bad:
        raise SymbolError(f"binary point has non-binary symbols {sorted(map(repr, bad))}")


def _digits_to_int(digits: tuple, base: int) -> int:
    if not digits:
        return 0
    if base <= 10:
        return int("".join(map(str, digits)), base)
    out = 0
    for d in digits:
        out = out * base + d
    return out


def expansion_value(x: SequenceDescriptor, base: int, digit_scale: int = 1) -> Fraction:
    """Exact value of sum_l digit_scale * x_l / base**l.

    With k = |pre| and p = |per| the value is
    (H * (base**p - 1) + P) / ((base**p - 1) * base**k), where H and P read the
    preperiod and period as base-``base`` integers; the periodic tail is the
    closed-form geometric series.
    """
    k, p = len(x.pre), len(x.per)
    head = _digits_to_int(x.pre, base)
    block = _digits_to_int(x.per, base)
    repunit = base**p - 1
    return Fraction(digit_scale * (head * repunit + block), repunit * base**k)


def tau(x: BinaryPoint) -> Fraction:
    """Point of the Cantor set with ternary digits 2 * x_l."""
    _check_binary(x)
    return expansion_value(x, 3, 2)


def beta(x: BinaryPoint) -> Fraction:
    """Real number with binary digits x_l."""
    _check_binary(x)
    return expansion_value(x, 2)


def _check_unit(q) -> Fraction:
    q = Fraction(q)
    if not 0 <= q <= 1:
        raise CantorSpaceError(f"{q} is outside [0, 1]")
    return q


def long_division(q: Fraction, base: int) -> SequenceDescriptor:
    """Greedy base-``base`` digits of q in [0, 1), as an eventually periodic descriptor.

    Remainders live in range(denominator), so one must repeat; the first
    repeat closes the period, and it is minimal because each remainder fixes
    the value of the remaining tail. Terminating expansions end in period (0,).
    """
    if not 0 <= q < 1:
        raise CantorSpaceError(f"long division needs 0 <= q < 1, got {q}")
    n, d = q.numerator, q.denominator
    seen: dict[int, int] = {}
    digits: list[int] = []
    r = n
    while r not in seen:
        seen[r] = len(digits)
        r *= base
        digits.append(r // d)
        r %= d
    start = seen[r]
    return SequenceDescriptor(digits[:start], digits[start:]).normalized()


def tau_decode(q) -> BinaryPoint | None:
    """Binary point x with tau(x) == q, or None when q is not in the Cantor set.

    When q has two ternary expansions (q = a/3**k) the one using only the
    digits 0 and 2 is the candidate, e.g. 1/3 = 0.0222... rather than 0.1.
    """
    q = _check_unit(q)
    if q == 1:
        return SequenceDescriptor((), (1,))
    digits = long_division(q, 3)
    if 1 in digits.symbols() and digits.per == (0,):
        # terminating ...d 0 0 ...: rewrite a trailing 1 as 0 2 2 2 ...
        pre = digits.pre
        if pre and pre[-1] == 1:
            digits = SequenceDescriptor(pre[:-1] + (0,), (2,))
    if 1 in digits.symbols():
        return None
    return SequenceDescriptor(
        tuple(d // 2 for d in digits.pre), tuple(d // 2 for d in digits.per)
    ).normalized()


def beta_decode(q) -> BinaryPoint:
    """Canonical binary expansion: eventually 0 for dyadic q < 1, all ones for q = 1."""
    q = _check_unit(q)
    if q == 1:
        return SequenceDescriptor((), (1,))
    return long_division(q, 2)


def is_dyadic(q) -> bool:
    d = Fraction(q).denominator
    return d & (d - 1) == 0


def beta_expansions(q) -> list[BinaryPoint]:
    """Every binary expansion of q: two for dyadic q in (0, 1), otherwise one.

    The canonical (eventually 0) expansion comes first; the other ends in 1s.
    """
    x = beta_decode(q)
    q = Fraction(q)
    if not (0 < q < 1 and is_dyadic(q)):
        return [x]
    # canonical form is w 1 0 0 ...; its twin is w 0 1 1 ...
    pre = x.pre
    return [x, SequenceDescriptor(pre[:-1] + (0,), (1,))]


def cylinder_interval(prefix: Iterable[int]) -> Interval:
    """Image under tau of the cylinder with this binary prefix."""
    prefix = tuple(prefix)
    return Interval(
        tau(SequenceDescriptor(prefix, (0,))),
        tau(SequenceDescriptor(prefix, (1,))),
    )


def dyadic_interval(prefix: Iterable[int]) -> Interval:
    """Image under beta of the cylinder with this binary prefix."""
    prefix = tuple(prefix)
    k = 0
    for b in prefix:
        k = 2 * k + b
    scale = 2 ** len(prefix)
    return Interval(Fraction(k, scale), Fraction(k + 1, scale))
