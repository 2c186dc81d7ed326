"""Ultrametrics whose closed balls are exactly the cylinders."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    BiSequenceDescriptor,
    CantorSpaceError,
    Cylinder,
    SequenceDescriptor,
    bi_first_difference,
    first_difference,
)


class Agreement(enum.Enum):
    EQUAL = "EQUAL"


EQUAL = Agreement.EQUAL


@dataclass(frozen=True)
class UltrametricParams:
    ratio: Fraction = Fraction(1, 2)

    def __post_init__(self):
        object.__setattr__(self, "ratio", Fraction(self.ratio))
        if not 0 < self.ratio < 1:
            raise CantorSpaceError(f"ratio must lie in (0, 1), got {self.ratio}")


DEFAULT_PARAMS = UltrametricParams()


def agreement_depth(x: SequenceDescriptor, y: SequenceDescriptor) -> int | Agreement:
    """Largest m such that x and y agree on levels 1..m, or EQUAL."""
    l = first_difference(x, y)
    return EQUAL if l is None else l - 1


def distance(x: SequenceDescriptor, y: SequenceDescriptor, p: UltrametricParams = DEFAULT_PARAMS) -> Fraction:
    m = agreement_depth(x, y)
    if m is EQUAL:
        return Fraction(0)
    return p.ratio**m


def ball_to_cylinder(center: SequenceDescriptor, m: int) -> Cylinder:
    """The closed ball of radius ratio**m about center, as a cylinder."""
    if m < 0:
        raise CantorSpaceError(f"ball depth must be nonnegative, got {m}")
    return Cylinder(center.prefix(m))


def in_ball(center: SequenceDescriptor, y: SequenceDescriptor, radius: Fraction, p: UltrametricParams = DEFAULT_PARAMS) -> bool:
    return distance(center, y, p) <= radius


def two_sided_distance(
    x: BiSequenceDescriptor, y: BiSequenceDescriptor, p: UltrametricParams = DEFAULT_PARAMS
) -> Fraction:
    """ratio**(1 + M) where M is the largest m >= -1 with agreement on |l| <= m.

    Differing at level 0 gives distance 1; the ball of radius ratio**(1 + m)
    is the set of points agreeing on the window -m..m.
    """
    k = bi_first_difference(x, y)
    if k is None:
        return Fraction(0)
    # first difference at |l| = k means M = k - 1
    return p.ratio**k
